#include "brauerbox/ffla/field.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace brauerbox::ffla {

bool is_prime(std::uint32_t n) {
  if (n < 2)
    return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p > kMaxPrime)
    throw std::invalid_argument("field modulus must be a prime <= 251, got " + std::to_string(p));
  inverse_.assign(p, 0);
  mul_table_.resize(static_cast<std::size_t>(p) * p);
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      mul_table_[a * p + b] = static_cast<std::uint8_t>(a * b % p);
  for (std::uint32_t a = 1; a < p; ++a)
    for (std::uint32_t b = 1; b < p; ++b)
      if (a * b % p == 1) {
        inverse_[a] = b;
        break;
      }
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0)
    throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
  return inverse_[a % p_];
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1)
      result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

const PrimeField& field(std::uint32_t p) {
  static std::array<std::unique_ptr<PrimeField>, kMaxPrime + 1> cache;
  static std::mutex guard;
  if (p > kMaxPrime || !is_prime(p))
    throw std::invalid_argument("field modulus must be a prime <= 251, got " + std::to_string(p));
  std::lock_guard lock(guard);
  if (!cache[p])
    cache[p] = std::make_unique<PrimeField>(p);
  return *cache[p];
}

} // namespace brauerbox::ffla
