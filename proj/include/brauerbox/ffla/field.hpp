#pragma once

#include <cstdint>
#include <vector>

namespace brauerbox::ffla {

inline constexpr std::uint32_t kMaxPrime = 251;

bool is_prime(std::uint32_t n);

/// Arithmetic in the prime field F_p, p <= 251. Elements are plain
/// integers in [0, p).
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t reduce(std::int64_t a) const {
    auto r = a % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return (a * b) % p_; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  // products c*x for x in [0, p), as a lookup row
  const std::uint8_t* mul_row(std::uint32_t c) const { return &mul_table_[c * p_]; }

private:
  std::uint32_t p_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint8_t> mul_table_;
};

/// Shared field instance; throws std::invalid_argument unless p is a prime <= 251.
const PrimeField& field(std::uint32_t p);

struct FpScalar {
  std::uint32_t value = 0;
  std::uint32_t p = 3;

  static FpScalar make(std::int64_t v, std::uint32_t p) { return {field(p).reduce(v), p}; }
  friend bool operator==(const FpScalar&, const FpScalar&) = default;
};

} // namespace brauerbox::ffla
