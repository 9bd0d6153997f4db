#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brauerbox/ffla/matrix.hpp"

namespace brauerbox::ffla {

/// Univariate polynomial over F_p, coefficients low degree first with no
/// trailing zeros (the zero polynomial has no coefficients).
class FpPoly {
public:
  explicit FpPoly(std::uint32_t p = 3) : p_(p) { field(p); }
  FpPoly(std::uint32_t p, std::vector<std::int64_t> coefficients);

  static FpPoly constant(std::uint32_t p, std::int64_t c);
  static FpPoly monomial(std::uint32_t p, std::size_t degree, std::int64_t c = 1);
  static FpPoly x(std::uint32_t p) { return monomial(p, 1); }

  std::uint32_t p() const { return p_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  std::uint32_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::uint32_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  const std::vector<std::uint32_t>& coefficients() const { return coeffs_; }

  FpPoly monic() const;
  FpPoly derivative() const;
  FpPoly scaled(std::uint32_t c) const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly&, const FpPoly&) = default;

  /// Horner evaluation at a square matrix.
  FpMatrix evaluate(const FpMatrix& m) const;
  std::uint32_t evaluate(std::uint32_t x) const;

  std::string to_string() const;

private:
  void trim();

  std::uint32_t p_;
  std::vector<std::uint32_t> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator/(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
/// Monic gcd (zero if both inputs are zero).
FpPoly gcd(const FpPoly& a, const FpPoly& b);
FpPoly lcm(const FpPoly& a, const FpPoly& b);
FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
FpPoly powmod(const FpPoly& a, std::uint64_t e, const FpPoly& m);

/// Monic polynomial of least degree annihilating the square matrix m.
FpPoly min_poly(const FpMatrix& m);

struct PolyFactor {
  FpPoly factor;
  unsigned multiplicity = 0;
};

/// Factorization into monic irreducibles (square-free, distinct-degree,
/// then equal-degree splitting driven by `seed`). Sorted by degree, then
/// coefficients. The leading coefficient of f is dropped.
std::vector<PolyFactor> factor_poly(const FpPoly& f, std::uint64_t seed = 0);

bool is_irreducible(const FpPoly& f);

} // namespace brauerbox::ffla
