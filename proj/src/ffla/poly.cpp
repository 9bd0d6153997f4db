#include "brauerbox/ffla/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "brauerbox/rng.hpp"

namespace brauerbox::ffla {

namespace {

void require_same_p(const FpPoly& a, const FpPoly& b) {
  if (a.p() != b.p())
    throw std::invalid_argument("polynomial modulus mismatch");
}

// f(x) = g(x^p) in characteristic p; returns g.
FpPoly pth_root(const FpPoly& f) {
  const std::uint32_t p = f.p();
  std::vector<std::int64_t> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p))
    c.push_back(f.coeff(static_cast<std::size_t>(i)));
  return FpPoly(p, std::move(c));
}

void square_free(const FpPoly& f, unsigned scale, std::vector<PolyFactor>& out) {
  if (f.degree() < 1)
    return;
  const FpPoly g = f.derivative();
  if (g.is_zero()) {
    square_free(pth_root(f), scale * f.p(), out);
    return;
  }
  FpPoly c = gcd(f, g);
  FpPoly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    FpPoly y = gcd(w, c);
    FpPoly fac = w / y;
    if (fac.degree() > 0)
      out.push_back({fac.monic(), i * scale});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0)
    square_free(pth_root(c), scale * f.p(), out);
}

// x^(p^i) style Frobenius power of a mod m.
FpPoly frobenius(const FpPoly& a, const FpPoly& m) { return powmod(a, a.p(), m); }

FpPoly random_poly(std::uint32_t p, int below_degree, Rng& rng) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(below_degree));
  for (auto& x : c)
    x = static_cast<std::int64_t>(rng.below(p));
  return FpPoly(p, std::move(c));
}

// Splits a square-free product of irreducibles of degree d.
void equal_degree(const FpPoly& f, int d, Rng& rng, std::vector<FpPoly>& out) {
  const std::uint32_t p = f.p();
  const int n = f.degree();
  if (n == d) {
    out.push_back(f.monic());
    return;
  }
  std::vector<FpPoly> pending{f.monic()};
  std::vector<FpPoly> done;
  while (!pending.empty()) {
    FpPoly u = pending.back();
    pending.pop_back();
    if (u.degree() == d) {
      done.push_back(u);
      continue;
    }
    for (;;) {
      FpPoly a = random_poly(p, u.degree(), rng);
      if (a.degree() < 1)
        continue;
      FpPoly b(p);
      if (p == 2) {
        // a + a^2 + ... + a^(2^(d-1))
        FpPoly t = a % u;
        b = t;
        for (int i = 1; i < d; ++i) {
          t = mulmod(t, t, u);
          b = b + t;
        }
      } else {
        // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
        FpPoly t = a % u;
        FpPoly norm = t;
        for (int i = 1; i < d; ++i) {
          t = frobenius(t, u);
          norm = mulmod(norm, t, u);
        }
        b = powmod(norm, (p - 1) / 2, u) - FpPoly::constant(p, 1);
      }
      FpPoly g = gcd(b, u);
      if (g.degree() > 0 && g.degree() < u.degree()) {
        pending.push_back(g);
        pending.push_back((u / g).monic());
        break;
      }
    }
  }
  out.insert(out.end(), done.begin(), done.end());
}

} // namespace

FpPoly::FpPoly(std::uint32_t p, std::vector<std::int64_t> coefficients) : p_(p) {
  const auto& f = field(p);
  coeffs_.reserve(coefficients.size());
  for (auto c : coefficients)
    coeffs_.push_back(f.reduce(c));
  trim();
}

FpPoly FpPoly::constant(std::uint32_t p, std::int64_t c) { return FpPoly(p, {c}); }

FpPoly FpPoly::monomial(std::uint32_t p, std::size_t degree, std::int64_t c) {
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero())
    return *this;
  return scaled(field(p_).inv(leading()));
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
  FpPoly out(p_);
  const auto& f = field(p_);
  out.coeffs_.reserve(coeffs_.size());
  for (auto x : coeffs_)
    out.coeffs_.push_back(f.mul(x, c % p_));
  out.trim();
  return out;
}

FpPoly FpPoly::derivative() const {
  FpPoly out(p_);
  const auto& f = field(p_);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.coeffs_.push_back(f.mul(coeffs_[i], static_cast<std::uint32_t>(i % p_)));
  out.trim();
  return out;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  require_same_p(a, b);
  const auto& f = field(a.p_);
  FpPoly out(a.p_);
  out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
    out.coeffs_[i] = f.add(a.coeff(i), b.coeff(i));
  out.trim();
  return out;
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  require_same_p(a, b);
  const auto& f = field(a.p_);
  FpPoly out(a.p_);
  out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
    out.coeffs_[i] = f.sub(a.coeff(i), b.coeff(i));
  out.trim();
  return out;
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  require_same_p(a, b);
  FpPoly out(a.p_);
  if (a.is_zero() || b.is_zero())
    return out;
  std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      acc[i + j] += static_cast<std::uint64_t>(a.coeffs_[i]) * b.coeffs_[j];
  out.coeffs_.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i)
    out.coeffs_[i] = static_cast<std::uint32_t>(acc[i] % a.p_);
  out.trim();
  return out;
}

FpMatrix FpPoly::evaluate(const FpMatrix& m) const {
  if (!m.square())
    throw std::invalid_argument("polynomial evaluation at a non-square matrix");
  FpMatrix result(m.p(), m.rows(), m.cols());
  const FpMatrix id = FpMatrix::identity(m.p(), m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    result = result * m + scale(id, *it);
  return result;
}

std::uint32_t FpPoly::evaluate(std::uint32_t x) const {
  const auto& f = field(p_);
  std::uint32_t r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = f.add(f.mul(r, x % p_), *it);
  return r;
}

std::string FpPoly::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const auto c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0)
      continue;
    if (!first)
      os << " + ";
    first = false;
    if (i == 0 || c != 1)
      os << c;
    if (i >= 1)
      os << "x";
    if (i >= 2)
      os << "^" << i;
  }
  return os.str();
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  require_same_p(a, b);
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  const auto& f = field(a.p());
  const std::uint32_t inv_lead = f.inv(b.leading());
  std::vector<std::uint32_t> rem = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db)
    return {FpPoly(a.p()), a};
  std::vector<std::int64_t> quot(static_cast<std::size_t>(da - db + 1), 0);
  const auto& bc = b.coefficients();
  for (int k = da - db; k >= 0; --k) {
    const std::uint32_t c = f.mul(rem[static_cast<std::size_t>(k + db)], inv_lead);
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0)
      continue;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(k + j)];
      r = f.sub(r, f.mul(c, bc[static_cast<std::size_t>(j)]));
    }
  }
  std::vector<std::int64_t> r(rem.begin(), rem.end());
  return {FpPoly(a.p(), std::move(quot)), FpPoly(a.p(), std::move(r))};
}

FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divmod(a, b).first; }
FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a;
  FpPoly y = b;
  while (!y.is_zero()) {
    FpPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpPoly lcm(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero())
    return FpPoly(a.p());
  return (a * b / gcd(a, b)).monic();
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return (a * b) % m; }

FpPoly powmod(const FpPoly& a, std::uint64_t e, const FpPoly& m) {
  FpPoly result = FpPoly::constant(a.p(), 1) % m;
  FpPoly base = a % m;
  while (e > 0) {
    if (e & 1)
      result = mulmod(result, base, m);
    e >>= 1;
    if (e > 0)
      base = mulmod(base, base, m);
  }
  return result;
}

FpPoly min_poly(const FpMatrix& m) {
  if (!m.square())
    throw std::invalid_argument("min_poly of a non-square matrix");
  const std::uint32_t p = m.p();
  const std::size_t n = m.rows();
  const auto& f = field(p);
  FpPoly result = FpPoly::constant(p, 1);
  EchelonSpace covered(p, n);

  for (std::size_t i = 0; i < n; ++i) {
    Row e(n, 0);
    e[i] = 1;
    if (covered.contains(e))
      continue;
    // Krylov sequence e, eA, eA^2, ... in semi-echelon form; each stored
    // row carries the polynomial expressing it in the sequence.
    std::vector<Row> rows;
    std::vector<std::size_t> pivots;
    std::vector<std::vector<std::uint32_t>> tags;
    Row w = e;
    for (std::size_t k = 0;; ++k) {
      covered.insert(w);
      Row v = w;
      std::vector<std::uint32_t> tag(k + 1, 0);
      tag[k] = 1;
      for (std::size_t j = 0; j < rows.size(); ++j) {
        const std::uint32_t c = v[pivots[j]];
        if (c == 0)
          continue;
        const std::uint32_t nc = f.neg(c);
        axpy(v, rows[j], nc, f);
        for (std::size_t t = 0; t < tags[j].size(); ++t)
          tag[t] = f.add(tag[t], f.mul(nc, tags[j][t]));
      }
      std::size_t piv = 0;
      while (piv < n && v[piv] == 0)
        ++piv;
      if (piv == n) {
        std::vector<std::int64_t> c(tag.begin(), tag.end());
        result = lcm(result, FpPoly(p, std::move(c)));
        break;
      }
      const std::uint32_t inv = f.inv(v[piv]);
      for (auto& x : v)
        x = static_cast<std::uint8_t>(f.mul(x, inv));
      for (auto& t : tag)
        t = f.mul(t, inv);
      rows.push_back(std::move(v));
      pivots.push_back(piv);
      tags.push_back(std::move(tag));
      w = vec_mul(w, m);
    }
  }
  return result;
}

std::vector<PolyFactor> factor_poly(const FpPoly& f, std::uint64_t seed) {
  if (f.is_zero())
    throw std::invalid_argument("factor_poly of the zero polynomial");
  std::vector<PolyFactor> out;
  if (f.degree() == 0)
    return out;
  Rng rng(seed);
  std::vector<PolyFactor> sqf;
  square_free(f.monic(), 1, sqf);
  for (const auto& [part, mult] : sqf) {
    // distinct-degree
    FpPoly rest = part;
    FpPoly h = FpPoly::x(f.p()) % rest;
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
      h = frobenius(h, rest);
      FpPoly g = gcd(rest, h - FpPoly::x(f.p()));
      if (g.degree() > 0) {
        std::vector<FpPoly> pieces;
        equal_degree(g, d, rng, pieces);
        for (auto& q : pieces)
          out.push_back({q, mult});
        rest = rest / g;
        h = h % rest;
      }
    }
    if (rest.degree() > 0)
      out.push_back({rest.monic(), mult});
  }
  // merge equal factors coming from different square-free parts
  std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor.degree() != b.factor.degree())
      return a.factor.degree() < b.factor.degree();
    return a.factor.coefficients() < b.factor.coefficients();
  });
  std::vector<PolyFactor> merged;
  for (auto& pf : out) {
    if (!merged.empty() && merged.back().factor == pf.factor)
      merged.back().multiplicity += pf.multiplicity;
    else
      merged.push_back(pf);
  }
  return merged;
}

bool is_irreducible(const FpPoly& f) {
  if (f.degree() < 1)
    return false;
  auto fs = factor_poly(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

} // namespace brauerbox::ffla
