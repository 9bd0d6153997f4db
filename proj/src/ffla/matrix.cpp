#include "brauerbox/ffla/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace brauerbox::ffla {

namespace {

void require_same_p(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p())
    throw std::invalid_argument("modulus mismatch: " + std::to_string(a.p()) + " vs " +
                                std::to_string(b.p()));
}

// Each product term is < 251^2 < 2^16, so 2^16 terms fit in 32 bits.
constexpr std::size_t kDelayedTerms = 65536;

} // namespace

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  field(p);
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.data_[i * n + i] = 1 % p;
  return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m.set(r, c, rows[r][c]);
  }
  return m;
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, std::size_t cols, const std::vector<Row>& rows) {
  FpMatrix m(p, 0, cols);
  m.data_.reserve(rows.size() * cols);
  for (const auto& r : rows)
    m.append_row(r);
  return m;
}

void FpMatrix::append_row(std::span<const std::uint8_t> r) {
  if (r.size() != cols_)
    throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint8_t x) { return x == 0; });
}

bool FpMatrix::is_identity() const {
  if (!square())
    return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1u : 0u))
        return false;
  return true;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

FpMatrix FpMatrix::rows_range(std::size_t first, std::size_t count) const {
  return submatrix(first, 0, count, cols_);
}

FpMatrix FpMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw std::out_of_range("submatrix out of range");
  FpMatrix s(p_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0), nc,
                s.data_.begin() + static_cast<std::ptrdiff_t>(r * nc));
  return s;
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) {
  require_same_p(a, b);
  if (a.cols() != b.rows())
    throw std::invalid_argument("dimension mismatch in mat_mul: " + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()));
  const std::uint32_t p = a.p();
  FpMatrix c(p, a.rows(), b.cols());
  std::vector<std::uint32_t> acc(b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0u);
    std::size_t pending = 0;
    auto arow = a.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::uint32_t coef = arow[k];
      if (coef == 0)
        continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < brow.size(); ++j)
        acc[j] += coef * brow[j];
      if (++pending == kDelayedTerms) {
        for (auto& x : acc)
          x %= p;
        pending = 0;
      }
    }
    auto crow = c.row(i);
    for (std::size_t j = 0; j < crow.size(); ++j)
      crow[j] = static_cast<std::uint8_t>(acc[j] % p);
  }
  return c;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) { return mat_mul(a, b); }

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
  require_same_p(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("dimension mismatch in matrix addition");
  FpMatrix c = a;
  const auto& f = field(a.p());
  for (std::size_t r = 0; r < a.rows(); ++r)
    axpy(c.row(r), b.row(r), 1, f);
  return c;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
  require_same_p(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("dimension mismatch in matrix subtraction");
  FpMatrix c = a;
  const auto& f = field(a.p());
  for (std::size_t r = 0; r < a.rows(); ++r)
    axpy(c.row(r), b.row(r), f.neg(1), f);
  return c;
}

FpMatrix scale(const FpMatrix& a, std::uint32_t c) {
  FpMatrix s(a.p(), a.rows(), a.cols());
  const auto& f = field(a.p());
  for (std::size_t r = 0; r < a.rows(); ++r)
    axpy(s.row(r), a.row(r), c % a.p(), f);
  return s;
}

FpMatrix power(const FpMatrix& a, std::uint64_t e) {
  if (!a.square())
    throw std::invalid_argument("power of non-square matrix");
  FpMatrix result = FpMatrix::identity(a.p(), a.rows());
  FpMatrix base = a;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e > 0)
      base = base * base;
  }
  return result;
}

Row vec_mul(std::span<const std::uint8_t> v, const FpMatrix& m) {
  if (v.size() != m.rows())
    throw std::invalid_argument("dimension mismatch in vec_mul");
  const auto& f = field(m.p());
  Row out(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0)
      axpy(out, m.row(k), v[k], f);
  return out;
}

void axpy(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src, std::uint32_t c,
          const PrimeField& f) {
  if (c == 0)
    return;
  const std::uint8_t* table = f.mul_row(c);
  const std::uint32_t p = f.p();
  for (std::size_t i = 0; i < dst.size(); ++i) {
    std::uint32_t s = dst[i] + table[src[i]];
    dst[i] = static_cast<std::uint8_t>(s >= p ? s - p : s);
  }
}

Rref rref(const FpMatrix& m) {
  Rref out{m, 0, {}};
  FpMatrix& a = out.reduced;
  const auto& f = field(m.p());
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c) == 0)
      ++piv;
    if (piv == a.rows())
      continue;
    if (piv != r) {
      auto x = a.row(piv);
      auto y = a.row(r);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    const std::uint32_t inv = f.inv(a.at(r, c));
    if (inv != 1) {
      const std::uint8_t* t = f.mul_row(inv);
      for (auto& x : a.row(r))
        x = t[x];
    }
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (i != r && a.at(i, c) != 0)
        axpy(a.row(i), a.row(r), f.neg(a.at(i, c)), f);
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

FpMatrix nullspace(const FpMatrix& m) {
  const Rref rr = rref(m);
  const std::size_t n = m.cols();
  const auto& f = field(m.p());
  std::vector<bool> is_pivot(n, false);
  for (auto c : rr.pivots)
    is_pivot[c] = true;
  FpMatrix basis(m.p(), 0, n);
  Row v(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free])
      continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i)
      v[rr.pivots[i]] = static_cast<std::uint8_t>(f.neg(rr.reduced.at(i, free)));
    basis.append_row(v);
  }
  return basis;
}

FpMatrix left_nullspace(const FpMatrix& m) { return nullspace(m.transpose()); }

std::optional<FpMatrix> inverse(const FpMatrix& m) {
  if (!m.square())
    throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const Rref rr = rref(hstack(m, FpMatrix::identity(m.p(), n)));
  if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1))
    return std::nullopt;
  return rr.reduced.submatrix(0, n, n, n);
}

FpMatrix inverse_or_throw(const FpMatrix& m) {
  auto inv = inverse(m);
  if (!inv)
    throw std::domain_error("matrix is singular");
  return *inv;
}

FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom) {
  if (top.rows() == 0)
    return bottom;
  if (bottom.rows() == 0)
    return top;
  require_same_p(top, bottom);
  if (top.cols() != bottom.cols())
    throw std::invalid_argument("column mismatch in vstack");
  FpMatrix out = top;
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    out.append_row(bottom.row(r));
  return out;
}

FpMatrix hstack(const FpMatrix& left, const FpMatrix& right) {
  require_same_p(left, right);
  if (left.rows() != right.rows())
    throw std::invalid_argument("row mismatch in hstack");
  FpMatrix out(left.p(), left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    auto o = out.row(r);
    std::copy(left.row(r).begin(), left.row(r).end(), o.begin());
    std::copy(right.row(r).begin(), right.row(r).end(), o.begin() + static_cast<std::ptrdiff_t>(left.cols()));
  }
  return out;
}

FpMatrix block_diag(const FpMatrix& a, const FpMatrix& b) {
  require_same_p(a, b);
  FpMatrix out(a.p(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    std::copy(a.row(r).begin(), a.row(r).end(), out.row(r).begin());
  for (std::size_t r = 0; r < b.rows(); ++r)
    std::copy(b.row(r).begin(), b.row(r).end(),
              out.row(a.rows() + r).begin() + static_cast<std::ptrdiff_t>(a.cols()));
  return out;
}

FpMatrix row_space(const FpMatrix& m) {
  const Rref rr = rref(m);
  return rr.reduced.rows_range(0, rr.rank);
}

FpMatrix intersect_row_spaces(const FpMatrix& a, const FpMatrix& b) {
  require_same_p(a, b);
  const FpMatrix ra = row_space(a);
  const FpMatrix rb = row_space(b);
  if (ra.rows() == 0 || rb.rows() == 0)
    return FpMatrix(a.p(), 0, a.cols());
  // x*ra = y*rb  <=>  (x, y) in left kernel of [ra; -rb]
  const FpMatrix kernel = left_nullspace(vstack(ra, scale(rb, a.p() - 1)));
  FpMatrix xs = kernel.submatrix(0, 0, kernel.rows(), ra.rows());
  return row_space(xs * ra);
}

bool row_space_contains(const FpMatrix& space, const FpMatrix& vectors) {
  if (vectors.rows() == 0)
    return true;
  return rank(vstack(space, vectors)) == rank(space);
}

bool same_row_space(const FpMatrix& a, const FpMatrix& b) {
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(vstack(a, b));
}

bool EchelonSpace::reduce(std::span<std::uint8_t> v) const {
  const auto& f = field(p_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint32_t c = v[pivots_[i]];
    if (c != 0)
      axpy(v, rows_[i], f.neg(c), f);
  }
  return std::all_of(v.begin(), v.end(), [](std::uint8_t x) { return x == 0; });
}

bool EchelonSpace::contains(std::span<const std::uint8_t> v) const {
  Row w(v.begin(), v.end());
  return reduce(w);
}

bool EchelonSpace::insert(std::span<const std::uint8_t> v) {
  Row w(v.begin(), v.end());
  if (reduce(w))
    return false;
  const auto& f = field(p_);
  std::size_t piv = 0;
  while (w[piv] == 0)
    ++piv;
  const std::uint32_t inv = f.inv(w[piv]);
  const std::uint8_t* t = f.mul_row(inv);
  for (auto& x : w)
    x = t[x];
  for (auto& r : rows_)
    if (r[piv] != 0)
      axpy(r, w, f.neg(r[piv]), f);
  rows_.push_back(std::move(w));
  pivots_.push_back(piv);
  return true;
}

Row EchelonSpace::coordinates(std::span<const std::uint8_t> v) const {
  Row coords(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    coords[i] = v[pivots_[i]];
  return coords;
}

FpMatrix EchelonSpace::basis() const { return FpMatrix::from_rows(p_, n_, rows_); }

} // namespace brauerbox::ffla
