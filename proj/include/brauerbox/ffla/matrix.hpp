#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "brauerbox/ffla/field.hpp"

namespace brauerbox::ffla {

using Row = std::vector<std::uint8_t>;

/// Dense row-major matrix over F_p. Entries are always reduced.
class FpMatrix {
public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  static FpMatrix identity(std::uint32_t p, std::size_t n);
  /// Entries are reduced mod p; all rows must have equal length.
  static FpMatrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);
  static FpMatrix from_rows(std::uint32_t p, std::size_t cols, const std::vector<Row>& rows);

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t v) {
    data_[r * cols_ + c] = static_cast<std::uint8_t>(field(p_).reduce(v));
  }

  std::span<const std::uint8_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<std::uint8_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Row row_copy(std::size_t r) const { return Row(row(r).begin(), row(r).end()); }

  void append_row(std::span<const std::uint8_t> r);

  bool is_zero() const;
  bool is_identity() const;
  FpMatrix transpose() const;
  FpMatrix rows_range(std::size_t first, std::size_t count) const;
  FpMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
  std::uint32_t p_ = 3;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> data_;
};

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
FpMatrix scale(const FpMatrix& a, std::uint32_t c);
FpMatrix power(const FpMatrix& a, std::uint64_t e);

/// Row vector times matrix.
Row vec_mul(std::span<const std::uint8_t> v, const FpMatrix& m);

/// dst += c * src, entrywise mod p.
void axpy(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src, std::uint32_t c,
          const PrimeField& f);

struct Rref {
  FpMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

Rref rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

/// Basis (as rows) of {v : m * v^T = 0}.
FpMatrix nullspace(const FpMatrix& m);
/// Basis (as rows) of {v : v * m = 0}.
FpMatrix left_nullspace(const FpMatrix& m);

std::optional<FpMatrix> inverse(const FpMatrix& m);
FpMatrix inverse_or_throw(const FpMatrix& m);

FpMatrix vstack(const FpMatrix& top, const FpMatrix& bottom);
FpMatrix hstack(const FpMatrix& left, const FpMatrix& right);
/// Block diagonal sum.
FpMatrix block_diag(const FpMatrix& a, const FpMatrix& b);

/// Reduced echelon basis of the row space (zero rows dropped).
FpMatrix row_space(const FpMatrix& m);
FpMatrix intersect_row_spaces(const FpMatrix& a, const FpMatrix& b);
bool row_space_contains(const FpMatrix& space, const FpMatrix& vectors);
bool same_row_space(const FpMatrix& a, const FpMatrix& b);

/// Incrementally built subspace of F_p^n kept in reduced echelon form,
/// so coordinates of members are read off at the pivot columns.
class EchelonSpace {
public:
  EchelonSpace(std::uint32_t p, std::size_t n) : p_(p), n_(n) {}

  std::uint32_t p() const { return p_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }

  /// Reduces v against the basis in place; true if v became zero.
  bool reduce(std::span<std::uint8_t> v) const;
  bool contains(std::span<const std::uint8_t> v) const;
  /// Adds v to the space; returns false if v was already in it.
  bool insert(std::span<const std::uint8_t> v);
  /// Coordinates of a member with respect to basis(); precondition contains(v).
  Row coordinates(std::span<const std::uint8_t> v) const;

  const std::vector<std::size_t>& pivots() const { return pivots_; }
  FpMatrix basis() const;

private:
  std::uint32_t p_;
  std::size_t n_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivots_;
};

} // namespace brauerbox::ffla
