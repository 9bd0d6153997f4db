#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace brauerbox::permgrp {

/// 0-based point index. All text I/O is 1-based.
using Point = std::uint32_t;

/// Permutation of {0..degree-1}. Products act left to right:
/// i^(a*b) = (i^a)^b, matching right-module conventions throughout.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  /// Throws std::invalid_argument if images is not a bijection.
  explicit Perm(std::vector<Point> images);

  /// Cycles are given with 0-based points.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);
  /// Parses 1-based cycle notation such as "(1,2,3)(4,5)" or "()".
  /// Throws InputError on malformed text.
  static Perm parse(const std::string& text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  Perm pow(long long e) const;
  std::uint64_t order() const;
  /// Nontrivial cycles, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const;
  std::string to_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<Point> images_;
};

/// g^-1 * a * g.
Perm conjugate(const Perm& a, const Perm& g);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

} // namespace brauerbox::permgrp
