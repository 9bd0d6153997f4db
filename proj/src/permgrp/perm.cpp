#include "brauerbox/permgrp/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "brauerbox/error.hpp"

namespace brauerbox::permgrp {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("image list is not a permutation");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Perm p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point x = cycle[i];
      if (x >= degree)
        throw std::invalid_argument("cycle point " + std::to_string(x + 1) + " exceeds degree " +
                                    std::to_string(degree));
      if (used[x])
        throw std::invalid_argument("point " + std::to_string(x + 1) + " repeated in cycles");
      used[x] = true;
      p.images_[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

Perm Perm::parse(const std::string& text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  if (i == text.size())
    throw InputError("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(')
      throw InputError("expected '(' in permutation '" + text + "'");
    ++i;
    std::vector<Point> cycle;
    skip_space();
    while (i < text.size() && text[i] != ')') {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i)
        throw InputError("expected point number in permutation '" + text + "'");
      const unsigned long v = std::stoul(text.substr(start, i - start));
      if (v == 0 || v > degree)
        throw InputError("point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
      cycle.push_back(static_cast<Point>(v - 1));
      skip_space();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_space();
      }
    }
    if (i == text.size())
      throw InputError("unterminated cycle in permutation '" + text + "'");
    ++i;
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_space();
  }
  try {
    return from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(e.what()) + " in '" + text + "'");
  }
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const {
  Perm inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

Perm Perm::pow(long long e) const {
  Perm base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Perm result(degree());
  while (n > 0) {
    if (n & 1)
      result = result * base;
    n >>= 1;
    if (n > 0)
      base = base * base;
  }
  return result;
}

std::uint64_t Perm::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycles())
    result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    std::vector<Point> c;
    for (Point x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::to_string() const {
  const auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? "," : "") << c[i] + 1;
    os << ')';
  }
  return os.str();
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  Perm c;
  c.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i)
    c.images_[i] = b.images_[a.images_[i]];
  return c;
}

Perm conjugate(const Perm& a, const Perm& g) { return g.inverse() * a * g; }

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

} // namespace brauerbox::permgrp
