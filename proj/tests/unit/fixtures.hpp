#pragma once

#include <set>
#include <string>
#include <vector>

#include "brauerbox/permgrp/group.hpp"
#include "brauerbox/modrep/module.hpp"
#include "brauerbox/permgrp/search.hpp"

namespace fixtures {

using brauerbox::permgrp::GroupPtr;
using brauerbox::permgrp::Perm;
using brauerbox::permgrp::PermGroup;

inline Perm pc(const std::string& s, std::size_t degree) { return Perm::parse(s, degree); }

inline GroupPtr group(std::size_t degree, const std::vector<std::string>& gens, std::uint64_t seed = 0) {
  std::vector<Perm> ps;
  for (const auto& g : gens)
    ps.push_back(pc(g, degree));
  return PermGroup::make(degree, ps, seed);
}

inline GroupPtr a8() { return group(8, {"(1,2,3)", "(2,3,4,5,6,7,8)"}); }
inline GroupPtr a7() { return group(8, {"(1,2,3)", "(1,2,3,4,5,6,7)"}); }
inline GroupPtr p9() { return group(8, {"(1,2,3)", "(4,5,6)"}); }
inline GroupPtr hprime() { return brauerbox::permgrp::normalizer(*a8(), *p9()); }

// closure of the generators by breadth-first multiplication
inline std::set<Perm> brute_elements(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> seen{Perm(degree)};
  std::vector<Perm> queue{Perm(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Perm x = queue[i] * g;
      if (seen.insert(x).second)
        queue.push_back(x);
    }
  return seen;
}

// spin every nonzero vector (small modules only)
inline bool brute_irreducible(const brauerbox::modrep::MatRep& rep) {
  const std::size_t n = rep.dim();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i)
    total *= rep.p();
  for (std::uint64_t code = 1; code < total; ++code) {
    brauerbox::ffla::FpMatrix v(rep.p(), 1, n);
    auto c = code;
    for (std::size_t i = 0; i < n; ++i, c /= rep.p())
      v.set(0, i, static_cast<std::int64_t>(c % rep.p()));
    if (brauerbox::modrep::spin(rep, v).rows() < n)
      return false;
  }
  return true;
}

} // namespace fixtures
