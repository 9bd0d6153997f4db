#include "brauerbox/cli/local_data.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "brauerbox/blocks/blocks.hpp"
#include "brauerbox/modrep/meataxe.hpp"
#include "brauerbox/permgrp/action.hpp"

namespace brauerbox::cli {

using ffla::FpMatrix;

namespace {

ffla::Row digits(std::size_t i, std::uint32_t q, std::size_t d) {
  ffla::Row v(d);
  for (std::size_t k = 0; k < d; ++k) {
    v[k] = static_cast<std::uint8_t>(i % q);
    i /= q;
  }
  return v;
}

std::size_t index_of(const ffla::Row& v, std::uint32_t q) {
  std::size_t i = 0;
  for (std::size_t k = v.size(); k-- > 0;)
    i = i * q + v[k];
  return i;
}

void require(bool ok, const std::string& what, std::vector<std::string>& log) {
  if (!ok)
    throw std::logic_error("local data check failed: " + what);
  log.push_back(what);
}

std::vector<std::uint32_t> conjugated_values(const modrep::LinearCharacter& lambda, const Perm& d) {
  std::vector<std::uint32_t> out;
  for (const auto& x : lambda.group->generators())
    out.push_back(modrep::character_value(lambda, permgrp::conjugate(x, d.inverse())));
  return out;
}

} // namespace

Gl23 gl2_3() {
  Gl23 out;
  out.matrices = {
      FpMatrix::from_rows(3, {{2, 0}, {0, 1}}),
      FpMatrix::from_rows(3, {{1, 0}, {0, 2}}),
      FpMatrix::from_rows(3, {{0, 1}, {1, 0}}),
      FpMatrix::from_rows(3, {{1, 1}, {0, 1}}),
  };
  // point i-1 <-> nonzero vector with index i
  std::vector<Perm> gens;
  for (const auto& m : out.matrices) {
    std::vector<permgrp::Point> img(8);
    for (std::size_t i = 1; i < 9; ++i)
      img[i - 1] = static_cast<permgrp::Point>(index_of(ffla::vec_mul(digits(i, 3, 2), m), 3) - 1);
    gens.emplace_back(std::move(img));
  }
  out.group = permgrp::PermGroup::make(8, std::move(gens));
  return out;
}

std::vector<FpMatrix> line_module_matrices(const Gl23& gl) {
  const std::vector<ffla::Row> lines = {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
  auto line_of = [&](ffla::Row v) {
    const std::uint32_t s = v[0] != 0 ? v[0] : v[1];
    for (auto& x : v)
      x = static_cast<std::uint8_t>(x * (s == 2 ? 2 : 1) % 3);
    return static_cast<std::size_t>(std::find(lines.begin(), lines.end(), v) - lines.begin());
  };
  std::vector<FpMatrix> out;
  for (const auto& m : gl.matrices) {
    FpMatrix a(2, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      const auto j = line_of(ffla::vec_mul(lines[i], m));
      if (j < 3)
        a.set(i, j, 1);
      else
        for (std::size_t k = 0; k < 3; ++k)
          a.set(i, k, 1); // e4 = e1 + e2 + e3
    }
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<std::size_t> vector_orbit_lengths(const std::vector<FpMatrix>& mats) {
  if (mats.empty())
    return {};
  const std::uint32_t q = mats[0].p();
  const std::size_t d = mats[0].rows();
  std::size_t count = 1;
  for (std::size_t k = 0; k < d; ++k)
    count *= q;
  std::vector<bool> seen(count, false);
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < count; ++s) {
    if (seen[s])
      continue;
    std::vector<std::size_t> queue{s};
    seen[s] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& m : mats) {
        const auto j = index_of(ffla::vec_mul(digits(queue[i], q, d), m), q);
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    out.push_back(queue.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroupPtr reference_ntilde(std::uint64_t seed) {
  const auto gl = gl2_3();
  const auto& g = gl.group->generators();
  auto borel = permgrp::PermGroup::make(8, {g[0], g[1], g[3]}, seed);
  const auto one = FpMatrix::identity(2, 1);
  auto sd = permgrp::semidirect_product(
      {{3, 2, {gl.matrices[0], gl.matrices[1], gl.matrices[3]}}, {2, 1, {one, one, one}}}, borel, seed);
  return sd.group;
}

LocalGroups build_local_groups(std::uint64_t seed) {
  LocalGroups out;
  auto& log = out.checks;
  const auto gl = gl2_3();
  require(gl.group->order() == 48, "GL_2(3) has order 48", log);

  const auto emats = line_module_matrices(gl);
  std::vector<FpMatrix> dual_mats;
  for (const auto& m : emats)
    dual_mats.push_back(ffla::inverse_or_throw(m).transpose());
  require(vector_orbit_lengths(dual_mats) == std::vector<std::size_t>{1, 1, 6},
          "dual of the 2-part has vector orbits [1,1,6]", log);
  modrep::MatRep dual_rep(gl.group, 2, 3, dual_mats);
  const auto series = modrep::radical_series(dual_rep, seed);
  bool uniserial = series.layer_dims() == std::vector<std::size_t>{2, 1};
  for (const auto& layer : series.layers)
    uniserial = uniserial && layer.factors.size() == 1 && layer.factors[0].multiplicity == 1;
  require(uniserial, "dual of the 2-part is uniserial [2/1]", log);

  auto sd = permgrp::semidirect_product({{3, 2, gl.matrices}, {2, 3, emats}}, gl.group, seed);
  out.n = sd.group;
  require(out.n->order() == 3456, "N has order 3456", log);
  const auto& cg = sd.complement_generators;
  const auto& pg = sd.translation_generators[0];
  const auto& eg = sd.translation_generators[1];
  auto gens_of = [](std::initializer_list<std::vector<Perm>> parts) {
    std::vector<Perm> all;
    for (const auto& part : parts)
      all.insert(all.end(), part.begin(), part.end());
    return all;
  };
  const std::vector<Perm> d8g = {cg[0], cg[1], cg[2]};
  const std::vector<Perm> borel = {cg[0], cg[1], cg[3]};
  out.p = permgrp::subgroup(*out.n, pg, seed);
  out.e = permgrp::subgroup(*out.n, eg, seed);
  out.c = permgrp::subgroup(*out.n, gens_of({pg, eg}), seed);
  out.d8 = permgrp::subgroup(*out.n, d8g, seed);
  out.hprime = permgrp::subgroup(*out.n, gens_of({pg, d8g}), seed);
  out.h = permgrp::subgroup(*out.n, gens_of({pg, eg, d8g}), seed);
  require(out.hprime->order() == 72 && out.h->order() == 576, "H' copy has order 72 and H = C:D8 order 576", log);

  require(character_orbit_lengths(out.e, out.n) == std::vector<std::size_t>{1, 1, 6},
          "N has character orbits [1,1,6] on E", log);
  require(character_orbit_lengths(out.e, out.d8) == std::vector<std::size_t>{1, 1, 1, 1, 4},
          "D8 has character orbits [1,1,1,1,4] on E", log);

  // Borel conjugates inside the complement, times an involution of E
  const auto ref = permgrp::fingerprint(*reference_ntilde(seed));
  auto q = permgrp::subgroup(*out.n, cg, seed);
  auto b = permgrp::subgroup(*out.n, borel, seed);
  permgrp::CosetTable borels(q, b);
  for (const auto& x : borels.representatives())
    for (const auto& z : out.e->elements()) {
      if (z.is_identity())
        continue;
      std::vector<Perm> gens = pg;
      for (const auto& s : borel)
        gens.push_back(permgrp::conjugate(s, x));
      gens.push_back(z);
      auto cand = permgrp::subgroup(*out.n, gens, seed);
      ++out.ntilde_candidates;
      if (cand->order() != 216 || !(permgrp::fingerprint(*cand) == ref))
        continue;
      ++out.ntilde_matches;
      if (!out.ntilde)
        out.ntilde = cand;
      else if (!permgrp::conjugating_element(*out.n, *out.ntilde, *cand))
        throw std::logic_error("two non-conjugate order 216 subgroups share the fingerprint");
    }
  require(out.ntilde != nullptr, "an order 216 subgroup with the 2 x (3^2:D12) fingerprint exists", log);
  log.push_back("all " + std::to_string(out.ntilde_matches) + " matches are N-conjugate");
  return out;
}

std::vector<modrep::LinearCharacter> invariant_characters(const GroupPtr& e, const GroupPtr& by) {
  std::vector<modrep::LinearCharacter> out;
  for (const auto& lambda : blocks::linear_characters(e, 3)) {
    bool fixed = true;
    for (const auto& d : by->generators())
      fixed = fixed && conjugated_values(lambda, d) == lambda.values;
    if (fixed)
      out.push_back(lambda);
  }
  return out;
}

std::vector<modrep::LinearCharacter> block_characters(const LocalGroups& g) {
  const auto global = invariant_characters(g.e, g.n);
  std::vector<modrep::LinearCharacter> out;
  for (const auto& lambda : invariant_characters(g.e, g.d8)) {
    bool n_fixed = false;
    for (const auto& mu : global)
      n_fixed = n_fixed || mu.values == lambda.values;
    if (!n_fixed)
      out.push_back(lambda);
  }
  return out;
}

std::vector<std::size_t> character_orbit_lengths(const GroupPtr& e, const GroupPtr& by) {
  const auto chars = blocks::linear_characters(e, 3);
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < chars.size(); ++i)
    index[chars[i].values] = i;
  std::vector<bool> seen(chars.size(), false);
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < chars.size(); ++s) {
    if (seen[s])
      continue;
    std::vector<std::size_t> queue{s};
    seen[s] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& d : by->generators()) {
        const auto j = index.at(conjugated_values(chars[queue[i]], d));
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
      }
    out.push_back(queue.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace brauerbox::cli
