// Acceptance checks: one PASS/FAIL line per criterion, exit status 0 only
// if every criterion passes within its time limit.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brauerbox/blocks/blocks.hpp"
#include "brauerbox/brauer/brauer.hpp"
#include "brauerbox/cli/files.hpp"
#include "brauerbox/cli/scenarios.hpp"
#include "brauerbox/ffla/poly.hpp"
#include "brauerbox/modrep/meataxe.hpp"
#include "brauerbox/modrep/module.hpp"
#include "brauerbox/modrep/projective.hpp"
#include "brauerbox/permgrp/action.hpp"
#include "brauerbox/permgrp/search.hpp"
#include "brauerbox/rng.hpp"

using namespace brauerbox;
using ffla::FpMatrix;
using ffla::FpPoly;
using modrep::MatRep;
using permgrp::GroupPtr;
using permgrp::Perm;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
};

GroupPtr make(std::size_t degree, const std::vector<std::string>& gens) {
  std::vector<Perm> ps;
  for (const auto& g : gens)
    ps.push_back(Perm::parse(g, degree));
  return permgrp::PermGroup::make(degree, std::move(ps));
}

GroupPtr a8() { return make(8, {"(1,2,3)", "(2,3,4,5,6,7,8)"}); }

GroupPtr random_subgroup(const GroupPtr& g, Rng& rng, int gens) {
  std::vector<Perm> xs;
  for (int i = 0; i < gens; ++i)
    xs.push_back(g->random_element(rng));
  return permgrp::subgroup(*g, xs);
}

std::string observed(const cli::ScenarioResult& r, const std::string& key) {
  for (const auto& c : r.checks)
    if (c.name == key)
      return c.observed.dump();
  return "?";
}

cli::ScenarioResult scenario(const std::string& name) {
  const auto dir = cli::data_directory();
  return cli::run_scenario(cli::named_scenario(name, dir), dir);
}

Verdict scenario_verdict(const cli::ScenarioResult& r, const std::vector<std::string>& shown) {
  Verdict v;
  for (const auto& c : r.checks)
    v.require(c.pass, c.name + " = " + c.observed.dump() + ", expected " + c.expected.dump());
  if (v.pass)
    for (const auto& k : shown)
      v.detail += (v.detail.empty() ? "" : ", ") + k + " = " + observed(r, k);
  return v;
}

// ---- criterion 2 ----

Verdict cross_methods() {
  Verdict v;
  auto g = a8();
  auto p = make(8, {"(1,2,3)", "(4,5,6)"});
  auto h = permgrp::normalizer(*g, *p);
  const auto omega = modrep::perm_rep(permgrp::natural_action(g), 3);
  const auto fast = brauer::green_trivial_source(omega, p, h);
  const auto generic = brauer::brauer_quotient(omega, p, h).quotient_rep;
  const auto kept = brauer::split_by_vertex(omega, p, h, 0).kept;
  v.require(!kept.empty(), "strip pipeline keeps a summand");
  if (!v.pass)
    return v;
  MatRep strip = kept[0];
  for (std::size_t i = 1; i < kept.size(); ++i)
    strip = modrep::direct_sum(strip, kept[i]);
  v.require(brauer::trivial_source_fast_path(omega, h), "fast path applies");
  v.require(fast.dim() == 2 && generic.dim() == 2 && strip.dim() == 2, "all three have dim 2");
  v.require(modrep::is_isomorphic(fast, generic).has_value(), "fast path ~ generic");
  v.require(modrep::is_isomorphic(fast, strip).has_value(), "fast path ~ strip");
  v.require(modrep::is_isomorphic(generic, strip).has_value(), "generic ~ strip");

  const auto labels = blocks::label_linear_characters(h, 3);
  const auto c = modrep::chop(omega, 0);
  std::map<std::size_t, std::string> green;
  for (const auto& f : c.factors) {
    auto gr = brauer::green_correspondent(f.simple, p, h, 0);
    green[f.simple.dim()] = gr.correspondent.dim() == 1 ? blocks::label_of(gr.correspondent, labels) : "?";
  }
  v.require(green[1] == "1a", "f'(1) = 1a");
  v.require(green[7] == "1b", "f'(7) = 1b");
  if (v.pass)
    v.detail = "three methods pairwise isomorphic, f'(1) = " + green[1] + ", f'(7) = " + green[7];
  return v;
}

// ---- criterion 5 ----

// cosets Hx with x k x^-1 in H for every generator k of K
std::uint64_t direct_fixed_cosets(const GroupPtr& g, const GroupPtr& h, const GroupPtr& k) {
  permgrp::CosetTable table(g, h);
  std::uint64_t count = 0;
  for (const auto& x : table.representatives()) {
    bool fixed = true;
    for (const auto& y : k->generators())
      fixed = fixed && h->contains(x * y * x.inverse());
    count += fixed;
  }
  return count;
}

Verdict marks_suite() {
  Verdict v;
  const std::vector<GroupPtr> pool = {
      make(3, {"(1,2,3)", "(1,2)"}),
      make(4, {"(1,2,3,4)", "(1,3)"}),
      make(4, {"(1,2,3)", "(2,3,4)"}),
      make(4, {"(1,2,3,4)", "(1,2)"}),
      make(5, {"(1,2,3,4,5)", "(2,3,5,4)"}),
      make(5, {"(1,2,3,4,5)", "(1,2,3)"}),
      make(5, {"(1,2,3,4,5)", "(1,2)"}),
      make(6, {"(1,2,3)", "(2,3,4,5,6)"}),
      make(6, {"(1,2,3,4,5,6)", "(1,2)"}),
      make(6, {"(1,2,3)", "(1,2)", "(1,4)(2,5)(3,6)"}),
      make(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"}),
      make(7, {"(1,2,3,4,5,6,7)", "(2,4,3,7,5,6)"}),
      make(8, {"(1,2,3)", "(4,5,6)", "(1,2)(4,5)", "(1,4)(2,5)(3,6)(7,8)"}),
  };
  for (const auto& g : pool)
    v.require(g->order() <= 720, "pool group of order " + std::to_string(g->order()) + " within 720");
  Rng rng(5);
  std::size_t nonzero = 0;
  for (int t = 0; t < 100; ++t) {
    const auto& g = pool[rng.below(pool.size())];
    auto h = random_subgroup(g, rng, 1 + static_cast<int>(rng.below(2)));
    GroupPtr k;
    if (rng.below(2) == 0) {
      // a conjugate of a subgroup of H, so that fixed cosets exist
      auto x = g->random_element(rng);
      auto y = h->random_element(rng);
      k = permgrp::subgroup(*g, {permgrp::conjugate(y, x)});
    } else {
      k = random_subgroup(g, rng, 1);
    }
    const auto direct = direct_fixed_cosets(g, h, k);
    const auto marks = brauer::marks_count(g, h, k);
    nonzero += direct > 0;
    if (marks != direct) {
      v.require(false, "instance " + std::to_string(t) + ": marks " + std::to_string(marks) + " vs direct " +
                           std::to_string(direct));
    }
  }
  if (v.pass)
    v.detail = "100 triples agree (" + std::to_string(nonzero) + " with fixed cosets)";
  return v;
}

// ---- criterion 6 ----

Verdict invariant_suites() {
  Verdict v;
  const auto dir = cli::data_directory();
  auto g = a8();
  auto p = make(8, {"(1,2,3)", "(4,5,6)"});
  auto h = permgrp::normalizer(*g, *p);
  const auto omega8 = modrep::perm_rep(permgrp::natural_action(g), 3);
  const auto omega28 = modrep::perm_rep(cli::subset_action(g, 2), 3);
  const auto n = cli::load_group(dir + "/n.grp");
  const auto ntilde = cli::load_subgroup(n, dir + "/ntilde.grp");
  const auto np = cli::load_subgroup(n, dir + "/n-p.grp");
  const auto omega16 = modrep::perm_rep(permgrp::coset_action(n, ntilde), 3);
  const auto quotient8 = brauer::brauer_quotient(omega8, p, h).quotient_rep;

  MatRep correspondent13 = quotient8;
  for (const auto& f : modrep::chop(omega28, 0).factors)
    if (f.simple.dim() == 13)
      correspondent13 = brauer::green_correspondent(f.simple, p, h, 0).correspondent;
  v.require(correspondent13.dim() == 4, "Green correspondent of 13 found");

  // chop: dimensions add up and the constituents do not depend on the seed
  std::size_t chops = 0;
  for (const MatRep* m : std::vector<const MatRep*>{&omega8, &omega28, &omega16, &quotient8, &correspondent13}) {
    const auto ref = modrep::chop(*m, 0);
    std::vector<MatRep> simples;
    std::vector<unsigned> mult;
    for (const auto& f : ref.factors) {
      simples.push_back(f.simple);
      mult.push_back(f.multiplicity);
    }
    v.require(ref.total_dim() == m->dim(), "chop conserves dimension");
    for (std::uint64_t seed = 1; seed < 5; ++seed) {
      const auto c = modrep::chop(*m, seed);
      v.require(c.total_dim() == m->dim(), "chop conserves dimension");
      v.require(c.dims_with_multiplicity() == ref.dims_with_multiplicity(), "chop dims independent of the seed");
      v.require(c.factors.size() == ref.factors.size() && modrep::multiplicities(c, simples) == mult,
                "chop iso classes independent of the seed");
      ++chops;
    }
  }

  // Brauer quotient of a direct sum
  {
    const auto a = brauer::brauer_quotient(omega8, p, h).quotient_rep;
    const auto b = brauer::brauer_quotient(omega28, p, h).quotient_rep;
    const auto ab = brauer::brauer_quotient(modrep::direct_sum(omega8, omega28), p, h).quotient_rep;
    v.require(modrep::is_isomorphic(ab, modrep::direct_sum(a, b)).has_value(), "additivity on 8 + 28");
    const auto nn = permgrp::normalizer(*n, *np);
    const auto c = brauer::brauer_quotient(omega16, np, nn).quotient_rep;
    const auto t = modrep::trivial_rep(n, 3);
    const auto d = brauer::brauer_quotient(t, np, nn).quotient_rep;
    const auto cd = brauer::brauer_quotient(modrep::direct_sum(omega16, t), np, nn).quotient_rep;
    v.require(modrep::is_isomorphic(cd, modrep::direct_sum(c, d)).has_value(), "additivity on 16 + 1");
  }

  // trace transitivity along random chains R <= Q <= T of p-subgroups
  std::size_t chains = 0;
  {
    Rng rng(11);
    struct Case {
      GroupPtr g;
      std::uint32_t p;
    };
    const std::vector<Case> cases = {{make(6, {"(1,2,3,4,5,6)", "(1,2)"}), 3},
                                     {make(4, {"(1,2,3,4)", "(1,2)"}), 2},
                                     {g, 3}};
    for (const auto& cs : cases) {
      auto s = permgrp::sylow(cs.g, cs.p);
      auto subs = permgrp::subgroups_p_group(s, cs.p);
      for (int t = 0; t < 10; ++t) {
        // the module is a permutation module on at most 120 cosets
        auto sub = random_subgroup(cs.g, rng, 2);
        if (cs.g->order() / sub->order() > 120) {
          --t;
          continue;
        }
        auto m = modrep::perm_rep(permgrp::coset_action(cs.g, sub), cs.p);
        const auto& top = subs[rng.below(subs.size())];
        std::vector<GroupPtr> mids;
        for (const auto& q : subs)
          if (top->contains_group(*q))
            mids.push_back(q);
        const auto& mid = mids[rng.below(mids.size())];
        std::vector<GroupPtr> lows;
        for (const auto& r : subs)
          if (mid->contains_group(*r))
            lows.push_back(r);
        const auto& low = lows[rng.below(lows.size())];
        const auto fixed = brauer::fixed_points(m, low);
        const auto step = brauer::relative_trace(m, low, mid, fixed);
        const auto two = brauer::relative_trace(m, mid, top, step);
        const auto one = brauer::relative_trace(m, low, top, fixed);
        v.require(ffla::same_row_space(one, two), "Tr_Q^T Tr_R^Q = Tr_R^T");
        ++chains;
      }
    }
  }

  // Frobenius reciprocity on both sides
  std::size_t frob = 0;
  {
    Rng rng(17);
    const std::vector<GroupPtr> pool = {make(4, {"(1,2,3,4)", "(1,2)"}), make(5, {"(1,2,3,4,5)", "(2,3,5,4)"}),
                                        make(5, {"(1,2,3,4,5)", "(1,2,3)"}), make(4, {"(1,2,3,4)", "(1,3)"}),
                                        make(6, {"(1,2,3)", "(1,2)", "(1,4)(2,5)(3,6)"})};
    while (frob < 50) {
      const auto& gg = pool[rng.below(pool.size())];
      const std::uint32_t q = rng.below(2) ? 3 : 2;
      auto hh = random_subgroup(gg, rng, 1 + static_cast<int>(rng.below(2)));
      auto l = random_subgroup(hh, rng, 1);
      auto mm = random_subgroup(gg, rng, 1);
      const auto index_l = gg->order() / l->order();
      const auto index_m = gg->order() / mm->order();
      if (index_l > 60 || index_m > 60 || hh->is_trivial())
        continue;
      auto w = modrep::perm_rep(permgrp::coset_action(hh, l), q);
      auto vv = modrep::perm_rep(permgrp::coset_action(gg, mm), q);
      auto ind = modrep::induce(w, gg);
      auto res = modrep::restrict(vv, hh);
      v.require(ind.dim() == w.dim() * (gg->order() / hh->order()), "induced dimension");
      v.require(modrep::hom_space(ind, vv).size() == modrep::hom_space(w, res).size(), "Hom(Ind W, V) = Hom(W, Res V)");
      v.require(modrep::hom_space(vv, ind).size() == modrep::hom_space(res, w).size(), "Hom(V, Ind W) = Hom(Res V, W)");
      ++frob;
    }
  }

  // idempotents of k[2^3] over F_3
  {
    auto e = make(6, {"(1,2)", "(3,4)", "(5,6)"});
    auto big = make(6, {"(1,2)", "(3,4)", "(5,6)", "(1,3,5)(2,4,6)"});
    const auto chars = blocks::linear_characters(e, 3);
    v.require(chars.size() == 8, "eight characters of 2^3");
    std::vector<blocks::GroupAlgebraElement> idems;
    for (const auto& c : chars)
      idems.push_back(blocks::idempotent_from_character(c));
    auto total = blocks::GroupAlgebraElement{e, 3, {}};
    for (std::size_t i = 0; i < idems.size(); ++i) {
      v.require(idems[i] * idems[i] == idems[i], "idempotent");
      for (std::size_t j = 0; j < idems.size(); ++j)
        if (i != j)
          v.require((idems[i] * idems[j]).coeffs.empty(), "orthogonal");
      total = total + idems[i];
    }
    v.require(total == blocks::GroupAlgebraElement::one(e, 3), "sum is 1");
    for (const auto& m : {modrep::perm_rep(permgrp::natural_action(e), 3),
                          modrep::perm_rep(permgrp::coset_action(e, permgrp::trivial_group(6)), 3)}) {
      std::size_t sum = 0;
      for (const auto& x : idems)
        sum += blocks::project(m, x, e).rep.dim();
      v.require(sum == m.dim(), "projection dimensions add up");
    }
    // idempotents fixed by the 3-cycle: projecting over 2^3:3 and over 2^3 agree
    const auto nat = modrep::perm_rep(permgrp::natural_action(big), 3);
    for (const auto& x : idems) {
      bool stable = true;
      for (const auto& y : big->generators())
        stable = stable && x.conjugate(y) == x;
      if (!stable)
        continue;
      auto up = blocks::project(nat, x, big);
      auto down = blocks::project(modrep::restrict(nat, e), x, e);
      v.require(ffla::same_row_space(up.basis, down.basis), "projection commutes with restriction");
    }
  }
  if (v.pass)
    v.detail = std::to_string(chops) + " reseeded chops, additivity x2, " + std::to_string(chains) +
               " trace chains, " + std::to_string(frob) + " reciprocity instances, 2^3 idempotents";
  return v;
}

// ---- criterion 7 ----

FpMatrix random_matrix(Rng& rng, std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.set(i, j, static_cast<std::int64_t>(rng.below(p)));
  return m;
}

// det(xI - A) by cofactor expansion along the first row
FpPoly cofactor_det(const std::vector<std::vector<FpPoly>>& a) {
  const auto n = a.size();
  const auto p = a[0][0].p();
  if (n == 1)
    return a[0][0];
  FpPoly sum(p);
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero())
      continue;
    std::vector<std::vector<FpPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<FpPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j)
          row.push_back(a[r][c]);
      minor.push_back(row);
    }
    auto term = a[0][j] * cofactor_det(minor);
    sum = j % 2 ? sum - term : sum + term;
  }
  return sum;
}

FpPoly charpoly(const FpMatrix& m) {
  const auto p = m.p();
  std::vector<std::vector<FpPoly>> a(m.rows(), std::vector<FpPoly>(m.rows(), FpPoly(p)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j)
      a[i][j] = (i == j ? FpPoly::x(p) : FpPoly(p)) - FpPoly::constant(p, m.at(i, j));
  return cofactor_det(a);
}

// every monic polynomial of degree d, in a fixed order
std::vector<FpPoly> monics(std::uint32_t p, int d) {
  std::size_t total = 1;
  for (int i = 0; i < d; ++i)
    total *= p;
  std::vector<FpPoly> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::int64_t> c(d + 1);
    for (int i = 0, x = static_cast<int>(code); i < d; ++i, x /= static_cast<int>(p))
      c[i] = x % p;
    c[d] = 1;
    out.emplace_back(p, c);
  }
  return out;
}

// least-degree monic divisor of the characteristic polynomial killing m
FpPoly brute_min_poly(const FpMatrix& m) {
  const auto chi = charpoly(m);
  for (int d = 1; d <= chi.degree(); ++d)
    for (const auto& f : monics(m.p(), d))
      if ((chi % f).is_zero() && f.evaluate(m).is_zero())
        return f;
  return chi;
}

// trial division by monic polynomials of increasing degree
std::vector<ffla::PolyFactor> brute_factor(FpPoly f) {
  std::vector<ffla::PolyFactor> out;
  f = f.monic();
  for (int d = 1; 2 * d <= f.degree(); ++d)
    for (const auto& g : monics(f.p(), d)) {
      unsigned mult = 0;
      while (f.degree() >= d && (f % g).is_zero()) {
        f = f / g;
        ++mult;
      }
      if (mult)
        out.push_back({g, mult});
    }
  if (f.degree() > 0) {
    bool merged = false;
    for (auto& x : out)
      if (x.factor == f) {
        ++x.multiplicity;
        merged = true;
      }
    if (!merged)
      out.push_back({f, 1});
  }
  std::sort(out.begin(), out.end(), [](const ffla::PolyFactor& a, const ffla::PolyFactor& b) {
    if (a.factor.degree() != b.factor.degree())
      return a.factor.degree() < b.factor.degree();
    return a.factor.coefficients() < b.factor.coefficients();
  });
  return out;
}

Verdict ffla_suite() {
  Verdict v;
  Rng rng(23);
  const std::uint32_t primes[] = {2, 3, 5};
  std::size_t mins = 0, factors = 0;
  for (int t = 0; t < 200; ++t) {
    const auto p = primes[rng.below(3)];
    // min_poly
    const auto n = 1 + rng.below(6);
    FpMatrix m = random_matrix(rng, p, n);
    if (t % 3 == 0) {
      // repeated eigenvalues make the minimal polynomial a proper divisor
      FpMatrix d(p, n, n);
      for (std::size_t i = 0; i < n; ++i)
        d.set(i, i, static_cast<std::int64_t>(rng.below(2)));
      auto b = random_matrix(rng, p, n);
      if (auto bi = ffla::inverse(b))
        m = b * d * *bi;
    }
    const auto got = ffla::min_poly(m);
    const auto want = brute_min_poly(m);
    if (!(got == want))
      v.require(false, "min_poly of a " + std::to_string(n) + "x" + std::to_string(n) + " matrix over F_" +
                           std::to_string(p) + ": " + got.to_string() + " vs " + want.to_string());
    ++mins;

    // factor_poly
    const int deg = 1 + static_cast<int>(rng.below(12));
    std::vector<std::int64_t> c(deg + 1);
    for (auto& x : c)
      x = static_cast<std::int64_t>(rng.below(p));
    c[deg] = 1 + static_cast<std::int64_t>(rng.below(p - 1));
    FpPoly f(p, c);
    if (t % 4 == 0 && deg <= 6)
      f = f * f; // force repeated factors
    const auto fac = ffla::factor_poly(f, static_cast<std::uint64_t>(t));
    const auto ref = brute_factor(f);
    bool same = fac.size() == ref.size();
    for (std::size_t i = 0; same && i < fac.size(); ++i)
      same = fac[i].factor == ref[i].factor && fac[i].multiplicity == ref[i].multiplicity;
    if (!same)
      v.require(false, "factor_poly of " + f.to_string() + " over F_" + std::to_string(p));
    ++factors;
  }
  if (v.pass)
    v.detail = std::to_string(mins) + " minimal polynomials and " + std::to_string(factors) + " factorizations agree";
  return v;
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Verdict()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "a8-green: V(P) of F3[Omega8] is 1a + 1b", 10,
       [] {
         return scenario_verdict(scenario("a8-green"),
                                 {"p_order", "hprime_order", "quotient_dim", "quotient_labels"});
       }},
      {2, "cross-method agreement and f'(1) = 1a, f'(7) = 1b", 30, cross_methods},
      {3, "a8-f13: Green correspondent of 13 is uniserial [1,2,1]", 120,
       [] {
         return scenario_verdict(scenario("a8-f13"), {"correspondent_dim", "radical_layers", "head_is_socle"});
       }},
      {4, "j4-local: two 6-dim constituents, projections 1a+1a and 1c+1d", 60,
       [] {
         return scenario_verdict(scenario("j4-local"),
                                 {"domain_size", "six_dim_constituents", "six_dim_multiplicities", "projections"});
       }},
      {5, "marks formula on 100 random triples", 60, marks_suite},
      {6, "invariant suites", 120, invariant_suites},
      {7, "ffla kernels against brute-force oracles", 30, ffla_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      v.pass = false;
      v.detail += " (took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s)";
    }
    char time_buf[32];
    std::snprintf(time_buf, sizeof time_buf, "%.2f", secs);
    std::cout << "criterion " << c.number << ": " << (v.pass ? "PASS" : "FAIL") << " | " << c.name << " | "
              << v.detail << " | " << time_buf << " s" << std::endl;
    failed += !v.pass;
  }
  return failed == 0 ? 0 : 1;
}
