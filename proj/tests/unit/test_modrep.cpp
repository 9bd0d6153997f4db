#include "doctest.h"

#include <algorithm>
#include <set>

#include "brauerbox/error.hpp"
#include "brauerbox/ffla/field.hpp"
#include "brauerbox/modrep/meataxe.hpp"
#include "brauerbox/modrep/projective.hpp"
#include "brauerbox/modrep/rep_io.hpp"
#include "brauerbox/permgrp/action.hpp"
#include "brauerbox/permgrp/search.hpp"
#include "fixtures.hpp"

using namespace brauerbox;
using namespace brauerbox::modrep;
using brauerbox::ffla::FpMatrix;
using fixtures::brute_irreducible;
using fixtures::pc;

namespace {

MatRep natural(const GroupPtr& g, std::uint32_t p = 3) { return perm_rep(permgrp::natural_action(g), p); }

// Hom space dimension by solving M_g X = X N_g on all dm*dn unknowns at once.
std::size_t naive_hom_dim(const MatRep& m, const MatRep& n) {
  const std::size_t a = m.dim(), b = n.dim(), u = a * b;
  const auto& f = ffla::field(m.p());
  FpMatrix eqs(m.p(), 0, u);
  for (std::size_t g = 0; g < m.matrices().size(); ++g) {
    const auto& mg = m.matrix(g);
    const auto& ng = n.matrix(g);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) {
        // entry (i,j) of M X - X N
        ffla::Row row(u, 0);
        for (std::size_t k = 0; k < a; ++k)
          row[k * b + j] = static_cast<std::uint8_t>(f.add(row[k * b + j], mg.at(i, k)));
        for (std::size_t k = 0; k < b; ++k)
          row[i * b + k] = static_cast<std::uint8_t>(f.sub(row[i * b + k], ng.at(k, j)));
        eqs.append_row(row);
      }
  }
  return u - ffla::rank(eqs);
}

GroupPtr c3() { return fixtures::group(3, {"(1,2,3)"}); }
GroupPtr s4() { return fixtures::group(4, {"(1,2,3,4)", "(1,2)"}); }

} // namespace

TEST_CASE("perm_rep and evaluation") {
  auto g = fixtures::a8();
  auto v = natural(g);
  CHECK(v.dim() == 8);
  CHECK(is_permutation_rep(v));
  spot_check(v, 3, 50);
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    auto x = g->random_element(rng), y = g->random_element(rng);
    CHECK(evaluate(v, x * y) == evaluate(v, x) * evaluate(v, y));
    // permutation matrix of x sends e_i to e_{x(i)}
    auto m = evaluate(v, x);
    for (std::size_t i = 0; i < 8; ++i)
      CHECK(m.at(i, x[i]) == 1);
  }
  CHECK(evaluate(v, g->identity()).is_identity());
  CHECK_THROWS_AS(evaluate(v, pc("(1,2)", 8)), std::invalid_argument);
  auto one = perm_rep(permgrp::PermAction(g, std::vector<Perm>(2, Perm(1))), 3);
  CHECK(one.dim() == 1);
}

TEST_CASE("spin") {
  auto v = natural(fixtures::a8());
  CHECK(spin(v, FpMatrix::from_rows(3, {{1, 1, 1, 1, 1, 1, 1, 1}})).rows() == 1);
  CHECK(spin(v, FpMatrix::from_rows(3, {{1, 2, 0, 0, 0, 0, 0, 0}})).rows() == 7);
  CHECK(spin(v, FpMatrix::from_rows(3, {{1, 0, 0, 0, 0, 0, 0, 0}})).rows() == 8);
  auto rp = restrict(v, fixtures::p9());
  auto s = spin(rp, FpMatrix::from_rows(3, {{0, 0, 0, 0, 0, 0, 1, 2}}));
  CHECK(is_submodule(rp, s));
  CHECK(s.rows() == 1);
  CHECK(spin(rp, FpMatrix::from_rows(3, {{1, 0, 0, 0, 0, 0, 0, 0}})).rows() == 3);
}

TEST_CASE("hom spaces against the full linear system") {
  auto g = fixtures::a8();
  auto v = natural(g);
  auto k = trivial_rep(g, 3);
  CHECK(hom_space(v, k).size() == 1);
  CHECK(hom_space(k, v).size() == 1);
  CHECK(hom_space(v, v).size() == 2); // orbits on pairs
  for (const auto& h : hom_space(v, v))
    CHECK(is_hom(v, v, h));

  auto sym = s4();
  auto n4 = natural(sym);
  auto sign = linear_rep({sym, 3, {2, 2}});
  auto reg = perm_rep(permgrp::coset_action(sym, permgrp::trivial_group(4)), 3);
  std::vector<MatRep> mods{n4, sign, reg, dual(n4), direct_sum(n4, sign), tensor_linear(n4, {sym, 3, {2, 2}})};
  for (const auto& a : mods)
    for (const auto& b : mods) {
      auto hs = hom_space(a, b);
      CHECK(hs.size() == naive_hom_dim(a, b));
      for (const auto& h : hs)
        CHECK(is_hom(a, b, h));
    }
  // over F2 as well
  auto n2 = natural(sym, 2);
  CHECK(hom_space(n2, n2).size() == naive_hom_dim(n2, n2));
}

TEST_CASE("isomorphism tests") {
  auto g = fixtures::a8();
  auto v = natural(g);
  auto c = chop(v, 1);
  REQUIRE(c.factors.size() == 2);
  const auto& seven = c.factors[1].simple;
  CHECK(seven.dim() == 7);
  auto x = is_isomorphic(seven, dual(seven));
  REQUIRE(x);
  CHECK(is_hom(seven, dual(seven), *x));
  CHECK(ffla::rank(*x) == 7);
  CHECK(is_isomorphic(v, dual(v)));
  CHECK(is_isomorphic(dual(dual(v)), v));
  // Ind from A7 of the trivial module is the natural permutation module
  auto ind = induce(trivial_rep(fixtures::a7(), 3), g);
  CHECK(ind.dim() == 8);
  CHECK(is_isomorphic(ind, v));
  CHECK(is_isomorphic(induce(v, g), v));
  auto sym = s4();
  auto sign = linear_rep({sym, 3, {2, 2}});
  CHECK_FALSE(is_isomorphic(sign, trivial_rep(sym, 3)));
  CHECK(is_isomorphic(tensor_linear(natural(sym), {sym, 3, {1, 1}}), natural(sym)));
  auto b = FpMatrix::from_rows(3, {{1, 1, 0, 0}, {0, 1, 0, 2}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(is_isomorphic(change_basis(natural(sym), b), natural(sym)));
}

TEST_CASE("Frobenius reciprocity on small groups") {
  auto sym = s4();
  std::vector<GroupPtr> subs{fixtures::group(4, {"(1,2,3)", "(1,2)"}), fixtures::group(4, {"(1,2,3,4)"}),
                             fixtures::group(4, {"(1,2)(3,4)", "(1,3)(2,4)"}), fixtures::group(4, {"(1,2)"})};
  std::vector<MatRep> vs{natural(sym), linear_rep({sym, 3, {2, 2}}), dual(natural(sym))};
  for (const auto& h : subs) {
    std::vector<MatRep> ws{trivial_rep(h, 3), natural(h), tensor_linear(natural(h), {h, 3, std::vector<std::uint32_t>(h->generators().size(), 2)})};
    for (const auto& w : ws) {
      auto ind = induce(w, sym);
      CHECK(ind.dim() == w.dim() * (sym->order() / h->order()));
      for (const auto& v : vs)
        CHECK(hom_space(ind, v).size() == hom_space(w, restrict(v, h)).size());
    }
  }
}

TEST_CASE("irreducibility certificate agrees with exhaustive spinning") {
  auto sym = s4();
  std::vector<MatRep> mods{natural(sym), natural(sym, 2), natural(fixtures::group(4, {"(1,2,3,4)"}), 5),
                           linear_rep({sym, 3, {2, 2}})};
  auto c = chop(natural(sym), 0);
  for (const auto& f : c.factors)
    mods.push_back(f.simple);
  for (const auto& m : mods)
    for (std::uint64_t seed = 0; seed < 3; ++seed)
      CHECK(is_irreducible(m, seed) == brute_irreducible(m));
}

TEST_CASE("chop") {
  auto v = natural(fixtures::a8());
  std::set<std::vector<std::size_t>> seen;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto c = chop(v, seed);
    CHECK(c.total_dim() == 8);
    seen.insert(c.dims_with_multiplicity());
    REQUIRE(c.factors.size() == 2);
    CHECK(c.factors[0].multiplicity == 1);
    CHECK(c.factors[1].multiplicity == 1);
    CHECK(hom_space(c.factors[0].simple, trivial_rep(fixtures::a8(), 3)).size() == 1);
  }
  CHECK(seen == std::set<std::vector<std::size_t>>{{1, 7}});

  auto reg = natural(c3());
  auto cr = chop(reg, 2);
  REQUIRE(cr.factors.size() == 1);
  CHECK(cr.factors[0].multiplicity == 3);
  CHECK(cr.factors[0].simple.dim() == 1);

  // multiplicities against a fixed list of simples
  auto ca = chop(direct_sum(v, v), 3);
  auto cb = chop(v, 4);
  std::vector<MatRep> simples{cb.factors[1].simple, cb.factors[0].simple};
  CHECK(multiplicities(ca, simples) == std::vector<unsigned>{2, 2});

  // the 28-point module on 2-subsets: 1 + 7 + 7 + 13 over F3
  auto g = fixtures::a8();
  auto pair_stab = fixtures::group(8, {"(3,4,5)", "(3,4,5,6,7)", "(4,5,6,7,8)", "(1,2)(3,4)"});
  REQUIRE(pair_stab->order() == 720);
  auto m28 = perm_rep(permgrp::coset_action(g, pair_stab), 3);
  auto c28 = chop(m28, 5);
  CHECK(c28.total_dim() == 28);
  CHECK(c28.dims_with_multiplicity() == std::vector<std::size_t>{1, 7, 7, 13});
}

TEST_CASE("radical and socle series of the regular module of C3") {
  auto reg = natural(c3());
  const auto a = reg.matrix(0) - FpMatrix::identity(3, 3);
  auto rad = radical_series(reg, 0);
  CHECK(rad.layer_dims() == std::vector<std::size_t>{1, 1, 1});
  REQUIRE(rad.subspaces.size() == 4);
  for (std::size_t i = 0; i < 3; ++i) {
    auto expect = ffla::row_space(ffla::power(a, i));
    CHECK(ffla::same_row_space(rad.subspaces[i], expect));
  }
  CHECK(rad.subspaces[3].rows() == 0);
  auto soc = socle_series(reg, 0);
  CHECK(soc.layer_dims() == std::vector<std::size_t>{1, 1, 1});
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(ffla::same_row_space(soc.subspaces[i], ffla::left_nullspace(ffla::power(a, i + 1))));
}

TEST_CASE("semisimple modules have one radical layer") {
  auto v = natural(fixtures::a8());
  auto r = radical_series(v, 0);
  CHECK(r.layer_dims() == std::vector<std::size_t>{8});
  CHECK(socle_series(v, 0).layer_dims() == std::vector<std::size_t>{8});
  // over F2 the natural module of S4 is not semisimple
  auto n2 = natural(s4(), 2);
  auto r2 = radical_series(n2, 0);
  auto s2 = socle_series(n2, 0);
  std::size_t total = 0;
  for (auto d : r2.layer_dims())
    total += d;
  CHECK(total == 4);
  CHECK(r2.layers.size() > 1);
  // radical series of the dual mirrors the socle series
  auto rd = radical_series(dual(n2), 1);
  REQUIRE(rd.layers.size() == s2.layers.size());
  for (std::size_t i = 0; i < rd.layers.size(); ++i)
    CHECK(rd.layers[i].dims_with_multiplicity() == s2.layers[i].dims_with_multiplicity());
}

TEST_CASE("indecomposable summands") {
  auto g = fixtures::a8();
  auto v = natural(g);
  auto d = indecomposable_summands(v, 0);
  REQUIRE(d.summands.size() == 2);
  CHECK(d.summands[0].dim() == 1);
  CHECK(d.summands[1].dim() == 7);
  CHECK(is_isomorphic(change_basis(v, d.change_of_basis), direct_sum(d.summands[0], d.summands[1])));

  auto reg = natural(c3());
  CHECK(indecomposable_summands(reg, 0).summands.size() == 1);
  CHECK(endomorphism_ring_is_local(reg));

  auto vv = direct_sum(v, v);
  auto d2 = indecomposable_summands(vv, 1);
  std::vector<std::size_t> dims;
  for (const auto& s : d2.summands)
    dims.push_back(s.dim());
  CHECK(dims == std::vector<std::size_t>{1, 1, 7, 7});
  CHECK_FALSE(endomorphism_ring_is_local(direct_sum(reg, reg)));
  CHECK_FALSE(endomorphism_ring_is_local(direct_sum(trivial_rep(g, 3), trivial_rep(g, 3))));

  DecomposeOptions small;
  small.max_dim = 4;
  CHECK_THROWS_AS(indecomposable_summands(v, 0, small), BoundExceeded);
}

TEST_CASE("projectivity and vertices") {
  auto reg = natural(c3());
  CHECK(is_projective(reg));
  CHECK_FALSE(is_projective(trivial_rep(c3(), 3)));
  CHECK(vertex(reg)->order() == 1);
  CHECK(vertex(trivial_rep(c3(), 3))->order() == 3);
  CHECK(relatively_projective(reg, permgrp::trivial_group(3)));
  CHECK_FALSE(relatively_projective(trivial_rep(c3(), 3), permgrp::trivial_group(3)));

  auto sym = s4();
  auto reg4 = perm_rep(permgrp::coset_action(sym, permgrp::trivial_group(4)), 3);
  CHECK(is_projective(reg4));
  CHECK_FALSE(is_projective(trivial_rep(sym, 3)));
  CHECK(vertex(trivial_rep(sym, 3))->order() == 3);
  // point stabilizers have order divisible by 3; a Sylow 2-subgroup does not
  CHECK_FALSE(is_projective(natural(sym)));
  CHECK(is_projective(perm_rep(permgrp::coset_action(sym, fixtures::group(4, {"(1,2,3,4)", "(1,3)"})), 3)));
  // relative projectivity agrees with the norm criterion at Q = 1
  for (const auto& m : {reg4, natural(sym), trivial_rep(sym, 3), linear_rep({sym, 3, {2, 2}})})
    CHECK(relatively_projective(m, permgrp::trivial_group(4)) == is_projective(m));
  // k[G/H] is relatively H-projective
  auto h = fixtures::group(4, {"(1,3)", "(2,4)"});
  auto s2 = fixtures::group(4, {"(1,2)(3,4)"});
  auto d8 = fixtures::group(4, {"(1,2,3,4)", "(1,3)"});
  auto f2 = perm_rep(permgrp::coset_action(d8, s2), 2);
  CHECK(relatively_projective(f2, s2));
  CHECK_FALSE(relatively_projective(trivial_rep(d8, 2), h));
  CHECK(vertex(trivial_rep(d8, 2))->order() == 8);
}

TEST_CASE("representation files") {
  auto sym = s4();
  auto v = natural(sym);
  auto text = to_text(v);
  CHECK(text.rfind("matrep p=3 dim=4 gens=2\nfpmat p=3 rows=4 cols=4\n", 0) == 0);
  auto back = rep_from_text(text, sym);
  CHECK(back.matrices() == v.matrices());
  CHECK_THROWS_AS(rep_from_text("matrep p=3 dim=4 gens=1\n", sym), InputError);
  CHECK_THROWS_AS(rep_from_text("matrep p=3 dim=1 gens=2\nfpmat p=3 rows=1 cols=1\n1\nfpmat p=3 rows=1 cols=1\n0\n", sym),
                  InputError);
  // (1,2,3,4) -> 2 but (1,2) -> 1 does not respect the relations of S4
  CHECK_THROWS_AS(rep_from_text("matrep p=3 dim=1 gens=2\nfpmat p=3 rows=1 cols=1\n2\nfpmat p=3 rows=1 cols=1\n1\n", sym),
                  InputError);
  CHECK_NOTHROW(rep_from_text("matrep p=3 dim=1 gens=2\nfpmat p=3 rows=1 cols=1\n2\nfpmat p=3 rows=1 cols=1\n2\n", sym));
}
