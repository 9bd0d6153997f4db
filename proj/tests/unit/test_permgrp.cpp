#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "brauerbox/error.hpp"
#include "brauerbox/permgrp/action.hpp"
#include "brauerbox/permgrp/construct.hpp"
#include "brauerbox/permgrp/search.hpp"
#include "fixtures.hpp"

using namespace brauerbox;
using namespace brauerbox::permgrp;
using fixtures::pc;

TEST_CASE("cycle notation round trip and errors") {
  auto x = pc("(1,2,3)(4,5,6)", 8);
  CHECK(x.to_string() == "(1,2,3)(4,5,6)");
  CHECK(x.order() == 3);
  CHECK(pc("()", 5).is_identity());
  CHECK(pc(" (1, 2) (3,4) ", 4).to_string() == "(1,2)(3,4)");
  CHECK_THROWS_AS(pc("(1,9)", 8), InputError);
  CHECK_THROWS_AS(pc("(1,2", 8), InputError);
  CHECK_THROWS_AS(pc("(1,2)(2,3)", 8), InputError);
  CHECK_THROWS_AS(pc("1,2", 8), InputError);
  // left-to-right products
  auto a = pc("(1,2)", 3), b = pc("(2,3)", 3);
  CHECK((a * b)[0] == 2);
  CHECK((a * b).to_string() == "(1,3,2)");
}

TEST_CASE("group orders") {
  CHECK(fixtures::a8()->order() == 20160);
  CHECK(fixtures::a7()->order() == 2520);
  CHECK(fixtures::p9()->order() == 9);
  CHECK(fixtures::group(8, {"(1,2,3)"})->order() == 3);
  CHECK(fixtures::group(8, {"(1,2,3)", "(2,3,4)", "(3,4,5)", "(4,5,6)", "(5,6,7)", "(6,7,8)"})->order() == 20160);
  CHECK(fixtures::group(5, {})->order() == 1);
  CHECK(fixtures::group(5, {"()"})->order() == 1);
  CHECK_THROWS_AS(PermGroup::make(8, {pc("(1,2)", 7)}), std::invalid_argument);
}

TEST_CASE("order agrees with closure and does not depend on the seed") {
  Rng rng(2);
  for (int t = 0; t < 12; ++t) {
    const std::size_t n = 4 + rng.below(4);
    std::vector<Perm> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<Point> img(n);
      for (Point i = 0; i < n; ++i)
        img[i] = i;
      for (std::size_t i = n; i-- > 1;)
        std::swap(img[i], img[rng.below(i + 1)]);
      gens.emplace_back(img);
    }
    const auto brute = fixtures::brute_elements(gens, n).size();
    for (std::uint64_t seed : {0u, 1u, 99u}) {
      auto g = PermGroup::make(n, gens, seed);
      CHECK(g->order() == brute);
      std::uint64_t prod = 1;
      for (const auto& L : g->chain())
        prod *= L.orbit.size();
      CHECK(prod == g->order());
    }
  }
}

TEST_CASE("strong generator words evaluate to the strong generators") {
  for (std::uint64_t seed : {0u, 5u}) {
    auto g = fixtures::a8();
    g = PermGroup::make(8, g->generators(), seed);
    SlpEvaluator<Perm> ev(g->slp(), g->generators(), {g->generators()[0].inverse(), g->generators()[1].inverse()},
                          Perm(8), [](const Perm& a, const Perm& b) { return a * b; });
    for (const auto& s : g->strong_generators())
      CHECK(ev.value(s.node) == s.perm);
    for (const auto& L : g->chain())
      for (std::size_t k = 0; k < L.orbit.size(); ++k)
        CHECK(ev.value(L.node[k]) == L.transversal[k]);
  }
}

TEST_CASE("sift words reconstruct random members") {
  auto g = fixtures::a8();
  Rng rng(4);
  auto hom = perm_hom(g, g->generators());
  for (int t = 0; t < 100; ++t) {
    Perm x = g->identity();
    for (int k = 0; k < 12; ++k)
      x = x * g->generators()[rng.below(2)];
    auto s = g->sift(x);
    REQUIRE(s.member);
    Perm y = g->identity();
    for (const auto& f : s.factors)
      y = y * g->transversal(f);
    CHECK(y == x);
    CHECK(hom.at(x) == x);
  }
  CHECK(g->sift(g->identity()).member);
  CHECK(g->sift(g->identity()).factors.empty());
  CHECK_FALSE(g->contains(pc("(1,2)", 8)));
  CHECK_FALSE(g->sift(pc("(1,2)", 8)).member);
}

TEST_CASE("elements and random elements") {
  auto g = fixtures::group(6, {"(1,2,3,4,5,6)", "(1,2)"});
  auto els = g->elements();
  CHECK(els.size() == 720);
  CHECK(std::set<Perm>(els.begin(), els.end()).size() == 720);
  CHECK_THROWS_AS(fixtures::a8()->elements(100), BoundExceeded);
  Rng rng(1);
  for (int t = 0; t < 20; ++t)
    CHECK(g->contains(g->random_element(rng)));
}

TEST_CASE("orbits") {
  auto a = natural_action(fixtures::a8());
  CHECK(orbit(a, 0).points.size() == 8);
  auto pa = natural_action(fixtures::p9());
  CHECK(orbit(pa, 6).points == std::vector<Point>{6});
  auto o = orbit(pa, 0);
  std::vector<Point> pts = o.points;
  std::sort(pts.begin(), pts.end());
  CHECK(pts == std::vector<Point>{0, 1, 2});
  for (std::size_t k = 0; k < o.points.size(); ++k) {
    Point x = 0;
    for (auto i : o.words[k])
      x = pa.generator_images()[i][x];
    CHECK(x == o.points[k]);
  }
  CHECK_THROWS_AS(orbit(pa, 8), std::out_of_range);
}

TEST_CASE("coset actions") {
  auto g = fixtures::a8();
  auto h = fixtures::a7();
  CosetTable ct(g, h);
  CHECK(ct.size() == 8);
  auto s = stabilizer(ct.action(), 0);
  CHECK(same_subgroup(*s, *h));
  auto n = normalizer(*g, *fixtures::p9());
  CHECK(coset_action(g, n).size() == 280);
  CHECK(coset_action(g, g).size() == 1);
  CHECK_THROWS_AS(CosetTable(h, g), std::invalid_argument);
  ct.action().spot_check(3);
  // coset labels: x lies in the coset of its index
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    Perm x = g->random_element(rng);
    const auto& r = ct.representatives()[ct.index_of(x)];
    CHECK(h->contains(x * r.inverse()));
  }
}

TEST_CASE("a bogus action fails the relation spot check") {
  auto g = fixtures::group(3, {"(1,2,3)", "(1,2)"});
  // (1,2,3) -> identity, (1,2) -> (1,2,3) is not a homomorphism
  PermAction bad(g, {pc("()", 3), pc("(1,2,3)", 3)});
  CHECK_THROWS_AS(bad.spot_check(0, 50), InputError);
}

TEST_CASE("normalizers agree with brute force") {
  auto g = fixtures::a8();
  CHECK(normalizer(*g, *fixtures::p9())->order() == 72);
  auto a7 = fixtures::a7();
  auto n7 = normalizer(*a7, *fixtures::p9());
  CHECK(n7->order() == 36);
  CHECK(same_subgroup(*normalizer(*g, *g), *g));

  auto s6 = fixtures::group(6, {"(1,2,3,4,5,6)", "(1,2)"});
  for (const auto& gens : std::vector<std::vector<std::string>>{{"(1,2,3)"}, {"(1,2)(3,4)"}, {"(1,2,3,4)"},
                                                                 {"(1,2)", "(3,4)"}, {"(1,2,3)(4,5,6)"}}) {
    auto k = fixtures::group(6, gens);
    std::uint64_t brute = 0;
    for (const auto& x : s6->elements()) {
      bool ok = true;
      for (const auto& y : k->generators())
        ok = ok && k->contains(conjugate(y, x));
      brute += ok;
    }
    CHECK(normalizer(*s6, *k)->order() == brute);
  }
  SearchBounds tiny;
  tiny.max_order = 100;
  CHECK_THROWS_AS(normalizer(*g, *fixtures::p9(), tiny), BoundExceeded);
}

TEST_CASE("conjugating elements") {
  auto g = fixtures::a8();
  auto k1 = fixtures::group(8, {"(1,2,3)"});
  auto k2 = fixtures::group(8, {"(4,5,6)"});
  auto k3 = fixtures::group(8, {"(1,2,3)(4,5,6)"});
  auto x = conjugating_element(*g, *k1, *k2);
  REQUIRE(x.has_value());
  CHECK(g->contains(*x));
  CHECK(same_subgroup(*conjugate_group(*k1, *x), *k2));
  CHECK_FALSE(conjugating_element(*g, *k1, *k3).has_value());
  CHECK(conjugating_element(*g, *k1, *k1)->is_identity());
  // in A4 the two classes of 3-cycles are not fused on elements, but the
  // subgroups are conjugate
  auto a4 = fixtures::group(4, {"(1,2,3)", "(2,3,4)"});
  auto c1 = fixtures::group(4, {"(1,2,3)"});
  auto c2 = fixtures::group(4, {"(1,2,4)"});
  CHECK(conjugating_element(*a4, *c1, *c2).has_value());
  auto v = fixtures::group(4, {"(1,2)(3,4)"});
  auto w = fixtures::group(4, {"(1,3)(2,4)"});
  auto s = conjugating_element(*a4, *v, *w);
  REQUIRE(s.has_value());
  CHECK(same_subgroup(*conjugate_group(*v, *s), *w));
}

TEST_CASE("sylow subgroups") {
  auto g = fixtures::a8();
  CHECK(sylow(g, 3)->order() == 9);
  CHECK(sylow(g, 7)->order() == 7);
  CHECK(sylow(g, 2, 3)->order() == 64);
  CHECK(sylow(g, 5)->order() == 5);
  CHECK(sylow(g, 11)->order() == 1);
  CHECK(sylow(fixtures::group(3, {"(1,2,3)"}), 2)->is_trivial());
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    auto p = sylow(g, 3, seed);
    CHECK(g->contains_group(*p));
    for (const auto& x : p->elements())
      CHECK(x.order() % 3 == (x.is_identity() ? 1 : 0));
  }
}

TEST_CASE("subgroups of a p-group") {
  auto p = fixtures::p9();
  auto maxes = maximal_subgroups_p_group(p, 3);
  CHECK(maxes.size() == 4);
  for (const auto& m : maxes)
    CHECK(m->order() == 3);
  CHECK(subgroups_p_group(p, 3).size() == 6);
  // D8 has 10 subgroups
  auto d8 = fixtures::group(4, {"(1,2,3,4)", "(1,3)"});
  CHECK(subgroups_p_group(d8, 2).size() == 10);
  CHECK(maximal_subgroups_p_group(d8, 2).size() == 3);
  // C9 has a unique maximal subgroup
  auto c9 = fixtures::group(9, {"(1,2,3,4,5,6,7,8,9)"});
  CHECK(maximal_subgroups_p_group(c9, 3).size() == 1);
}

namespace {

// H-classes of subgroups K^x <= H, by enumerating all x in G
std::size_t brute_fusion_count(const GroupPtr& g, const GroupPtr& h, const GroupPtr& k) {
  std::vector<GroupPtr> found;
  for (const auto& x : g->elements()) {
    auto kx = conjugate_group(*k, x);
    if (!h->contains_group(*kx))
      continue;
    bool known = false;
    for (const auto& f : found)
      known = known || conjugating_element(*h, *f, *kx).has_value();
    if (!known)
      found.push_back(kx);
  }
  return found.size();
}

} // namespace

TEST_CASE("fusion data") {
  auto g = fixtures::a8();
  auto h = fixtures::a7();
  auto p = fixtures::p9();
  auto fd = fusion_data(g, h, p);
  CHECK(fd.t() == 1);
  CHECK(same_subgroup(*fd.reps[0].k_i, *p));
  CHECK(fd.reps[0].g_i.is_identity());

  // a fixed-point-free subgroup has no conjugate inside a point stabilizer
  auto fpf = fixtures::group(8, {"(1,2)(3,4)(5,6)(7,8)"});
  CHECK(fusion_data(g, h, fpf).t() == 0);

  auto fdg = fusion_data(g, g, p);
  CHECK(fdg.t() == 1);

  // a case with several classes, checked against brute force
  auto s5 = fixtures::group(5, {"(1,2,3,4,5)", "(1,2)"});
  auto s4 = fixtures::group(5, {"(1,2,3,4)", "(1,2)"});
  for (const auto& kg : std::vector<std::vector<std::string>>{{"(1,2)"}, {"(1,2)(3,4)"}, {"(1,2,3)"}, {"(1,2)(3,5)"}}) {
    auto k = fixtures::group(5, kg);
    auto f = fusion_data(s5, s4, k);
    CHECK(f.t() == brute_fusion_count(s5, s4, k));
    for (const auto& r : f.reps) {
      CHECK(s4->contains_group(*r.k_i));
      CHECK(same_subgroup(*conjugate_group(*r.k_i, r.g_i), *k));
    }
    for (std::size_t i = 0; i < f.reps.size(); ++i)
      for (std::size_t j = i + 1; j < f.reps.size(); ++j)
        CHECK_FALSE(conjugating_element(*s4, *f.reps[i].k_i, *f.reps[j].k_i).has_value());
  }
}

TEST_CASE("fingerprints") {
  auto n = normalizer(*fixtures::a8(), *fixtures::p9());
  auto f = fingerprint(*n);
  CHECK(f.order == 72);
  CHECK(f.abelianization_order == 4);
  auto d8 = fixtures::group(4, {"(1,2,3,4)", "(1,3)"});
  auto fd = fingerprint(*d8);
  CHECK(fd.centre_order == 2);
  CHECK(fd.abelianization_order == 4);
  CHECK(fd.order_histogram == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 5}, {4, 2}});
}

TEST_CASE("semidirect products") {
  // D8 inside GL2(3) acting on 3^2, with D8 given on its 4 points
  auto d8 = fixtures::group(4, {"(1,2,3,4)", "(1,3)"});
  AffineFactor f{3, 2, {ffla::FpMatrix::from_rows(3, {{0, 1}, {2, 0}}), ffla::FpMatrix::from_rows(3, {{1, 0}, {0, 2}})}};
  auto sp = semidirect_product({f}, d8);
  CHECK(sp.group->order() == 72);
  CHECK(sp.group->degree() == 13);
  auto t = PermGroup::make(13, sp.translation_generators[0]);
  CHECK(t->order() == 9);
  CHECK(is_normal(*sp.group, *t));
  auto ref = normalizer(*fixtures::a8(), *fixtures::p9());
  CHECK(fingerprint(*sp.group).abelianization_order == fingerprint(*ref).abelianization_order);

  // trivial action gives the direct product
  AffineFactor triv{2, 3, {ffla::FpMatrix::identity(2, 3), ffla::FpMatrix::identity(2, 3)}};
  CHECK(semidirect_product({triv}, d8).group->order() == 64);

  // matrices that are not a homomorphism: (1,3) -> scalar 2 conflicts
  // with (1,2,3,4)^2 = (1,3)(2,4) -> identity on the square of a matrix
  AffineFactor bad{3, 1, {ffla::FpMatrix::from_rows(3, {{1}}), ffla::FpMatrix::from_rows(3, {{2}})}};
  auto c4 = fixtures::group(4, {"(1,2,3,4)", "(1,3)(2,4)"});
  CHECK_THROWS_AS(semidirect_product({bad}, c4), InputError);
  AffineFactor singular{3, 1, {ffla::FpMatrix::from_rows(3, {{0}}), ffla::FpMatrix::from_rows(3, {{1}})}};
  CHECK_THROWS_AS(semidirect_product({singular}, d8), std::invalid_argument);
}

TEST_CASE("group file round trip") {
  std::ostringstream os;
  write_group(os, 8, fixtures::a8()->generators());
  auto spec = group_from_text(os.str());
  CHECK(spec.degree == 8);
  CHECK(PermGroup::make(spec.degree, spec.generators)->order() == 20160);
  CHECK_THROWS_AS(group_from_text("permgroup degree=3\n(1,4)\n"), InputError);
  CHECK_THROWS_AS(group_from_text("group degree=3\n"), InputError);
}
