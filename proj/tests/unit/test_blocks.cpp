#include "doctest.h"

#include <map>
#include <sstream>

#include "brauerbox/blocks/blocks.hpp"
#include "brauerbox/error.hpp"
#include "brauerbox/modrep/module.hpp"
#include "fixtures.hpp"

using namespace brauerbox;
using namespace brauerbox::blocks;

namespace {

// number of homomorphisms G -> F_p^x, by checking every assignment on the
// full multiplication table
std::size_t brute_hom_count(const GroupPtr& g, std::uint32_t p) {
  const auto& f = ffla::field(p);
  const auto& gens = g->generators();
  std::size_t total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i)
    total *= p - 1;
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> v;
    auto c = code;
    for (std::size_t i = 0; i < gens.size(); ++i, c /= p - 1)
      v.push_back(static_cast<std::uint32_t>(1 + c % (p - 1)));
    std::map<Perm, std::uint32_t> val{{g->identity(), 1}};
    std::vector<Perm> queue{g->identity()};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
      for (std::size_t s = 0; s < gens.size() && ok; ++s) {
        auto y = queue[i] * gens[s];
        auto w = f.mul(val[queue[i]], v[s]);
        auto it = val.find(y);
        if (it == val.end()) {
          val[y] = w;
          queue.push_back(y);
        } else {
          ok = it->second == w;
        }
      }
    count += ok;
  }
  return count;
}

GroupPtr e8() { return fixtures::group(6, {"(1,2)", "(3,4)", "(5,6)"}); }

} // namespace

TEST_CASE("linear characters") {
  auto h = fixtures::hprime();
  auto chars = linear_characters(h, 3);
  CHECK(chars.size() == 4);
  CHECK(chars.size() == brute_hom_count(h, 3));
  CHECK(linear_characters(fixtures::a8(), 3).size() == 1);
  auto d8 = fixtures::group(4, {"(1,2,3,4)", "(1,3)"});
  CHECK(linear_characters(d8, 3).size() == 4);
  auto c4 = fixtures::group(4, {"(1,2,3,4)"});
  CHECK(linear_characters(c4, 5).size() == brute_hom_count(c4, 5));
  CHECK(linear_characters(c4, 5).size() == 4);
  auto s4 = fixtures::group(4, {"(1,2,3,4)", "(1,2)"});
  CHECK(linear_characters(s4, 7).size() == brute_hom_count(s4, 7));
  CHECK(chars[0].values == std::vector<std::uint32_t>(h->generators().size(), 1));
  Rng rng(3);
  for (const auto& chi : chars)
    for (int t = 0; t < 20; ++t) {
      auto x = h->random_element(rng), y = h->random_element(rng);
      CHECK(modrep::character_value(chi, x * y) ==
            ffla::field(3).mul(modrep::character_value(chi, x), modrep::character_value(chi, y)));
    }
  CHECK_THROWS_AS(check_linear_character({d8, 3, {1, 2, 2}}), InputError);
  CHECK_THROWS_AS(check_linear_character({d8, 3, {1, 0}}), InputError);
  CHECK_THROWS_AS(check_linear_character({c4, 5, {2, 2}}), InputError);
}

TEST_CASE("linear modules of H' form a Klein four-group under tensoring") {
  auto h = fixtures::hprime();
  auto labels = label_linear_characters(h, 3);
  REQUIRE(labels.size() == 4);
  CHECK(labels[0].first == "1a");
  CHECK(labels[0].second.values == linear_characters(h, 3)[0].values);
  std::vector<modrep::MatRep> mods;
  for (const auto& [name, chi] : labels) {
    mods.push_back(modrep::linear_rep(chi));
    CHECK(label_of(mods.back(), labels) == name);
  }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      auto t = modrep::tensor_linear(mods[i], labels[j].second);
      int matches = 0;
      for (std::size_t m = 0; m < 4; ++m)
        matches += modrep::simple_isomorphic(t, mods[m]);
      CHECK(matches == 1);
      if (i == j)
        CHECK(modrep::simple_isomorphic(t, mods[0]));
    }
  // 1b has an element of order 4 in its kernel, 1c and 1d do not
  for (std::size_t i = 1; i < 4; ++i) {
    bool found = false;
    for (const auto& x : h->elements())
      found = found || (x.order() == 4 && modrep::character_value(labels[i].second, x) == 1);
    CHECK(found == (i == 1));
  }
  CHECK_THROWS_AS(label_linear_characters(fixtures::a8(), 3), InputError);
}

TEST_CASE("idempotents of an elementary abelian 2-group over F3") {
  auto e = e8();
  auto chars = linear_characters(e, 3);
  REQUIRE(chars.size() == 8);
  auto total = GroupAlgebraElement{e, 3, {}};
  std::vector<GroupAlgebraElement> family;
  for (const auto& chi : chars)
    family.push_back(idempotent_from_character(chi));
  // e_trivial = 8^-1 sum g = 2 sum g
  for (const auto& [x, c] : family[0].coeffs)
    CHECK(c == 2);
  CHECK(family[0].coeffs.size() == 8);
  for (std::size_t i = 0; i < family.size(); ++i) {
    CHECK(family[i] * family[i] == family[i]);
    for (std::size_t j = 0; j < family.size(); ++j)
      if (i != j)
        CHECK((family[i] * family[j]).coeffs.empty());
    total = total + family[i];
  }
  CHECK(total == GroupAlgebraElement::one(e, 3));
  auto one = idempotent_from_character({permgrp::trivial_group(6), 3, {}});
  CHECK(one == GroupAlgebraElement::one(permgrp::trivial_group(6), 3));
  CHECK_THROWS_AS(idempotent_from_character({fixtures::group(3, {"(1,2,3)"}), 3, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(idempotent_from_character({e, 3, {2, 2, 0}}), InputError);
}

TEST_CASE("projection through idempotents") {
  // E = 2^3 normal in 2^3:3
  auto h = fixtures::group(6, {"(1,2)", "(3,4)", "(5,6)", "(1,3,5)(2,4,6)"});
  REQUIRE(h->order() == 24);
  auto e = permgrp::subgroup(*h, {fixtures::pc("(1,2)", 6), fixtures::pc("(3,4)", 6), fixtures::pc("(5,6)", 6)});
  auto v = modrep::perm_rep(permgrp::natural_action(h), 3);
  auto w = modrep::perm_rep(permgrp::coset_action(h, permgrp::trivial_group(6)), 3);
  for (const auto& m : {v, w}) {
    std::size_t dims = 0;
    for (const auto& chi : linear_characters(e, 3)) {
      auto idem = idempotent_from_character(chi);
      auto pr = project(m, idem, e);
      dims += pr.rep.dim();
      // the image does not depend on where the restriction happens
      auto restricted = project(modrep::restrict(m, e), idem, e);
      CHECK(ffla::same_row_space(pr.basis, restricted.basis));
    }
    CHECK(dims == m.dim());
  }
  auto one = GroupAlgebraElement::one(h, 3);
  auto whole = project(v, one, h);
  CHECK(whole.rep.dim() == 6);
  CHECK(modrep::is_isomorphic(whole.rep, v));
  auto triv = idempotent_from_character(linear_characters(e, 3)[0]);
  CHECK(project(v, triv, h).rep.dim() == 3); // E-fixed vectors
  CHECK(project(w, triv, h).rep.dim() == 3);
  // a non-trivial character is moved by the 3-cycle
  auto moved = idempotent_from_character(linear_characters(e, 3)[1]);
  CHECK_THROWS_AS(project(v, moved, h), std::invalid_argument);
}

TEST_CASE("idempotent files") {
  auto e = e8();
  auto idem = idempotent_from_character(linear_characters(e, 3)[3]);
  std::ostringstream os;
  write_idempotent(os, idem);
  CHECK(os.str().rfind("idem p=3\n", 0) == 0);
  CHECK(idempotent_from_text(os.str(), e) == idem);
  CHECK_THROWS_AS(idempotent_from_text("idem p=3\n1 (1,3)\n", e), InputError);
  CHECK_THROWS_AS(idempotent_from_text("idem p=3\n3 (1,2)\n", e), InputError);
  CHECK_THROWS_AS(idempotent_from_text("idem p=4\n", e), InputError);
  CHECK_THROWS_AS(idempotent_from_text("idem p=3\n1 (1,2\n", e), InputError);
}
