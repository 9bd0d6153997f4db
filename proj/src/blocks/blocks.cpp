#include "brauerbox/blocks/blocks.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "brauerbox/error.hpp"
#include "brauerbox/modrep/module.hpp"
#include "brauerbox/permgrp/action.hpp"
#include "brauerbox/permgrp/search.hpp"

namespace brauerbox::blocks {

namespace {

// Values on the regular action of G/[G,G]; false on a conflict.
bool consistent_on_abelianization(const std::vector<Perm>& images, const std::vector<std::uint32_t>& values,
                                  std::size_t size, const ffla::PrimeField& f) {
  std::vector<std::uint32_t> val(size, 0);
  std::vector<std::size_t> queue{0};
  val[0] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto c = queue[i];
    for (std::size_t s = 0; s < images.size(); ++s) {
      const auto d = images[s][c];
      const auto w = f.mul(val[c], values[s]);
      if (val[d] == 0) {
        val[d] = w;
        queue.push_back(d);
      } else if (val[d] != w) {
        return false;
      }
    }
  }
  return true;
}

} // namespace

std::vector<LinearCharacter> linear_characters(const GroupPtr& g, std::uint32_t p) {
  const auto& f = ffla::field(p);
  const auto d = permgrp::derived_subgroup(*g);
  permgrp::CosetTable ab(g, d);
  const auto& images = ab.action().generator_images();
  const auto& gens = g->generators();
  std::vector<std::vector<std::uint32_t>> choices;
  std::uint64_t total = 1;
  for (const auto& x : gens) {
    std::vector<std::uint32_t> c;
    for (std::uint32_t v = 1; v < p; ++v)
      if (f.pow(v, x.order()) == 1)
        c.push_back(v);
    total *= c.size();
    if (total > 1'000'000)
      throw BoundExceeded("too many candidate linear characters");
    choices.push_back(std::move(c));
  }
  std::vector<LinearCharacter> out;
  std::vector<std::size_t> idx(gens.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    std::vector<std::uint32_t> values;
    for (std::size_t i = 0; i < gens.size(); ++i)
      values.push_back(choices[i][idx[i]]);
    if (consistent_on_abelianization(images, values, ab.size(), f))
      out.push_back({g, p, std::move(values)});
    for (std::size_t i = gens.size(); i-- > 0;) {
      if (++idx[i] < choices[i].size())
        break;
      idx[i] = 0;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const LinearCharacter& a, const LinearCharacter& b) { return a.values < b.values; });
  return out;
}

void check_linear_character(const LinearCharacter& lambda) {
  const auto& f = ffla::field(lambda.p);
  if (lambda.values.size() != lambda.group->generators().size())
    throw InputError("linear character needs one value per generator");
  for (auto v : lambda.values)
    if (v == 0 || v >= lambda.p)
      throw InputError("linear character values must be nonzero residues");
  const auto d = permgrp::derived_subgroup(*lambda.group);
  permgrp::CosetTable ab(lambda.group, d);
  if (!consistent_on_abelianization(ab.action().generator_images(), lambda.values, ab.size(), f))
    throw InputError("values do not define a homomorphism to F_" + std::to_string(lambda.p) + "^x");
}

GroupAlgebraElement GroupAlgebraElement::one(GroupPtr group, std::uint32_t p) {
  GroupAlgebraElement e{std::move(group), p, {}};
  e.add(e.group->identity(), 1);
  return e;
}

void GroupAlgebraElement::add(const Perm& g, std::uint32_t c) {
  const auto& f = ffla::field(p);
  auto& slot = coeffs[g];
  slot = f.add(slot, f.reduce(c));
  if (slot == 0)
    coeffs.erase(g);
}

GroupAlgebraElement GroupAlgebraElement::conjugate(const Perm& g) const {
  GroupAlgebraElement out{group, p, {}};
  for (const auto& [x, c] : coeffs)
    out.add(permgrp::conjugate(x, g), c);
  return out;
}

FpMatrix GroupAlgebraElement::evaluate(const MatRep& rep) const {
  if (rep.p() != p)
    throw std::invalid_argument("group algebra element and module over different fields");
  modrep::RepEvaluator ev(rep);
  FpMatrix out(p, rep.dim(), rep.dim());
  for (const auto& [x, c] : coeffs)
    out = out + ffla::scale(ev.at(x), c);
  return out;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.p != b.p)
    throw std::invalid_argument("product of group algebra elements over different fields");
  const auto& f = ffla::field(a.p);
  GroupAlgebraElement out{a.group, a.p, {}};
  for (const auto& [x, c] : a.coeffs)
    for (const auto& [y, d] : b.coeffs)
      out.add(x * y, f.mul(c, d));
  return out;
}

GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.p != b.p)
    throw std::invalid_argument("sum of group algebra elements over different fields");
  GroupAlgebraElement out = a;
  for (const auto& [y, d] : b.coeffs)
    out.add(y, d);
  return out;
}

GroupAlgebraElement idempotent_from_character(const LinearCharacter& lambda) {
  const auto& e = lambda.group;
  const auto& f = ffla::field(lambda.p);
  if (e->order() % lambda.p == 0)
    throw std::invalid_argument("p divides |E|; no such idempotent");
  check_linear_character(lambda);
  std::vector<std::uint32_t> invs;
  for (auto v : lambda.values)
    invs.push_back(f.inv(v));
  permgrp::HomEvaluator<std::uint32_t> hom(e, lambda.values, std::move(invs), 1,
                                           [&f](std::uint32_t a, std::uint32_t b) { return f.mul(a, b); });
  const auto scale = f.inv(f.reduce(static_cast<std::int64_t>(e->order() % lambda.p)));
  GroupAlgebraElement out{e, lambda.p, {}};
  for (const auto& x : e->elements())
    out.add(x, f.mul(scale, hom.at(x.inverse())));
  return out;
}

Projection project(const MatRep& rep, const GroupAlgebraElement& e, const GroupPtr& s) {
  const auto& g = rep.group();
  for (const auto& [x, c] : e.coeffs)
    if (x.degree() != g->degree() || !g->contains(x))
      throw std::invalid_argument("idempotent support is not in the module's group");
  if (s->degree() != g->degree() || !g->contains_group(*s))
    throw std::invalid_argument("projection target is not a subgroup");
  for (const auto& x : s->generators())
    if (!(e.conjugate(x) == e))
      throw std::invalid_argument("the subgroup does not fix the idempotent under conjugation");
  auto image = ffla::row_space(e.evaluate(rep));
  auto sub = modrep::submodule(modrep::restrict(rep, s), image);
  return {std::move(sub.rep), std::move(sub.basis)};
}

std::vector<std::pair<std::string, LinearCharacter>> label_linear_characters(const GroupPtr& g, std::uint32_t p) {
  auto chars = linear_characters(g, p);
  if (chars.size() != 4)
    throw InputError("labelling expects four linear characters, found " + std::to_string(chars.size()));
  const auto elements = g->elements();
  std::vector<std::size_t> with_order4;
  for (std::size_t i = 1; i < chars.size(); ++i) {
    for (const auto& x : elements)
      if (x.order() == 4 && modrep::character_value(chars[i], x) == 1) {
        with_order4.push_back(i);
        break;
      }
  }
  if (with_order4.size() != 1)
    throw InputError("expected exactly one nontrivial linear character with an element of order 4 in its kernel");
  std::vector<std::pair<std::string, LinearCharacter>> out{{"1a", chars[0]}, {"1b", chars[with_order4[0]]}};
  const char* rest[] = {"1c", "1d"};
  std::size_t r = 0;
  for (std::size_t i = 1; i < chars.size(); ++i)
    if (i != with_order4[0])
      out.emplace_back(rest[r++], chars[i]);
  return out;
}

std::string label_of(const MatRep& lin, const std::vector<std::pair<std::string, LinearCharacter>>& labels) {
  if (lin.dim() != 1)
    return "";
  modrep::RepEvaluator ev(lin);
  for (const auto& [name, chi] : labels) {
    bool match = chi.p == lin.p();
    const auto& gens = chi.group->generators();
    for (std::size_t i = 0; i < gens.size() && match; ++i)
      match = ev.at(gens[i]).at(0, 0) == chi.values[i];
    if (match)
      return name;
  }
  return "";
}

void write_idempotent(std::ostream& os, const GroupAlgebraElement& e) {
  os << "idem p=" << e.p << '\n';
  for (const auto& [x, c] : e.coeffs)
    os << c << ' ' << x.to_string() << '\n';
}

GroupAlgebraElement read_idempotent(TextReader& reader, GroupPtr group) {
  const auto header = reader.parse_header(reader.require_line("idem header"), "idem");
  const auto p = reader.header_int(header, "p");
  if (p < 2 || p > ffla::kMaxPrime || !ffla::is_prime(static_cast<std::uint32_t>(p)))
    reader.fail("modulus " + std::to_string(p) + " is not a prime <= 251");
  GroupAlgebraElement e{group, static_cast<std::uint32_t>(p), {}};
  while (auto line = reader.next_line()) {
    std::istringstream is(*line);
    long long c = -1;
    if (!(is >> c) || c < 0 || c >= p)
      reader.fail("expected a coefficient in [0, " + std::to_string(p) + ")");
    std::string rest;
    std::getline(is, rest);
    Perm x;
    try {
      x = Perm::parse(rest, group->degree());
    } catch (const InputError& err) {
      reader.fail(err.what());
    }
    if (!group->contains(x))
      reader.fail("element " + x.to_string() + " is not in the group");
    e.add(x, static_cast<std::uint32_t>(c));
  }
  return e;
}

GroupAlgebraElement idempotent_from_text(const std::string& text, GroupPtr group, const std::string& source) {
  std::istringstream in(text);
  TextReader reader(in, source);
  return read_idempotent(reader, std::move(group));
}

} // namespace brauerbox::blocks
