#include "brauerbox/permgrp/construct.hpp"

#include <ostream>
#include <sstream>

#include "brauerbox/error.hpp"

namespace brauerbox::permgrp {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--)
    r *= b;
  return r;
}

std::vector<std::uint32_t> affine_vector(std::size_t index, std::uint32_t q, std::size_t dim) {
  std::vector<std::uint32_t> x(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    x[i] = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  return x;
}

} // namespace

std::size_t affine_point_index(const std::vector<std::uint32_t>& x, std::uint32_t q) {
  std::size_t idx = 0;
  for (std::size_t i = x.size(); i-- > 0;)
    idx = idx * q + x[i];
  return idx;
}

SemidirectProduct semidirect_product(const std::vector<AffineFactor>& factors, const GroupPtr& q,
                                     std::uint64_t seed) {
  const auto& qgens = q->generators();
  SemidirectProduct out;
  std::size_t degree = q->degree();
  unsigned __int128 expected = q->order();
  for (const auto& f : factors) {
    if (f.action.size() != qgens.size())
      throw std::invalid_argument("factor needs one matrix per generator of the acting group");
    for (const auto& a : f.action) {
      if (a.p() != f.q || a.rows() != f.dim || a.cols() != f.dim)
        throw std::invalid_argument("action matrix has the wrong shape or field");
      if (!ffla::inverse(a))
        throw std::invalid_argument("action matrix is not invertible");
    }
    out.block_offset.push_back(degree);
    degree += ipow(f.q, f.dim);
    expected *= ipow(f.q, f.dim);
  }

  for (std::size_t j = 0; j < qgens.size(); ++j) {
    std::vector<Point> img(degree);
    for (Point x = 0; x < q->degree(); ++x)
      img[x] = qgens[j][x];
    for (std::size_t b = 0; b < factors.size(); ++b) {
      const auto& f = factors[b];
      const std::size_t count = ipow(f.q, f.dim);
      for (std::size_t i = 0; i < count; ++i) {
        auto v = affine_vector(i, f.q, f.dim);
        auto w = ffla::vec_mul(ffla::Row(v.begin(), v.end()), f.action[j]);
        img[out.block_offset[b] + i] =
            static_cast<Point>(out.block_offset[b] + affine_point_index({w.begin(), w.end()}, f.q));
      }
    }
    out.complement_generators.emplace_back(std::move(img));
  }
  for (std::size_t b = 0; b < factors.size(); ++b) {
    const auto& f = factors[b];
    const std::size_t count = ipow(f.q, f.dim);
    out.translation_generators.emplace_back();
    for (std::size_t e = 0; e < f.dim; ++e) {
      Perm t(degree);
      std::vector<Point> img = t.images();
      for (std::size_t i = 0; i < count; ++i) {
        auto v = affine_vector(i, f.q, f.dim);
        v[e] = (v[e] + 1) % f.q;
        img[out.block_offset[b] + i] = static_cast<Point>(out.block_offset[b] + affine_point_index(v, f.q));
      }
      out.translation_generators.back().emplace_back(std::move(img));
    }
  }

  // sampled relations: the linear parts along a random word must agree
  // with the linear parts along the chain word of the same element of Q
  if (!qgens.empty()) {
    Rng rng(seed);
    auto hom = perm_hom(q, out.complement_generators);
    for (int t = 0; t < 20; ++t) {
      Perm x = q->identity();
      Perm y(degree);
      const auto len = 1 + rng.below(16);
      for (std::uint64_t k = 0; k < len; ++k) {
        const auto i = rng.below(qgens.size());
        x = x * qgens[i];
        y = y * out.complement_generators[i];
      }
      if (hom.at(x) != y)
        throw InputError("action matrices do not respect a relation of the acting group");
    }
  }

  std::vector<Perm> gens = out.complement_generators;
  for (const auto& ts : out.translation_generators)
    gens.insert(gens.end(), ts.begin(), ts.end());
  out.group = PermGroup::make(degree, std::move(gens), seed);
  if (static_cast<unsigned __int128>(out.group->order()) != expected)
    throw InputError("semidirect product has order " + std::to_string(out.group->order()) +
                     ", so the action matrices do not define a homomorphism");
  return out;
}

GroupSpec read_group(TextReader& reader) {
  auto header = reader.parse_header(reader.require_line("permgroup header"), "permgroup");
  GroupSpec spec;
  spec.degree = static_cast<std::size_t>(reader.header_int(header, "degree"));
  while (auto line = reader.next_line()) {
    try {
      spec.generators.push_back(Perm::parse(*line, spec.degree));
    } catch (const InputError& e) {
      reader.fail(e.what());
    }
  }
  return spec;
}

void write_group(std::ostream& os, std::size_t degree, const std::vector<Perm>& gens) {
  os << "permgroup degree=" << degree << '\n';
  for (const auto& g : gens)
    os << g.to_string() << '\n';
}

GroupSpec group_from_text(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  TextReader reader(in, source);
  return read_group(reader);
}

} // namespace brauerbox::permgrp
