#include "brauerbox/modrep/projective.hpp"

#include <stdexcept>

#include "brauerbox/error.hpp"
#include "brauerbox/modrep/module.hpp"
#include "brauerbox/permgrp/search.hpp"

namespace brauerbox::modrep {

namespace {

ffla::Row flatten(const FpMatrix& x) {
  ffla::Row v;
  for (std::size_t r = 0; r < x.rows(); ++r)
    v.insert(v.end(), x.row(r).begin(), x.row(r).end());
  return v;
}

} // namespace

bool relatively_projective(const MatRep& rep, const GroupPtr& q, const ProjectivityBounds& bounds) {
  const auto& h = rep.group();
  if (h->order() / q->order() > bounds.max_index)
    throw BoundExceeded("relative trace over " + std::to_string(h->order() / q->order()) + " cosets");
  const std::uint32_t p = rep.p();
  const std::size_t n = rep.dim();
  if (n == 0)
    return true;
  const auto res = restrict(rep, q);
  const auto ends = hom_space(res, res);
  permgrp::CosetTable cosets(h, q, bounds.max_index);
  RepEvaluator ev(rep);
  std::vector<std::pair<FpMatrix, FpMatrix>> conj;
  for (const auto& t : cosets.representatives()) {
    auto m = ev.at(t);
    conj.emplace_back(ffla::inverse_or_throw(m), std::move(m));
  }
  ffla::EchelonSpace traces(p, n * n);
  const auto target = flatten(FpMatrix::identity(p, n));
  for (const auto& phi : ends) {
    FpMatrix tr(p, n, n);
    for (const auto& [inv, m] : conj)
      tr = tr + inv * phi * m;
    traces.insert(flatten(tr));
    if (traces.contains(target))
      return true;
  }
  return false;
}

bool is_projective(const MatRep& rep, std::uint64_t seed, const ProjectivityBounds& bounds) {
  const auto s = permgrp::sylow(rep.group(), rep.p(), seed);
  if (s->order() > bounds.max_order)
    throw BoundExceeded("Sylow subgroup of order " + std::to_string(s->order()) + " too large for a norm sum");
  if (rep.dim() % s->order() != 0)
    return false;
  RepEvaluator ev(rep);
  FpMatrix norm(rep.p(), rep.dim(), rep.dim());
  for (const auto& x : s->elements(bounds.max_order))
    norm = norm + ev.at(x);
  return ffla::rank(norm) * s->order() == rep.dim();
}

GroupPtr vertex(const MatRep& rep, std::uint64_t seed, const ProjectivityBounds& bounds) {
  if (rep.dim() == 0)
    throw std::invalid_argument("vertex of the zero module");
  const auto s = permgrp::sylow(rep.group(), rep.p(), seed);
  if (is_projective(rep, seed, bounds))
    return permgrp::trivial_group(rep.group()->degree());
  for (const auto& q : permgrp::subgroups_p_group(s, rep.p())) {
    if (q->order() == 1)
      continue;
    if (q->order() == s->order() || relatively_projective(rep, q, bounds))
      return q;
  }
  throw std::logic_error("module is not relatively projective to a Sylow subgroup");
}

} // namespace brauerbox::modrep
