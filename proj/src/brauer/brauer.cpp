#include "brauerbox/brauer/brauer.hpp"

#include <stdexcept>

#include "brauerbox/error.hpp"
#include "brauerbox/modrep/meataxe.hpp"
#include "brauerbox/modrep/module.hpp"
#include "brauerbox/modrep/projective.hpp"

namespace brauerbox::brauer {

namespace {

bool is_p_power(std::uint64_t n, std::uint32_t p) {
  while (n % p == 0)
    n /= p;
  return n == 1;
}

void require_subgroup(const permgrp::PermGroup& big, const permgrp::PermGroup& small, const char* what) {
  if (big.degree() != small.degree() || !big.contains_group(small))
    throw std::invalid_argument(what);
}

bool normalizes(const permgrp::PermGroup& n, const permgrp::PermGroup& p) {
  for (const auto& x : n.generators())
    for (const auto& y : p.generators())
      if (!p.contains(permgrp::conjugate(y, x)))
        return false;
  return true;
}

std::vector<FpMatrix> images(modrep::RepEvaluator& ev, const GroupPtr& k) {
  std::vector<FpMatrix> out;
  for (const auto& x : k->generators())
    out.push_back(ev.at(x));
  return out;
}

// image of basis vector i under a permutation matrix, or -1
long perm_image(const FpMatrix& m, std::size_t i) {
  long image = -1;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m.at(i, c) == 0)
      continue;
    if (m.at(i, c) != 1 || image >= 0)
      return -1;
    image = static_cast<long>(c);
  }
  return image;
}

bool all_permutation_matrices(const std::vector<FpMatrix>& ms) {
  for (const auto& m : ms)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (perm_image(m, r) < 0)
        return false;
  // rows map to distinct columns because the matrices are invertible
  return true;
}

} // namespace

FpMatrix fixed_points(const MatRep& rep, const GroupPtr& k) {
  require_subgroup(*rep.group(), *k, "fixed points of a non-subgroup");
  modrep::RepEvaluator ev(rep);
  FpMatrix eqs(rep.p(), rep.dim(), 0);
  for (const auto& m : images(ev, k))
    eqs = ffla::hstack(eqs, m - FpMatrix::identity(rep.p(), rep.dim()));
  if (eqs.cols() == 0)
    return FpMatrix::identity(rep.p(), rep.dim());
  return ffla::row_space(ffla::left_nullspace(eqs));
}

FpMatrix relative_trace(const MatRep& rep, const GroupPtr& q, const GroupPtr& p, const FpMatrix& subspace) {
  require_subgroup(*rep.group(), *p, "P is not a subgroup of the module's group");
  require_subgroup(*p, *q, "Q is not a subgroup of P");
  if (subspace.cols() != rep.dim())
    throw std::invalid_argument("subspace has the wrong ambient dimension");
  modrep::RepEvaluator ev(rep);
  for (const auto& m : images(ev, q))
    if (subspace * m != subspace)
      throw std::invalid_argument("subspace is not fixed by Q");
  permgrp::CosetTable cosets(p, q);
  FpMatrix sum(rep.p(), subspace.rows(), rep.dim());
  for (const auto& t : cosets.representatives())
    sum = sum + subspace * ev.at(t);
  return ffla::row_space(sum);
}

BrauerQuotient brauer_quotient(const MatRep& rep, const GroupPtr& p, GroupPtr n, const permgrp::SearchBounds& bounds) {
  const auto& g = rep.group();
  require_subgroup(*g, *p, "P is not a subgroup of the module's group");
  if (!is_p_power(p->order(), rep.p()))
    throw std::invalid_argument("|P| = " + std::to_string(p->order()) + " is not a power of the characteristic " +
                                std::to_string(rep.p()));
  if (!n)
    n = permgrp::normalizer(*g, *p, bounds);
  require_subgroup(*g, *n, "N is not a subgroup of the module's group");
  if (!normalizes(*n, *p))
    throw std::invalid_argument("N does not normalize P");

  BrauerQuotient out;
  out.normalizer = n;
  out.fixed_basis = fixed_points(rep, p);
  FpMatrix traced(rep.p(), 0, rep.dim());
  for (const auto& q : permgrp::maximal_subgroups_p_group(p, rep.p()))
    traced = ffla::vstack(traced, relative_trace(rep, q, p, fixed_points(rep, q)));
  out.traced_subspace = ffla::row_space(traced);

  auto sub = modrep::submodule(modrep::restrict(rep, n), out.fixed_basis);
  const std::size_t df = sub.basis.rows();
  ffla::EchelonSpace in_fixed(rep.p(), rep.dim());
  for (std::size_t r = 0; r < df; ++r)
    in_fixed.insert(sub.basis.row(r));
  ffla::EchelonSpace traced_coords(rep.p(), df);
  FpMatrix coords(rep.p(), 0, df);
  for (std::size_t r = 0; r < out.traced_subspace.rows(); ++r) {
    auto c = in_fixed.coordinates(out.traced_subspace.row(r));
    traced_coords.insert(c);
    coords.append_row(c);
  }
  out.quotient_rep = modrep::quotient(sub.rep, coords).rep;

  std::vector<bool> pivot(df, false);
  for (auto c : traced_coords.pivots())
    pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < df; ++c)
    if (!pivot[c])
      free_cols.push_back(c);
  out.brauer_map = FpMatrix(rep.p(), df, free_cols.size());
  for (std::size_t i = 0; i < df; ++i) {
    ffla::Row e(df, 0);
    e[i] = 1;
    traced_coords.reduce(e);
    for (std::size_t k = 0; k < free_cols.size(); ++k)
      out.brauer_map.set(i, k, e[free_cols[k]]);
  }
  return out;
}

FixedPointReport perm_fixed_points(const GroupPtr& g, const GroupPtr& h, const GroupPtr& k,
                                   const permgrp::SearchBounds& bounds) {
  const auto fd = permgrp::fusion_data(g, h, k, bounds);
  FixedPointReport out;
  out.normalizer = permgrp::normalizer(*g, *k, bounds);
  const auto& n = out.normalizer;
  permgrp::CosetTable cosets(g, h);
  const auto& reps = cosets.representatives();
  std::vector<long> local(cosets.size(), -1);
  std::vector<std::size_t> global;
  for (const auto& fr : fd.reps) {
    FixedPointPart part;
    part.k_i = fr.k_i;
    part.g_i = fr.g_i;
    const auto start = cosets.index_of(fr.g_i);
    if (local[start] >= 0)
      throw std::logic_error("two fusion representatives give the same double coset");
    std::vector<std::size_t> orbit{start};
    local[start] = static_cast<long>(global.size());
    global.push_back(start);
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& s : n->generators()) {
        const auto d = cosets.index_of(reps[orbit[i]] * s);
        if (local[d] < 0) {
          local[d] = static_cast<long>(global.size());
          global.push_back(d);
          orbit.push_back(d);
        }
      }
    for (auto c : orbit)
      part.points.push_back(static_cast<std::size_t>(local[c]));
    auto nh = permgrp::normalizer(*h, *fr.k_i, bounds);
    if (nh->order() * orbit.size() != n->order())
      throw std::logic_error("part size disagrees with [N_G(K) : N_H(K_i)]");
    part.stabilizer = permgrp::conjugate_group(*nh, fr.g_i);
    out.parts.push_back(std::move(part));
  }
  // exhaustiveness: direct count of K-fixed cosets
  std::size_t direct = 0;
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    bool fixed = true;
    for (const auto& x : k->generators())
      if (cosets.index_of(reps[c] * x) != c) {
        fixed = false;
        break;
      }
    if (fixed) {
      ++direct;
      if (local[c] < 0)
        throw std::logic_error("fixed coset missed by the fusion representatives");
    }
  }
  if (direct != global.size())
    throw std::logic_error("fusion parts contain cosets that are not K-fixed");
  for (auto c : global)
    out.points.push_back("H" + reps[c].to_string());
  std::vector<Perm> gens;
  for (const auto& s : n->generators()) {
    std::vector<permgrp::Point> img(global.size());
    for (std::size_t i = 0; i < global.size(); ++i)
      img[i] = static_cast<permgrp::Point>(local[cosets.index_of(reps[global[i]] * s)]);
    gens.emplace_back(std::move(img));
  }
  out.action = permgrp::PermAction(n, std::move(gens), out.points);
  return out;
}

FixedPointReport fixed_points_from_parts(const GroupPtr& n, const std::vector<GroupPtr>& stabilizers) {
  FixedPointReport out;
  out.normalizer = n;
  std::vector<std::vector<permgrp::Point>> img(n->generators().size());
  for (std::size_t i = 0; i < stabilizers.size(); ++i) {
    permgrp::CosetTable cosets(n, stabilizers[i]);
    FixedPointPart part;
    part.g_i = n->identity();
    part.stabilizer = stabilizers[i];
    const std::size_t offset = out.points.size();
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      part.points.push_back(offset + c);
      out.points.push_back("part" + std::to_string(i + 1) + ":" + cosets.representatives()[c].to_string());
    }
    const auto& gi = cosets.action().generator_images();
    for (std::size_t s = 0; s < gi.size(); ++s)
      for (std::size_t c = 0; c < cosets.size(); ++c)
        img[s].push_back(static_cast<permgrp::Point>(offset + gi[s][c]));
    out.parts.push_back(std::move(part));
  }
  std::vector<Perm> gens;
  for (auto& v : img)
    gens.emplace_back(std::move(v));
  out.action = permgrp::PermAction(n, std::move(gens), out.points);
  return out;
}

std::uint64_t marks_count(const GroupPtr& g, const GroupPtr& h, const GroupPtr& k, const permgrp::SearchBounds& bounds) {
  const auto fd = permgrp::fusion_data(g, h, k, bounds);
  if (fd.t() == 0)
    return 0;
  const auto n = permgrp::normalizer(*g, *k, bounds)->order();
  std::uint64_t total = 0;
  for (const auto& fr : fd.reps)
    total += n / permgrp::normalizer(*h, *fr.k_i, bounds)->order();
  return total;
}

bool trivial_source_fast_path(const MatRep& rep, const GroupPtr& n) {
  require_subgroup(*rep.group(), *n, "N is not a subgroup of the module's group");
  modrep::RepEvaluator ev(rep);
  return all_permutation_matrices(images(ev, n));
}

MatRep green_trivial_source(const MatRep& rep, const GroupPtr& p, const GroupPtr& n) {
  require_subgroup(*rep.group(), *p, "P is not a subgroup of the module's group");
  require_subgroup(*rep.group(), *n, "N is not a subgroup of the module's group");
  if (!normalizes(*n, *p))
    throw std::invalid_argument("N does not normalize P");
  modrep::RepEvaluator ev(rep);
  const auto pm = images(ev, p);
  if (!all_permutation_matrices(pm))
    throw InputError("the standard basis is not permuted by P");
  const auto nm = images(ev, n);
  if (!all_permutation_matrices(nm))
    return brauer_quotient(rep, p, n).quotient_rep;

  std::vector<long> local(rep.dim(), -1);
  std::vector<std::size_t> fixed;
  for (std::size_t i = 0; i < rep.dim(); ++i) {
    bool f = true;
    for (const auto& m : pm)
      f = f && perm_image(m, i) == static_cast<long>(i);
    if (f) {
      local[i] = static_cast<long>(fixed.size());
      fixed.push_back(i);
    }
  }
  std::vector<FpMatrix> mats;
  for (const auto& m : nm) {
    FpMatrix a(rep.p(), fixed.size(), fixed.size());
    for (std::size_t j = 0; j < fixed.size(); ++j) {
      const auto img = local[static_cast<std::size_t>(perm_image(m, fixed[j]))];
      if (img < 0)
        throw std::logic_error("N does not preserve the P-fixed basis vectors");
      a.set(j, static_cast<std::size_t>(img), 1);
    }
    mats.push_back(std::move(a));
  }
  return MatRep(n, rep.p(), fixed.size(), std::move(mats));
}

VertexSplit split_by_vertex(const MatRep& rep, const GroupPtr& p, const GroupPtr& n, std::uint64_t seed) {
  require_subgroup(*rep.group(), *n, "N is not a subgroup of the module's group");
  require_subgroup(*n, *p, "P is not a subgroup of N");
  if (!normalizes(*n, *p))
    throw std::invalid_argument("N does not normalize P");
  const auto dec = modrep::indecomposable_summands(modrep::restrict(rep, n), seed);
  const auto maximal = permgrp::maximal_subgroups_p_group(p, rep.p());
  VertexSplit out;
  for (const auto& w : dec.summands) {
    bool smaller = !p->is_trivial() && modrep::is_projective(w, seed);
    for (std::size_t i = 0; i < maximal.size() && !smaller; ++i)
      smaller = modrep::relatively_projective(w, maximal[i]);
    (smaller ? out.discarded : out.kept).push_back(w);
  }
  return out;
}

GreenResult green_correspondent(const MatRep& rep, const GroupPtr& p, const GroupPtr& n, std::uint64_t seed) {
  auto split = split_by_vertex(rep, p, n, seed);
  if (split.kept.size() != 1)
    throw InputError("restriction has " + std::to_string(split.kept.size()) +
                     " summands with vertex P; the module is not indecomposable with vertex P");
  if (!p->is_trivial() && !modrep::relatively_projective(split.kept[0], p))
    throw InputError("the remaining summand is not relatively P-projective");
  return {std::move(split.kept[0]), std::move(split.discarded)};
}

} // namespace brauerbox::brauer
