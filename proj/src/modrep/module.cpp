#include "brauerbox/modrep/module.hpp"

#include <stdexcept>

#include "brauerbox/error.hpp"

namespace brauerbox::modrep {

namespace {

FpMatrix spin_with(const std::vector<FpMatrix>& mats, std::uint32_t p, std::size_t dim, const FpMatrix& seeds) {
  if (seeds.cols() != dim)
    throw std::invalid_argument("seed vectors have the wrong length");
  ffla::EchelonSpace space(p, dim);
  std::vector<ffla::Row> queue;
  for (std::size_t r = 0; r < seeds.rows(); ++r)
    if (space.insert(seeds.row(r)))
      queue.push_back(seeds.row_copy(r));
  for (std::size_t i = 0; i < queue.size() && space.dim() < dim; ++i)
    for (const auto& m : mats) {
      auto w = ffla::vec_mul(queue[i], m);
      if (space.insert(w))
        queue.push_back(std::move(w));
    }
  return ffla::row_space(space.basis());
}

} // namespace

FpMatrix spin(const MatRep& rep, const FpMatrix& seeds) {
  return spin_with(rep.matrices(), rep.p(), rep.dim(), seeds);
}

FpMatrix spin_transposed(const MatRep& rep, const FpMatrix& seeds) {
  std::vector<FpMatrix> t;
  for (const auto& m : rep.matrices())
    t.push_back(m.transpose());
  return spin_with(t, rep.p(), rep.dim(), seeds);
}

bool is_submodule(const MatRep& rep, const FpMatrix& subspace) {
  auto b = ffla::row_space(subspace);
  for (const auto& m : rep.matrices())
    if (b.rows() > 0 && !ffla::row_space_contains(b, b * m))
      return false;
  return true;
}

Subquotient submodule(const MatRep& rep, const FpMatrix& subspace) {
  if (subspace.cols() != rep.dim())
    throw std::invalid_argument("subspace has the wrong ambient dimension");
  auto b = ffla::row_space(subspace);
  ffla::EchelonSpace space(rep.p(), rep.dim());
  for (std::size_t r = 0; r < b.rows(); ++r)
    space.insert(b.row(r));
  std::vector<FpMatrix> mats;
  for (const auto& m : rep.matrices()) {
    auto images = b * m;
    std::vector<ffla::Row> rows;
    for (std::size_t r = 0; r < images.rows(); ++r) {
      if (!space.contains(images.row(r)))
        throw std::invalid_argument("subspace is not a submodule");
      rows.push_back(space.coordinates(images.row(r)));
    }
    mats.push_back(FpMatrix::from_rows(rep.p(), b.rows(), rows));
  }
  return {MatRep(rep.group(), rep.p(), b.rows(), std::move(mats)), b};
}

Subquotient quotient(const MatRep& rep, const FpMatrix& subspace) {
  if (subspace.cols() != rep.dim())
    throw std::invalid_argument("subspace has the wrong ambient dimension");
  if (!is_submodule(rep, subspace))
    throw std::invalid_argument("subspace is not a submodule");
  auto b = ffla::row_space(subspace);
  ffla::EchelonSpace space(rep.p(), rep.dim());
  std::vector<bool> pivot(rep.dim(), false);
  for (std::size_t r = 0; r < b.rows(); ++r)
    space.insert(b.row(r));
  for (auto c : space.pivots())
    pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < rep.dim(); ++c)
    if (!pivot[c])
      free_cols.push_back(c);
  const std::size_t q = free_cols.size();
  FpMatrix complement(rep.p(), q, rep.dim());
  for (std::size_t j = 0; j < q; ++j)
    complement.set(j, free_cols[j], 1);
  std::vector<FpMatrix> mats;
  for (const auto& m : rep.matrices()) {
    FpMatrix a(rep.p(), q, q);
    for (std::size_t j = 0; j < q; ++j) {
      auto v = m.row_copy(free_cols[j]);
      space.reduce(v);
      for (std::size_t k = 0; k < q; ++k)
        a.set(j, k, v[free_cols[k]]);
    }
    mats.push_back(std::move(a));
  }
  return {MatRep(rep.group(), rep.p(), q, std::move(mats)), complement};
}

MatRep section(const MatRep& rep, const FpMatrix& top, const FpMatrix& bottom) {
  auto sub = submodule(rep, top);
  ffla::EchelonSpace space(rep.p(), rep.dim());
  for (std::size_t r = 0; r < sub.basis.rows(); ++r)
    space.insert(sub.basis.row(r));
  std::vector<ffla::Row> coords;
  for (std::size_t r = 0; r < bottom.rows(); ++r) {
    if (!space.contains(bottom.row(r)))
      throw std::invalid_argument("bottom of a section must lie in the top");
    coords.push_back(space.coordinates(bottom.row(r)));
  }
  return quotient(sub.rep, FpMatrix::from_rows(rep.p(), sub.basis.rows(), coords)).rep;
}

bool is_hom(const MatRep& m, const MatRep& n, const FpMatrix& x) {
  for (std::size_t i = 0; i < m.matrices().size(); ++i)
    if (m.matrix(i) * x != x * n.matrix(i))
      return false;
  return true;
}

// Spin M from unit vectors; the images of the spinning seeds determine a
// homomorphism, and the relations among the spun basis constrain them.
std::vector<FpMatrix> hom_space(const MatRep& m, const MatRep& n) {
  if (m.p() != n.p())
    throw std::invalid_argument("hom space across different fields");
  if (m.group()->generators() != n.group()->generators())
    throw std::invalid_argument("hom space between representations of different groups");
  const std::uint32_t p = m.p();
  const std::size_t dm = m.dim(), dn = n.dim();
  if (dm == 0 || dn == 0)
    return {};
  const auto& f = ffla::field(p);

  ffla::EchelonSpace space(p, dm);
  std::vector<ffla::Row> basis;
  std::vector<std::size_t> seed_of;
  std::vector<FpMatrix> image_map; // image(b_j) = y_{seed_of[j]} * image_map[j]
  std::size_t seeds = 0;
  for (std::size_t e = 0; e < dm && space.dim() < dm; ++e) {
    ffla::Row unit(dm, 0);
    unit[e] = 1;
    if (!space.insert(unit))
      continue;
    const std::size_t start = basis.size();
    basis.push_back(unit);
    seed_of.push_back(seeds);
    image_map.push_back(FpMatrix::identity(p, dn));
    for (std::size_t j = start; j < basis.size(); ++j)
      for (std::size_t g = 0; g < m.matrices().size(); ++g) {
        auto w = ffla::vec_mul(basis[j], m.matrix(g));
        if (space.insert(w)) {
          basis.push_back(std::move(w));
          seed_of.push_back(seeds);
          image_map.push_back(image_map[j] * n.matrix(g));
        }
      }
    ++seeds;
  }
  const auto b = FpMatrix::from_rows(p, dm, basis);
  const auto binv = ffla::inverse_or_throw(b);
  const std::size_t unknowns = seeds * dn;

  // current solution space for Y = (y_1, ..., y_seeds), as rows
  FpMatrix sol = FpMatrix::identity(p, unknowns);
  for (std::size_t g = 0; g < m.matrices().size() && sol.rows() > 0; ++g) {
    const auto rel = b * m.matrix(g) * binv; // row j: coordinates of b_j * M(g)
    for (std::size_t j = 0; j < dm && sol.rows() > 0; ++j) {
      FpMatrix t(p, unknowns, dn);
      auto add_block = [&](std::size_t seed, const FpMatrix& block, std::uint32_t c) {
        for (std::size_t r = 0; r < dn; ++r)
          ffla::axpy(t.row(seed * dn + r), block.row(r), c, f);
      };
      add_block(seed_of[j], image_map[j] * n.matrix(g), 1);
      for (std::size_t k = 0; k < dm; ++k)
        if (rel.at(j, k) != 0)
          add_block(seed_of[k], image_map[k], f.neg(rel.at(j, k)));
      auto st = sol * t;
      if (st.is_zero())
        continue;
      auto keep = ffla::left_nullspace(st);
      sol = keep.rows() > 0 ? keep * sol : FpMatrix(p, 0, unknowns);
    }
  }

  std::vector<FpMatrix> out;
  for (std::size_t s = 0; s < sol.rows(); ++s) {
    FpMatrix images(p, dm, dn);
    for (std::size_t j = 0; j < dm; ++j) {
      const auto y = sol.row(s).subspan(seed_of[j] * dn, dn);
      auto v = ffla::vec_mul(y, image_map[j]);
      std::copy(v.begin(), v.end(), images.row(j).begin());
    }
    out.push_back(binv * images);
  }
  return out;
}

std::optional<FpMatrix> is_isomorphic(const MatRep& m, const MatRep& n, std::uint64_t seed) {
  if (m.dim() != n.dim() || m.p() != n.p())
    return std::nullopt;
  if (m.dim() == 0)
    return FpMatrix(m.p(), 0, 0);
  auto homs = hom_space(m, n);
  if (homs.empty())
    return std::nullopt;
  const std::uint32_t p = m.p();
  auto combine = [&](const std::vector<std::uint32_t>& c) {
    FpMatrix x(p, m.dim(), n.dim());
    for (std::size_t i = 0; i < homs.size(); ++i)
      if (c[i])
        x = x + ffla::scale(homs[i], c[i]);
    return x;
  };
  Rng rng(seed);
  std::vector<std::uint32_t> c(homs.size());
  for (int t = 0; t < 40; ++t) {
    for (auto& x : c)
      x = static_cast<std::uint32_t>(rng.below(p));
    auto x = combine(c);
    if (ffla::rank(x) == m.dim())
      return x;
  }
  if (homs.size() > 4)
    throw Inconclusive("no invertible intertwiner found among random combinations and the hom space has dimension " +
                       std::to_string(homs.size()));
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < homs.size(); ++i)
    total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    auto v = code;
    for (auto& x : c) {
      x = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    auto x = combine(c);
    if (ffla::rank(x) == m.dim())
      return x;
  }
  return std::nullopt;
}

bool simple_isomorphic(const MatRep& s, const MatRep& t) {
  return s.dim() == t.dim() && s.p() == t.p() && !hom_space(s, t).empty();
}

} // namespace brauerbox::modrep
