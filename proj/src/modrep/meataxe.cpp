#include "brauerbox/modrep/meataxe.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "brauerbox/error.hpp"
#include "brauerbox/ffla/poly.hpp"

namespace brauerbox::modrep {

std::size_t Constituents::total_dim() const {
  std::size_t d = 0;
  for (const auto& c : factors)
    d += c.multiplicity * c.simple.dim();
  return d;
}

std::vector<std::size_t> Constituents::dims_with_multiplicity() const {
  std::vector<std::size_t> out;
  for (const auto& c : factors)
    for (unsigned i = 0; i < c.multiplicity; ++i)
      out.push_back(c.simple.dim());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> SeriesReport::layer_dims() const {
  std::vector<std::size_t> out;
  for (const auto& l : layers)
    out.push_back(l.total_dim());
  return out;
}

namespace {

FpMatrix random_algebra_element(const MatRep& rep, Rng& rng, unsigned max_len) {
  const std::uint32_t p = rep.p();
  const std::size_t n = rep.dim();
  FpMatrix theta(p, n, n);
  const auto& mats = rep.matrices();
  if (mats.empty())
    return FpMatrix::identity(p, n);
  const auto terms = 2 + rng.below(3);
  for (std::uint64_t t = 0; t < terms; ++t) {
    FpMatrix w = mats[rng.below(mats.size())];
    const auto len = rng.below(max_len);
    for (std::uint64_t k = 0; k < len; ++k)
      w = w * mats[rng.below(mats.size())];
    const auto c = static_cast<std::uint32_t>(1 + rng.below(p - 1));
    theta = theta + ffla::scale(w, c);
  }
  return theta;
}

FpMatrix single_row(const FpMatrix& m, std::size_t r) { return m.rows_range(r, 1); }

} // namespace

std::optional<FpMatrix> find_submodule(const MatRep& rep, Rng& rng, const ChopOptions& opts) {
  const std::size_t n = rep.dim();
  if (n <= 1)
    return std::nullopt;
  for (unsigned attempt = 0; attempt < opts.retry_budget; ++attempt) {
    const auto theta = random_algebra_element(rep, rng, opts.max_word_length);
    const auto f = ffla::min_poly(theta);
    for (const auto& pf : ffla::factor_poly(f, rng.next())) {
      const auto gt = pf.factor.evaluate(theta);
      const auto kernel = ffla::left_nullspace(gt);
      auto s = spin(rep, single_row(kernel, 0));
      if (s.rows() < n)
        return s;
      if (kernel.rows() != static_cast<std::size_t>(pf.factor.degree()))
        continue;
      // every nonzero kernel vector generates the module; test the dual
      const auto kt = ffla::left_nullspace(gt.transpose());
      auto t = spin_transposed(rep, single_row(kt, 0));
      if (t.rows() < n)
        return ffla::row_space(ffla::nullspace(t));
      return std::nullopt;
    }
  }
  throw Inconclusive("no split and no irreducibility certificate within " + std::to_string(opts.retry_budget) +
                     " random algebra elements");
}

bool is_irreducible(const MatRep& rep, std::uint64_t seed) {
  Rng rng(seed);
  return rep.dim() > 0 && !find_submodule(rep, rng).has_value();
}

Constituents chop(const MatRep& rep, std::uint64_t seed, const ChopOptions& opts) {
  Rng rng(seed);
  Constituents out;
  std::vector<MatRep> work{rep};
  while (!work.empty()) {
    MatRep w = std::move(work.back());
    work.pop_back();
    if (w.dim() == 0)
      continue;
    auto sub = find_submodule(w, rng, opts);
    if (sub) {
      work.push_back(quotient(w, *sub).rep);
      work.push_back(submodule(w, *sub).rep);
      continue;
    }
    bool known = false;
    for (auto& c : out.factors)
      if (simple_isomorphic(c.simple, w)) {
        ++c.multiplicity;
        known = true;
        break;
      }
    if (!known)
      out.factors.push_back({std::move(w), 1});
  }
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const Constituent& a, const Constituent& b) { return a.simple.dim() < b.simple.dim(); });
  if (out.total_dim() != rep.dim())
    throw std::logic_error("chop lost dimension");
  return out;
}

std::vector<unsigned> multiplicities(const Constituents& c, const std::vector<MatRep>& simples) {
  std::vector<unsigned> out;
  for (const auto& s : simples) {
    unsigned m = 0;
    for (const auto& f : c.factors)
      if (simple_isomorphic(f.simple, s))
        m = f.multiplicity;
    out.push_back(m);
  }
  return out;
}

FpMatrix radical(const MatRep& rep, const std::vector<MatRep>& simples) {
  const std::size_t n = rep.dim();
  FpMatrix maps(rep.p(), n, 0);
  for (const auto& s : simples)
    for (const auto& h : hom_space(rep, s))
      maps = ffla::hstack(maps, h);
  if (maps.cols() == 0)
    return FpMatrix::identity(rep.p(), n);
  return ffla::row_space(ffla::left_nullspace(maps));
}

SeriesReport radical_series(const MatRep& rep, std::uint64_t seed) {
  SeriesReport report;
  const auto all = chop(rep, seed);
  std::vector<MatRep> simples;
  for (const auto& c : all.factors)
    simples.push_back(c.simple);
  MatRep cur = rep;
  FpMatrix ambient = FpMatrix::identity(rep.p(), rep.dim());
  report.subspaces.push_back(ambient);
  std::uint64_t layer_seed = seed;
  while (cur.dim() > 0) {
    const auto r = radical(cur, simples);
    if (r.rows() == cur.dim())
      throw std::logic_error("radical did not shrink; constituent list incomplete");
    auto top = quotient(cur, r).rep;
    if (radical(top, simples).rows() != 0)
      throw std::logic_error("radical layer is not semisimple");
    report.layers.push_back(chop(top, ++layer_seed));
    auto sub = submodule(cur, r);
    ambient = sub.basis * ambient;
    cur = std::move(sub.rep);
    report.subspaces.push_back(ambient);
  }
  return report;
}

SeriesReport socle_series(const MatRep& rep, std::uint64_t seed) {
  const auto dual_series = radical_series(dual(rep), seed);
  SeriesReport report;
  FpMatrix below(rep.p(), 0, rep.dim());
  std::uint64_t layer_seed = seed;
  for (std::size_t i = 1; i < dual_series.subspaces.size(); ++i) {
    const auto& r = dual_series.subspaces[i];
    FpMatrix above = r.rows() == 0 ? FpMatrix::identity(rep.p(), rep.dim()) : ffla::row_space(ffla::nullspace(r));
    report.layers.push_back(chop(section(rep, above, below), ++layer_seed));
    report.subspaces.push_back(above);
    below = above;
  }
  return report;
}

namespace {

bool is_nilpotent(const FpMatrix& x) { return ffla::power(x, x.rows()).is_zero(); }

ffla::Row flatten(const FpMatrix& x) {
  ffla::Row v;
  for (std::size_t r = 0; r < x.rows(); ++r)
    v.insert(v.end(), x.row(r).begin(), x.row(r).end());
  return v;
}

FpMatrix unflatten(const ffla::Row& v, std::uint32_t p, std::size_t n) {
  std::vector<ffla::Row> rows;
  for (std::size_t r = 0; r < n; ++r)
    rows.emplace_back(v.begin() + r * n, v.begin() + (r + 1) * n);
  return FpMatrix::from_rows(p, n, rows);
}

// Span of nilpotent parts b - lambda; local if it is a nilpotent
// subalgebra (then End = F_p 1 + N with N nilpotent). nullopt if some
// basis element has a non-linear irreducible factor.
std::optional<bool> structured_local_check(const std::vector<FpMatrix>& ends, std::uint32_t p, std::size_t n) {
  const auto& f = ffla::field(p);
  std::vector<FpMatrix> nil;
  for (const auto& b : ends) {
    auto fs = ffla::factor_poly(ffla::min_poly(b));
    if (fs.size() > 1)
      return false; // a nontrivial idempotent exists
    if (fs[0].factor.degree() != 1)
      return std::nullopt;
    const auto lambda = f.neg(fs[0].factor.coeff(0));
    nil.push_back(b - ffla::scale(FpMatrix::identity(p, n), lambda));
  }
  ffla::EchelonSpace span(p, n * n);
  std::vector<FpMatrix> basis;
  for (const auto& x : nil)
    if (span.insert(flatten(x)))
      basis.push_back(x);
  for (const auto& a : basis)
    for (const auto& b : basis)
      if (!span.contains(flatten(a * b)))
        return std::nullopt;
  // powers of the subalgebra must reach zero
  std::vector<FpMatrix> level = basis;
  for (std::size_t k = 0; k <= n && !level.empty(); ++k) {
    ffla::EchelonSpace next(p, n * n);
    for (const auto& a : level)
      for (const auto& b : basis) {
        auto c = a * b;
        if (!c.is_zero())
          next.insert(flatten(c));
      }
    std::vector<FpMatrix> nl;
    auto nb = next.basis();
    for (std::size_t r = 0; r < nb.rows(); ++r)
      nl.push_back(unflatten(nb.row_copy(r), p, n));
    level = std::move(nl);
  }
  if (!level.empty())
    return std::nullopt;
  return true;
}

} // namespace

bool endomorphism_ring_is_local(const MatRep& rep, const DecomposeOptions& opts) {
  const auto ends = hom_space(rep, rep);
  const std::uint32_t p = rep.p();
  const std::size_t n = rep.dim();
  if (ends.size() <= 1)
    return true;
  if (auto r = structured_local_check(ends, p, n))
    return *r;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    total *= p;
    if (total > opts.exhaustive_limit)
      throw Inconclusive("endomorphism ring of dimension " + std::to_string(ends.size()) +
                         " too large for an exhaustive locality check");
  }
  // local iff every element is a unit or nilpotent
  for (std::uint64_t code = 1; code < total; ++code) {
    FpMatrix x(p, n, n);
    auto v = code;
    for (const auto& e : ends) {
      const auto c = static_cast<std::uint32_t>(v % p);
      v /= p;
      if (c)
        x = x + ffla::scale(e, c);
    }
    if (ffla::rank(x) != n && !is_nilpotent(x))
      return false;
  }
  return true;
}

namespace {

std::optional<std::pair<FpMatrix, FpMatrix>> fitting_split(const MatRep& w, Rng& rng, unsigned rounds) {
  const auto ends = hom_space(w, w);
  if (ends.size() <= 1)
    return std::nullopt;
  const std::uint32_t p = w.p();
  for (unsigned r = 0; r < rounds; ++r) {
    FpMatrix theta(p, w.dim(), w.dim());
    for (const auto& e : ends)
      theta = theta + ffla::scale(e, static_cast<std::uint32_t>(rng.below(p)));
    const auto f = ffla::min_poly(theta);
    const auto fs = ffla::factor_poly(f, rng.next());
    if (fs.size() < 2)
      continue;
    auto g = ffla::FpPoly::constant(p, 1);
    for (unsigned i = 0; i < fs[0].multiplicity; ++i)
      g = g * fs[0].factor;
    const auto rest = f / g;
    return std::make_pair(ffla::left_nullspace(g.evaluate(theta)), ffla::left_nullspace(rest.evaluate(theta)));
  }
  return std::nullopt;
}

} // namespace

Decomposition indecomposable_summands(const MatRep& rep, std::uint64_t seed, const DecomposeOptions& opts) {
  if (rep.dim() > opts.max_dim)
    throw BoundExceeded("module dimension " + std::to_string(rep.dim()) + " exceeds decomposition bound " +
                        std::to_string(opts.max_dim));
  Rng rng(seed);
  Decomposition out;
  std::vector<std::pair<MatRep, FpMatrix>> work{{rep, FpMatrix::identity(rep.p(), rep.dim())}};
  while (!work.empty()) {
    auto [w, basis] = std::move(work.back());
    work.pop_back();
    if (w.dim() == 0)
      continue;
    if (auto split = fitting_split(w, rng, opts.fitting_rounds)) {
      for (const auto* u : {&split->second, &split->first}) {
        auto sub = submodule(w, *u);
        work.emplace_back(std::move(sub.rep), sub.basis * basis);
      }
      continue;
    }
    if (!endomorphism_ring_is_local(w, opts))
      throw Inconclusive("random endomorphisms failed to split a decomposable " + std::to_string(w.dim()) +
                         "-dimensional summand");
    out.summands.push_back(std::move(w));
    out.bases.push_back(std::move(basis));
  }
  // deterministic order: by dimension, then discovery
  std::vector<std::size_t> order(out.summands.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return out.summands[a].dim() < out.summands[b].dim(); });
  Decomposition sorted;
  for (auto i : order) {
    sorted.summands.push_back(std::move(out.summands[i]));
    sorted.bases.push_back(std::move(out.bases[i]));
  }
  FpMatrix cb(rep.p(), 0, rep.dim());
  for (const auto& b : sorted.bases)
    cb = ffla::vstack(cb, b);
  const auto cbinv = ffla::inverse(cb);
  if (!cbinv)
    throw std::logic_error("summand bases do not form a basis");
  for (std::size_t g = 0; g < rep.matrices().size(); ++g) {
    FpMatrix expect(rep.p(), 0, 0);
    for (const auto& s : sorted.summands)
      expect = ffla::block_diag(expect, s.matrix(g));
    if (cb * rep.matrix(g) * *cbinv != expect)
      throw std::logic_error("change of basis does not block-diagonalize the module");
  }
  sorted.change_of_basis = std::move(cb);
  return sorted;
}

} // namespace brauerbox::modrep
