#include "brauerbox/permgrp/search.hpp"

#include <algorithm>
#include <functional>

#include "brauerbox/error.hpp"
#include "brauerbox/ffla/matrix.hpp"
#include "brauerbox/permgrp/action.hpp"

namespace brauerbox::permgrp {

GroupPtr subgroup(const PermGroup& parent, std::vector<Perm> gens, std::uint64_t seed) {
  for (const auto& x : gens)
    if (!parent.contains(x))
      throw std::invalid_argument("generator " + x.to_string() + " is not in the parent group");
  return PermGroup::make(parent.degree(), std::move(gens), seed);
}

GroupPtr trivial_group(std::size_t degree) { return PermGroup::make(degree, {}); }

namespace {

// Adds x to the generators of k unless it is already a member.
GroupPtr adjoin(const GroupPtr& k, const Perm& x) {
  if (k->contains(x))
    return k;
  auto gens = k->generators();
  gens.push_back(x);
  return PermGroup::make(k->degree(), std::move(gens));
}

void check_bounds(const PermGroup& g, const SearchBounds& b) {
  if (g.degree() > b.max_degree)
    throw BoundExceeded("degree " + std::to_string(g.degree()) + " exceeds search bound " +
                        std::to_string(b.max_degree));
  if (g.order() > b.max_order)
    throw BoundExceeded("group order " + std::to_string(g.order()) + " exceeds search bound " +
                        std::to_string(b.max_order));
}

struct OrbitInfo {
  std::vector<std::uint32_t> id;
  std::vector<std::size_t> size; // by id
};

OrbitInfo orbit_info(const PermGroup& k) {
  OrbitInfo info;
  info.id = orbit_ids(k.generators(), k.degree());
  std::uint32_t n = 0;
  for (auto x : info.id)
    n = std::max(n, x + 1);
  info.size.assign(n, 0);
  for (auto x : info.id)
    ++info.size[x];
  return info;
}

std::vector<std::size_t> sorted_orbit_sizes(const OrbitInfo& o) {
  auto s = o.size;
  std::sort(s.begin(), s.end());
  return s;
}

// Depth-first walk over g = u_{L-1} ... u_0. `images[j]` is the image of
// base point j under g; a branch survives only if the partial base image
// can still carry K1-orbits onto K2-orbits of the same size.
class OrbitBacktrack {
public:
  OrbitBacktrack(const PermGroup& g, const PermGroup& k1, const PermGroup& k2)
      : g_(g), a_(orbit_info(k1)), b_(orbit_info(k2)) {}

  // leaf returns true to stop the search
  void run(const std::function<bool(const Perm&)>& leaf) {
    leaf_ = &leaf;
    images_.assign(g_.chain().size(), 0);
    stopped_ = false;
    visit(0, g_.identity());
  }

private:
  bool consistent(std::size_t depth) const {
    const auto& chain = g_.chain();
    for (std::size_t j = 0; j <= depth; ++j) {
      const auto oa = a_.id[chain[j].base_point];
      const auto ob = b_.id[images_[j]];
      if (a_.size[oa] != b_.size[ob])
        return false;
      for (std::size_t i = 0; i < j; ++i) {
        const bool same_a = a_.id[chain[i].base_point] == oa;
        const bool same_b = b_.id[images_[i]] == ob;
        if (same_a != same_b)
          return false;
      }
    }
    return true;
  }

  void visit(std::size_t level, const Perm& suffix) {
    const auto& chain = g_.chain();
    if (level == chain.size()) {
      stopped_ = (*leaf_)(suffix);
      return;
    }
    const auto& L = chain[level];
    for (std::size_t k = 0; k < L.orbit.size() && !stopped_; ++k) {
      images_[level] = suffix[L.orbit[k]];
      if (!consistent(level))
        continue;
      visit(level + 1, L.transversal[k] * suffix);
    }
  }

  const PermGroup& g_;
  OrbitInfo a_, b_;
  std::vector<Point> images_;
  const std::function<bool(const Perm&)>* leaf_ = nullptr;
  bool stopped_ = false;
};

bool maps_into(const PermGroup& k1, const Perm& g, const PermGroup& k2) {
  for (const auto& x : k1.generators())
    if (!k2.contains(conjugate(x, g)))
      return false;
  return true;
}

} // namespace

GroupPtr normal_closure(const PermGroup& g, const std::vector<Perm>& gens, std::uint64_t seed) {
  std::vector<Perm> cur;
  for (const auto& x : gens)
    if (!x.is_identity())
      cur.push_back(x);
  auto n = PermGroup::make(g.degree(), cur, seed);
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < n->generators().size() && !grew; ++i)
      for (const auto& s : g.generators()) {
        Perm c = conjugate(n->generators()[i], s);
        if (!n->contains(c)) {
          cur.push_back(std::move(c));
          n = PermGroup::make(g.degree(), cur, seed);
          grew = true;
          break;
        }
      }
  }
  return n;
}

GroupPtr derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      comms.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
  return normal_closure(g, comms);
}

GroupPtr centre(const PermGroup& g, std::uint64_t bound) {
  GroupPtr z = trivial_group(g.degree());
  for (const auto& x : g.elements(bound)) {
    bool central = std::all_of(g.generators().begin(), g.generators().end(),
                               [&](const Perm& s) { return x * s == s * x; });
    if (central)
      z = adjoin(z, x);
  }
  return z;
}

bool is_normal(const PermGroup& g, const PermGroup& k) {
  for (const auto& s : g.generators())
    if (!maps_into(k, s, k))
      return false;
  return true;
}

bool same_subgroup(const PermGroup& a, const PermGroup& b) {
  return a.order() == b.order() && a.contains_group(b);
}

GroupPtr conjugate_group(const PermGroup& k, const Perm& x) {
  std::vector<Perm> gens;
  for (const auto& s : k.generators())
    gens.push_back(conjugate(s, x));
  return PermGroup::make(k.degree(), std::move(gens));
}

GroupPtr normalizer(const PermGroup& g, const PermGroup& k, const SearchBounds& bounds) {
  if (!g.contains_group(k))
    throw std::invalid_argument("subgroup is not contained in the group");
  auto whole = PermGroup::make(g.degree(), g.generators());
  if (is_normal(g, k))
    return whole;
  check_bounds(g, bounds);
  auto n = PermGroup::make(g.degree(), k.generators());
  // generators of G that normalize K are cheap candidates
  for (const auto& s : g.generators())
    if (maps_into(k, s, k))
      n = adjoin(n, s);
  OrbitBacktrack bt(g, k, k);
  bt.run([&](const Perm& x) {
    if (!n->contains(x) && maps_into(k, x, k))
      n = adjoin(n, x);
    return false;
  });
  return n;
}

std::optional<Perm> conjugating_element(const PermGroup& g, const PermGroup& k1, const PermGroup& k2,
                                        const SearchBounds& bounds) {
  if (!g.contains_group(k1) || !g.contains_group(k2))
    throw std::invalid_argument("subgroups must lie in the group");
  if (k1.order() != k2.order())
    return std::nullopt;
  if (same_subgroup(k1, k2))
    return g.identity();
  if (sorted_orbit_sizes(orbit_info(k1)) != sorted_orbit_sizes(orbit_info(k2)))
    return std::nullopt;
  check_bounds(g, bounds);
  std::optional<Perm> found;
  OrbitBacktrack bt(g, k1, k2);
  bt.run([&](const Perm& x) {
    if (maps_into(k1, x, k2)) {
      found = x;
      return true;
    }
    return false;
  });
  return found;
}

GroupPtr sylow(const GroupPtr& g, std::uint32_t p, std::uint64_t seed, const SearchBounds& bounds) {
  std::uint64_t target = 1;
  for (auto n = g->order(); n % p == 0; n /= p)
    target *= p;
  GroupPtr s = trivial_group(g->degree());
  Rng rng(seed);
  while (s->order() < target) {
    GroupPtr n = s->is_trivial() ? g : normalizer(*g, *s, bounds);
    bool grown = false;
    for (int attempt = 0; attempt < 5000 && !grown; ++attempt) {
      Perm x = n->random_element(rng);
      auto ord = x.order();
      while (ord % p == 0)
        ord /= p;
      Perm y = x.pow(static_cast<long long>(ord));
      if (y.is_identity() || s->contains(y))
        continue;
      auto gens = s->generators();
      gens.push_back(y);
      s = PermGroup::make(g->degree(), std::move(gens), seed);
      grown = true;
    }
    if (!grown)
      throw Inconclusive("no p-element found outside the current p-subgroup");
  }
  return s;
}

std::vector<GroupPtr> maximal_subgroups_p_group(const GroupPtr& pg, std::uint32_t p) {
  if (pg->is_trivial())
    return {};
  std::vector<Perm> rels;
  const auto& gens = pg->generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    rels.push_back(gens[i].pow(p));
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      rels.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
  }
  auto phi = normal_closure(*pg, rels);
  // minimal generators modulo the Frattini subgroup
  std::vector<Perm> ys;
  auto cur = phi;
  for (const auto& x : gens)
    if (!cur->contains(x)) {
      ys.push_back(x);
      auto cg = cur->generators();
      cg.push_back(x);
      cur = PermGroup::make(pg->degree(), std::move(cg));
    }
  const std::size_t r = ys.size();
  std::vector<GroupPtr> out;
  // one hyperplane per functional with leading coefficient 1
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i)
    total *= p;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::vector<std::int64_t> c(r);
    auto v = code;
    for (std::size_t i = 0; i < r; ++i) {
      c[i] = static_cast<std::int64_t>(v % p);
      v /= p;
    }
    auto lead = std::find_if(c.begin(), c.end(), [](std::int64_t x) { return x != 0; });
    if (*lead != 1)
      continue;
    auto kernel = ffla::nullspace(ffla::FpMatrix::from_rows(p, {c}));
    auto mgens = phi->generators();
    for (std::size_t row = 0; row < kernel.rows(); ++row) {
      Perm e = pg->identity();
      for (std::size_t i = 0; i < r; ++i)
        e = e * ys[i].pow(kernel.at(row, i));
      mgens.push_back(e);
    }
    out.push_back(PermGroup::make(pg->degree(), std::move(mgens)));
  }
  return out;
}

std::vector<GroupPtr> subgroups_p_group(const GroupPtr& pg, std::uint32_t p, std::size_t max_count) {
  std::vector<GroupPtr> all{PermGroup::make(pg->degree(), pg->generators())};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (auto& m : maximal_subgroups_p_group(all[i], p)) {
      bool seen = std::any_of(all.begin(), all.end(), [&](const GroupPtr& x) { return same_subgroup(*x, *m); });
      if (!seen) {
        all.push_back(m);
        if (all.size() > max_count)
          throw BoundExceeded("more than " + std::to_string(max_count) + " subgroups");
      }
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const GroupPtr& a, const GroupPtr& b) { return a->order() < b->order(); });
  return all;
}

FusionData fusion_data(const GroupPtr& g, const GroupPtr& h, const GroupPtr& k, const SearchBounds& bounds) {
  if (!g->contains_group(*h) || !g->contains_group(*k))
    throw std::invalid_argument("H and K must be subgroups of G");
  FusionData fd{g, h, k, {}};
  auto n = normalizer(*g, *k, bounds);
  CosetTable cosets(g, n);
  const auto& reps = cosets.representatives();
  std::vector<bool> good(cosets.size(), false);
  for (std::size_t c = 0; c < cosets.size(); ++c)
    good[c] = maps_into(*k, reps[c], *h);
  std::vector<bool> done(cosets.size(), false);
  for (std::size_t c = 0; c < cosets.size(); ++c) {
    if (!good[c] || done[c])
      continue;
    std::vector<std::size_t> queue{c};
    done[c] = true;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& s : h->generators()) {
        const auto d = cosets.index_of(reps[queue[q]] * s);
        if (!done[d]) {
          done[d] = true;
          queue.push_back(d);
        }
      }
    // coset 0 is N_G(K) itself, so K <= H puts (K, 1) first
    fd.reps.push_back({conjugate_group(*k, reps[c]), reps[c].inverse()});
  }
  return fd;
}

Fingerprint fingerprint(const PermGroup& g, std::uint64_t bound) {
  Fingerprint f;
  f.order = g.order();
  f.abelianization_order = g.order() / derived_subgroup(g)->order();
  f.centre_order = centre(g, bound)->order();
  for (const auto& x : g.elements(bound))
    ++f.order_histogram[x.order()];
  return f;
}

} // namespace brauerbox::permgrp
