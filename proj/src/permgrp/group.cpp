#include "brauerbox/permgrp/group.hpp"

#include <algorithm>

#include "brauerbox/error.hpp"

namespace brauerbox::permgrp {

struct PermGroup::Builder {
  PermGroup& g;

  struct Stuck {
    Perm residue;
    std::uint32_t node = 0;
    std::size_t level = 0;
  };

  void rebuild_level(std::size_t i) {
    auto& L = g.chain_[i];
    L.orbit.assign(1, L.base_point);
    L.position.assign(g.degree_, -1);
    L.position[L.base_point] = 0;
    L.parent.assign(1, 0);
    L.edge.assign(1, 0);
    L.transversal.assign(1, Perm(g.degree_));
    L.node.assign(1, Slp::identity());
    for (std::size_t k = 0; k < L.orbit.size(); ++k) {
      const Point x = L.orbit[k];
      for (auto s : L.generators) {
        const Point y = g.strong_[s].perm[x];
        if (L.position[y] >= 0)
          continue;
        L.position[y] = static_cast<std::int32_t>(L.orbit.size());
        L.orbit.push_back(y);
        L.parent.push_back(static_cast<std::uint32_t>(k));
        L.edge.push_back(s);
        L.transversal.push_back(L.transversal[k] * g.strong_[s].perm);
        L.node.push_back(g.slp_.mul(L.node[k], g.strong_[s].node));
      }
    }
  }

  // Sifts from level `start`; the node is only tracked when `track` is set.
  Stuck sift_from(Perm h, std::uint32_t node, std::size_t start, bool track) {
    for (std::size_t i = start; i < g.chain_.size(); ++i) {
      const auto& L = g.chain_[i];
      const auto pos = L.position[h[L.base_point]];
      if (pos < 0)
        return {std::move(h), node, i};
      h = h * L.transversal[pos].inverse();
      if (track)
        node = g.slp_.mul(node, g.slp_.inverse(L.node[pos]));
    }
    return {std::move(h), node, g.chain_.size()};
  }

  void add_strong(Perm r, std::uint32_t node, std::size_t level) {
    const auto idx = static_cast<std::uint32_t>(g.strong_.size());
    if (level == g.chain_.size()) {
      ChainLevel L;
      for (Point x = 0; x < g.degree_; ++x)
        if (r[x] != x) {
          L.base_point = x;
          break;
        }
      g.chain_.push_back(std::move(L));
    }
    g.strong_.push_back({std::move(r), node});
    for (std::size_t i = 0; i <= level; ++i) {
      g.chain_[i].generators.push_back(idx);
      rebuild_level(i);
    }
  }

  void consider(const Perm& h, std::uint32_t node, std::size_t start) {
    auto s = sift_from(h, node, start, false);
    if (s.residue.is_identity())
      return;
    s = sift_from(h, node, start, true);
    add_strong(std::move(s.residue), s.node, s.level);
  }

  void random_phase(std::uint64_t seed) {
    std::vector<std::pair<Perm, std::uint32_t>> state;
    for (std::size_t i = 0; i < g.generators_.size(); ++i)
      if (!g.generators_[i].is_identity())
        state.emplace_back(g.generators_[i], g.slp_.gen(i));
    if (state.empty())
      return;
    const std::size_t base_count = state.size();
    while (state.size() < 10)
      state.push_back(state[state.size() % base_count]);
    Rng rng(seed);
    std::pair<Perm, std::uint32_t> acc{Perm(g.degree_), Slp::identity()};
    auto step = [&] {
      const auto r = state.size();
      const auto i = rng.below(r);
      auto j = rng.below(r - 1);
      if (j >= i)
        ++j;
      if (rng.below(2)) {
        state[i].first = state[i].first * state[j].first;
        state[i].second = g.slp_.mul(state[i].second, state[j].second);
      } else {
        state[i].first = state[i].first * state[j].first.inverse();
        state[i].second = g.slp_.mul(state[i].second, g.slp_.inverse(state[j].second));
      }
      acc.first = acc.first * state[i].first;
      acc.second = g.slp_.mul(acc.second, state[i].second);
    };
    for (int k = 0; k < 30; ++k)
      step();
    int quiet = 0;
    for (int steps = 0; quiet < 12 && steps < 500; ++steps) {
      step();
      const auto before = g.strong_.size();
      consider(acc.first, acc.second, 0);
      quiet = g.strong_.size() == before ? quiet + 1 : 0;
    }
  }

  void complete() {
    std::vector<bool> verified(g.chain_.size(), false);
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(g.chain_.size()) - 1;
    while (i >= 0) {
      if (verified[i]) {
        --i;
        continue;
      }
      bool added = false;
      const auto level = static_cast<std::size_t>(i);
      const std::size_t orbit_size = g.chain_[level].orbit.size();
      const auto gens = g.chain_[level].generators;
      for (std::size_t k = 0; k < orbit_size && !added; ++k) {
        for (auto s : gens) {
          const auto& L = g.chain_[level];
          const auto& sp = g.strong_[s].perm;
          const auto y = static_cast<std::size_t>(L.position[sp[L.orbit[k]]]);
          Perm h = L.transversal[k] * sp * L.transversal[y].inverse();
          if (h.is_identity())
            continue;
          auto st = sift_from(h, 0, level + 1, false);
          if (st.residue.is_identity())
            continue;
          const auto node = g.slp_.mul(g.slp_.mul(L.node[k], g.strong_[s].node), g.slp_.inverse(L.node[y]));
          st = sift_from(std::move(h), node, level + 1, true);
          add_strong(std::move(st.residue), st.node, st.level);
          verified.resize(g.chain_.size(), false);
          for (std::size_t t = 0; t <= st.level; ++t)
            verified[t] = false;
          i = static_cast<std::ptrdiff_t>(st.level);
          added = true;
          break;
        }
      }
      if (!added) {
        verified[level] = true;
        --i;
      }
    }
  }
};

GroupPtr PermGroup::make(std::size_t degree, std::vector<Perm> generators, std::uint64_t seed) {
  for (const auto& x : generators)
    if (x.degree() != degree)
      throw std::invalid_argument("generator degree " + std::to_string(x.degree()) + " differs from " +
                                  std::to_string(degree));
  std::shared_ptr<PermGroup> g(new PermGroup());
  g->degree_ = degree;
  g->generators_ = std::move(generators);
  g->slp_ = Slp(g->generators_.size());
  Builder b{*g};
  for (std::size_t i = 0; i < g->generators_.size(); ++i)
    if (!g->generators_[i].is_identity())
      b.consider(g->generators_[i], g->slp_.gen(i), 0);
  b.random_phase(seed);
  b.complete();
  unsigned __int128 order = 1;
  for (const auto& L : g->chain_) {
    order *= L.orbit.size();
    if (order > (static_cast<unsigned __int128>(1) << 63))
      throw BoundExceeded("group order exceeds 2^63");
  }
  g->order_ = static_cast<std::uint64_t>(order);
  return g;
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& L : chain_)
    b.push_back(L.base_point);
  return b;
}

PermGroup::SiftResult PermGroup::sift(const Perm& g) const {
  if (g.degree() != degree_)
    throw std::invalid_argument("element degree differs from group degree");
  SiftResult r;
  r.residue = g;
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    const auto& L = chain_[i];
    const auto pos = L.position[r.residue[L.base_point]];
    if (pos < 0) {
      std::reverse(r.factors.begin(), r.factors.end());
      return r;
    }
    if (pos == 0)
      continue;
    r.residue = r.residue * L.transversal[pos].inverse();
    r.factors.push_back({i, static_cast<std::size_t>(pos)});
  }
  std::reverse(r.factors.begin(), r.factors.end());
  r.member = r.residue.is_identity();
  return r;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_)
    return false;
  Perm h = g;
  for (const auto& L : chain_) {
    const auto pos = L.position[h[L.base_point]];
    if (pos < 0)
      return false;
    h = h * L.transversal[pos].inverse();
  }
  return h.is_identity();
}

bool PermGroup::contains_all(const std::vector<Perm>& gs) const {
  return std::all_of(gs.begin(), gs.end(), [&](const Perm& x) { return contains(x); });
}

Perm PermGroup::random_element(Rng& rng) const {
  Perm g(degree_);
  for (std::size_t i = chain_.size(); i-- > 0;) {
    const auto& L = chain_[i];
    g = L.transversal[rng.below(L.orbit.size())] * g;
  }
  return g;
}

std::vector<Perm> PermGroup::elements(std::uint64_t bound) const {
  if (order_ > bound)
    throw BoundExceeded("group of order " + std::to_string(order_) + " exceeds element bound " +
                        std::to_string(bound));
  std::vector<Perm> out{Perm(degree_)};
  out.reserve(order_);
  // g = u_{L-1} ... u_0: extend on the right from the deepest level up
  for (std::size_t i = chain_.size(); i-- > 0;) {
    const auto& L = chain_[i];
    std::vector<Perm> next;
    next.reserve(out.size() * L.orbit.size());
    for (const auto& x : out)
      for (const auto& u : L.transversal)
        next.push_back(x * u);
    out = std::move(next);
  }
  return out;
}

HomEvaluator<Perm> perm_hom(GroupPtr group, const std::vector<Perm>& images) {
  if (images.size() != group->generators().size())
    throw std::invalid_argument("need one image per generator");
  std::size_t degree = images.empty() ? 0 : images.front().degree();
  std::vector<Perm> inverses;
  for (const auto& x : images) {
    if (x.degree() != degree)
      throw std::invalid_argument("image degrees differ");
    inverses.push_back(x.inverse());
  }
  return HomEvaluator<Perm>(std::move(group), images, std::move(inverses), Perm(degree),
                            [](const Perm& a, const Perm& b) { return a * b; });
}

} // namespace brauerbox::permgrp
