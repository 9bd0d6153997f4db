#include "brauerbox/permgrp/action.hpp"

#include <stdexcept>

#include "brauerbox/error.hpp"

namespace brauerbox::permgrp {

PermAction::PermAction(GroupPtr group, std::vector<Perm> generator_images, std::vector<std::string> labels)
    : group_(std::move(group)), images_(std::move(generator_images)), labels_(std::move(labels)) {
  if (images_.size() != group_->generators().size())
    throw std::invalid_argument("action needs one image per group generator");
  size_ = images_.empty() ? 0 : images_.front().degree();
  for (const auto& x : images_)
    if (x.degree() != size_)
      throw std::invalid_argument("action images have different degrees");
  if (!labels_.empty() && labels_.size() != size_)
    throw std::invalid_argument("label count differs from domain size");
}

void PermAction::spot_check(std::uint64_t seed, int trials) const {
  if (images_.empty())
    return;
  Rng rng(seed);
  auto hom = evaluator();
  const auto& gens = group_->generators();
  for (int t = 0; t < trials; ++t) {
    Perm g = group_->identity();
    Perm img(size_);
    const auto len = 1 + rng.below(20);
    for (std::uint64_t k = 0; k < len; ++k) {
      const auto i = rng.below(gens.size());
      g = g * gens[i];
      img = img * images_[i];
    }
    // g * g^-1 is a relator; evaluating g through the chain uses a
    // different word, so agreement is a relation check
    if (hom.at(g) != img)
      throw InputError("action does not respect a group relation");
  }
}

PermAction natural_action(GroupPtr group) {
  auto gens = group->generators();
  return PermAction(std::move(group), std::move(gens));
}

OrbitData orbit(const PermAction& action, Point start) {
  if (start >= action.size())
    throw std::out_of_range("point " + std::to_string(start + 1) + " outside the domain");
  OrbitData d;
  std::vector<bool> seen(action.size(), false);
  d.points.push_back(start);
  d.words.emplace_back();
  seen[start] = true;
  for (std::size_t k = 0; k < d.points.size(); ++k) {
    for (std::uint32_t i = 0; i < action.generator_images().size(); ++i) {
      const Point y = action.generator_images()[i][d.points[k]];
      if (seen[y])
        continue;
      seen[y] = true;
      d.points.push_back(y);
      auto w = d.words[k];
      w.push_back(i);
      d.words.push_back(std::move(w));
    }
  }
  return d;
}

std::vector<Point> orbit_points(const std::vector<Perm>& gens, std::size_t degree, Point start) {
  std::vector<bool> seen(degree, false);
  std::vector<Point> pts{start};
  seen[start] = true;
  for (std::size_t k = 0; k < pts.size(); ++k)
    for (const auto& s : gens) {
      const Point y = s[pts[k]];
      if (!seen[y]) {
        seen[y] = true;
        pts.push_back(y);
      }
    }
  return pts;
}

std::vector<std::uint32_t> orbit_ids(const std::vector<Perm>& gens, std::size_t degree) {
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> id(degree, unset);
  std::uint32_t next = 0;
  for (Point x = 0; x < degree; ++x) {
    if (id[x] != unset)
      continue;
    for (auto y : orbit_points(gens, degree, x))
      id[y] = next;
    ++next;
  }
  return id;
}

std::size_t CosetTable::KeyHash::operator()(const std::vector<Point>& v) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : v) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

// The element of Hx whose images of H's base are lexicographically least.
std::vector<Point> CosetTable::key(const Perm& x) const {
  Perm y = x;
  for (const auto& L : h_->chain()) {
    std::size_t best = 0;
    Point best_image = y[L.orbit[0]];
    for (std::size_t i = 1; i < L.orbit.size(); ++i) {
      const Point im = y[L.orbit[i]];
      if (im < best_image) {
        best_image = im;
        best = i;
      }
    }
    y = L.transversal[best] * y;
  }
  return y.images();
}

CosetTable::CosetTable(GroupPtr g, GroupPtr h, std::uint64_t bound) : g_(std::move(g)), h_(std::move(h)) {
  if (h_->degree() != g_->degree() || !g_->contains_group(*h_))
    throw std::invalid_argument("subgroup is not contained in the group");
  if (g_->order() / h_->order() > bound)
    throw BoundExceeded("index " + std::to_string(g_->order() / h_->order()) + " exceeds coset bound");
  reps_.push_back(g_->identity());
  index_.emplace(key(reps_[0]), 0);
  const auto& gens = g_->generators();
  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t c = 0; c < reps_.size(); ++c) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Perm x = reps_[c] * gens[i];
      auto [it, fresh] = index_.emplace(key(x), reps_.size());
      if (fresh)
        reps_.push_back(std::move(x));
      images[i].push_back(static_cast<Point>(it->second));
    }
  }
  if (reps_.size() * h_->order() != g_->order())
    throw std::logic_error("coset enumeration produced the wrong index");
  std::vector<Perm> perms;
  for (auto& im : images)
    perms.emplace_back(std::move(im));
  if (gens.empty())
    perms.clear();
  action_ = PermAction(g_, std::move(perms));
}

std::size_t CosetTable::index_of(const Perm& g) const {
  auto it = index_.find(key(g));
  if (it == index_.end())
    throw std::invalid_argument("element is not in the group");
  return it->second;
}

PermAction coset_action(GroupPtr g, GroupPtr h) { return CosetTable(std::move(g), std::move(h)).action(); }

GroupPtr stabilizer(const PermAction& action, Point point, std::uint64_t seed) {
  if (point >= action.size())
    throw std::out_of_range("point outside the domain");
  const auto& G = *action.group();
  const auto& gens = G.generators();
  const auto& imgs = action.generator_images();
  std::vector<std::int64_t> pos(action.size(), -1);
  std::vector<Point> pts{point};
  std::vector<Perm> trans{G.identity()};
  pos[point] = 0;
  for (std::size_t k = 0; k < pts.size(); ++k)
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Point y = imgs[i][pts[k]];
      if (pos[y] < 0) {
        pos[y] = static_cast<std::int64_t>(pts.size());
        pts.push_back(y);
        trans.push_back(trans[k] * gens[i]);
      }
    }
  // Schreier generators, filtered through a growing subgroup to keep the
  // generating set small
  std::vector<Perm> sgens;
  GroupPtr s = PermGroup::make(G.degree(), {}, seed);
  for (std::size_t k = 0; k < pts.size(); ++k)
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Point y = imgs[i][pts[k]];
      Perm h = trans[k] * gens[i] * trans[pos[y]].inverse();
      if (h.is_identity() || s->contains(h))
        continue;
      sgens.push_back(std::move(h));
      s = PermGroup::make(G.degree(), sgens, seed);
    }
  if (s->order() * pts.size() != G.order())
    throw std::logic_error("orbit-stabilizer count mismatch");
  return s;
}

} // namespace brauerbox::permgrp
