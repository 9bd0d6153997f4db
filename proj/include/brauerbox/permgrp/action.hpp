#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "brauerbox/permgrp/group.hpp"

namespace brauerbox::permgrp {

/// Action of a group on {0..size-1} given by images of its defining
/// generators.
class PermAction {
public:
  PermAction() = default;
  /// Images must share one degree (the domain size).
  PermAction(GroupPtr group, std::vector<Perm> generator_images, std::vector<std::string> labels = {});

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return size_; }
  const std::vector<Perm>& generator_images() const { return images_; }
  const std::vector<std::string>& labels() const { return labels_; }

  HomEvaluator<Perm> evaluator() const { return perm_hom(group_, images_); }
  /// Throws InputError if a random word in the generators is evaluated
  /// differently along the word and through the stabilizer chain.
  void spot_check(std::uint64_t seed, int trials = 20) const;

private:
  GroupPtr group_;
  std::size_t size_ = 0;
  std::vector<Perm> images_;
  std::vector<std::string> labels_;
};

PermAction natural_action(GroupPtr group);

struct OrbitData {
  std::vector<Point> points;
  /// words[k] lists generator indices whose product maps the start to points[k]
  std::vector<std::vector<std::uint32_t>> words;
};

/// Throws std::out_of_range if the point is outside the domain.
OrbitData orbit(const PermAction& action, Point start);
std::vector<Point> orbit_points(const std::vector<Perm>& gens, std::size_t degree, Point start);
/// Orbit partition as an id per point (ids in order of smallest point).
std::vector<std::uint32_t> orbit_ids(const std::vector<Perm>& gens, std::size_t degree);

/// Right cosets H x of H in G. Coset 0 is H itself; the representative
/// list is a right transversal.
class CosetTable {
public:
  /// Throws std::invalid_argument if H is not a subgroup of G, BoundExceeded
  /// if the index exceeds `bound`.
  CosetTable(GroupPtr g, GroupPtr h, std::uint64_t bound = 1'000'000);

  const GroupPtr& group() const { return g_; }
  const GroupPtr& subgroup() const { return h_; }
  std::size_t size() const { return reps_.size(); }
  const std::vector<Perm>& representatives() const { return reps_; }
  /// Index of the coset H g.
  std::size_t index_of(const Perm& g) const;
  const PermAction& action() const { return action_; }

private:
  std::vector<Point> key(const Perm& x) const;

  GroupPtr g_, h_;
  std::vector<Perm> reps_;
  struct KeyHash {
    std::size_t operator()(const std::vector<Point>& v) const noexcept;
  };
  std::unordered_map<std::vector<Point>, std::size_t, KeyHash> index_;
  PermAction action_;
};

PermAction coset_action(GroupPtr g, GroupPtr h);

/// Point stabilizer via Schreier generators.
GroupPtr stabilizer(const PermAction& action, Point point, std::uint64_t seed = 0);

} // namespace brauerbox::permgrp
