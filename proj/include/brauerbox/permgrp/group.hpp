#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "brauerbox/permgrp/perm.hpp"
#include "brauerbox/permgrp/slp.hpp"
#include "brauerbox/rng.hpp"

namespace brauerbox::permgrp {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

struct StrongGenerator {
  Perm perm;
  std::uint32_t node = 0; // in the group's Slp over its defining generators
};

/// One level of the stabilizer chain. Orbit data is indexed by position
/// in `orbit`; `position` maps a point back to it (-1 if outside).
struct ChainLevel {
  Point base_point = 0;
  std::vector<std::uint32_t> generators; // strong generator indices
  std::vector<Point> orbit;
  std::vector<std::int32_t> position;
  std::vector<std::uint32_t> parent; // orbit position of the Schreier tree parent
  std::vector<std::uint32_t> edge;   // strong generator taking parent to this point
  std::vector<Perm> transversal;     // maps base_point to orbit[k]
  std::vector<std::uint32_t> node;   // Slp node of transversal[k]
};

/// A transversal element u: level and orbit position.
struct ChainFactor {
  std::size_t level;
  std::size_t position;
};

/// Permutation group with a complete stabilizer chain (Schreier-Sims).
/// Immutable after construction; shared through GroupPtr.
class PermGroup {
public:
  /// Random Schreier-Sims phase seeded by `seed`, followed by a
  /// deterministic pass that sifts every Schreier generator, so the
  /// resulting chain is always complete.
  static GroupPtr make(std::size_t degree, std::vector<Perm> generators, std::uint64_t seed = 0);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }

  const std::vector<ChainLevel>& chain() const { return chain_; }
  const std::vector<StrongGenerator>& strong_generators() const { return strong_; }
  const Slp& slp() const { return slp_; }
  std::vector<Point> base() const;

  struct SiftResult {
    Perm residue;
    std::vector<ChainFactor> factors; // g = residue * u(factors[0]) * u(factors[1]) * ...
    bool member = false;
  };
  SiftResult sift(const Perm& g) const;
  bool contains(const Perm& g) const;
  bool contains_all(const std::vector<Perm>& gs) const;
  /// Every generator of `other` lies in this group.
  bool contains_group(const PermGroup& other) const { return contains_all(other.generators()); }

  const Perm& transversal(const ChainFactor& f) const { return chain_[f.level].transversal[f.position]; }

  /// Uniformly distributed element.
  Perm random_element(Rng& rng) const;
  /// All elements; throws BoundExceeded if order() > bound.
  std::vector<Perm> elements(std::uint64_t bound = 1'000'000) const;

  Perm identity() const { return Perm(degree_); }

private:
  PermGroup() = default;

  struct Builder;

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::uint64_t order_ = 1;
  std::vector<ChainLevel> chain_;
  std::vector<StrongGenerator> strong_;
  Slp slp_;
};

/// Evaluates the homomorphism from G determined by images of G's defining
/// generators. Values of strong generators and transversals are cached.
/// Consistency of the images is the caller's responsibility.
template <class T>
class HomEvaluator {
public:
  using MulFn = typename SlpEvaluator<T>::MulFn;

  HomEvaluator(GroupPtr group, std::vector<T> gens, std::vector<T> gen_inverses, T identity, MulFn mul)
      : group_(std::move(group)), identity_(identity), mul_(mul),
        eval_(group_->slp(), std::move(gens), std::move(gen_inverses), std::move(identity), mul) {}

  const PermGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  const T& strong_generator(std::size_t i) { return eval_.value(group_->strong_generators()[i].node); }
  const T& transversal(const ChainFactor& f) {
    return eval_.value(group_->chain()[f.level].node[f.position]);
  }

  /// Image of g; throws std::invalid_argument if g is not in the group.
  T at(const Perm& g) {
    auto s = group_->sift(g);
    if (!s.member)
      throw std::invalid_argument("element " + g.to_string() + " is not in the group");
    if (s.factors.empty())
      return identity_;
    T result = transversal(s.factors[0]);
    for (std::size_t i = 1; i < s.factors.size(); ++i)
      result = mul_(result, transversal(s.factors[i]));
    return result;
  }

private:
  GroupPtr group_;
  T identity_;
  MulFn mul_;
  SlpEvaluator<T> eval_;
};

/// Homomorphism into a permutation group given by generator images.
HomEvaluator<Perm> perm_hom(GroupPtr group, const std::vector<Perm>& images);

} // namespace brauerbox::permgrp
