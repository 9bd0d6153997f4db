#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "brauerbox/permgrp/group.hpp"

namespace brauerbox::permgrp {

struct SearchBounds {
  std::uint64_t max_order = 10'000'000;
  std::size_t max_degree = 10'000;
};

/// Subgroup of `parent` generated by `gens`; throws std::invalid_argument
/// if some generator is not in the parent.
GroupPtr subgroup(const PermGroup& parent, std::vector<Perm> gens, std::uint64_t seed = 0);

GroupPtr trivial_group(std::size_t degree);

/// Smallest subgroup containing `gens` that is normalized by G's generators.
GroupPtr normal_closure(const PermGroup& g, const std::vector<Perm>& gens, std::uint64_t seed = 0);
GroupPtr derived_subgroup(const PermGroup& g);
/// Elements commuting with every generator (enumerates G).
GroupPtr centre(const PermGroup& g, std::uint64_t bound = 1'000'000);
bool is_normal(const PermGroup& g, const PermGroup& k);

/// N_G(K) by backtrack over G's chain, pruned by K-orbit lengths.
/// Throws BoundExceeded outside `bounds`.
GroupPtr normalizer(const PermGroup& g, const PermGroup& k, const SearchBounds& bounds = {});

/// Some g in G with K1^g = K2, or nullopt if none exists.
std::optional<Perm> conjugating_element(const PermGroup& g, const PermGroup& k1, const PermGroup& k2,
                                        const SearchBounds& bounds = {});

/// Same subgroup (mutual containment).
bool same_subgroup(const PermGroup& a, const PermGroup& b);
/// K^x as a group.
GroupPtr conjugate_group(const PermGroup& k, const Perm& x);

/// Sylow p-subgroup; trivial when p does not divide |G|.
GroupPtr sylow(const GroupPtr& g, std::uint32_t p, std::uint64_t seed = 0, const SearchBounds& bounds = {});

/// Subgroups of index p in a p-group, via hyperplanes of P/Phi(P).
std::vector<GroupPtr> maximal_subgroups_p_group(const GroupPtr& p_group, std::uint32_t p);
/// All subgroups of a p-group, one per subgroup (not up to conjugacy),
/// ordered by increasing order. Throws BoundExceeded beyond `max_count`.
std::vector<GroupPtr> subgroups_p_group(const GroupPtr& p_group, std::uint32_t p, std::size_t max_count = 10'000);

struct FusionRep {
  GroupPtr k_i;
  Perm g_i; // k_i^g_i = K
};

struct FusionData {
  GroupPtr g, h, k;
  std::vector<FusionRep> reps;
  std::size_t t() const { return reps.size(); }
};

/// Representatives K_i of the H-classes of subgroups of H that are
/// G-conjugate to K, with conjugators g_i. If K <= H then K_1 = K, g_1 = 1.
FusionData fusion_data(const GroupPtr& g, const GroupPtr& h, const GroupPtr& k, const SearchBounds& bounds = {});

struct Fingerprint {
  std::uint64_t order = 0;
  std::uint64_t abelianization_order = 0;
  std::uint64_t centre_order = 0;
  std::map<std::uint64_t, std::uint64_t> order_histogram;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const PermGroup& g, std::uint64_t bound = 1'000'000);

} // namespace brauerbox::permgrp
