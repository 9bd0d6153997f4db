#pragma once

#include <cstdint>

#include "brauerbox/modrep/rep.hpp"

namespace brauerbox::modrep {

struct ProjectivityBounds {
  std::uint64_t max_order = 10'000; // |H| for element sums
  std::uint64_t max_index = 10'000; // [H:Q] for relative traces
};

/// Higman's criterion relative to Q <= H: the identity is Tr_Q^H of some
/// kQ-endomorphism of V.
bool relatively_projective(const MatRep& rep, const GroupPtr& q, const ProjectivityBounds& bounds = {});

/// Projective over kH. Decided on a Sylow p-subgroup S, where projective
/// means free: the norm element of kS has rank dim V / |S|.
bool is_projective(const MatRep& rep, std::uint64_t seed = 0, const ProjectivityBounds& bounds = {});

/// A minimal-order subgroup of a Sylow p-subgroup relative to which V is
/// projective. For indecomposable V this is a vertex.
GroupPtr vertex(const MatRep& rep, std::uint64_t seed = 0, const ProjectivityBounds& bounds = {});

} // namespace brauerbox::modrep
