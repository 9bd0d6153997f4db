#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brauerbox/modrep/rep.hpp"
#include "brauerbox/permgrp/action.hpp"
#include "brauerbox/permgrp/search.hpp"

namespace brauerbox::brauer {

using ffla::FpMatrix;
using modrep::MatRep;
using permgrp::GroupPtr;
using permgrp::Perm;

/// Basis (reduced echelon) of V^K = {v : v g = v for g in K}.
FpMatrix fixed_points(const MatRep& rep, const GroupPtr& k);

/// Image of Tr_Q^P on the given subspace of V^Q, summing v t over a right
/// transversal of Q in P. Throws std::invalid_argument unless Q <= P <= G
/// and the subspace is Q-fixed.
FpMatrix relative_trace(const MatRep& rep, const GroupPtr& q, const GroupPtr& p, const FpMatrix& subspace);

struct BrauerQuotient {
  GroupPtr normalizer;
  MatRep quotient_rep;     // V(P) as an N-module
  FpMatrix fixed_basis;    // V^P, reduced echelon, ambient coordinates
  FpMatrix traced_subspace; // sum of Tr_Q^P(V^Q) over maximal Q < P
  /// Row i: image of fixed_basis row i in the coordinates of quotient_rep.
  FpMatrix brauer_map;
};

/// V(P) = V^P / sum_{Q < P} Tr_Q^P(V^Q). N defaults to N_G(P); a supplied
/// N must lie in G and normalize P. P must be a p-group for p = rep.p().
BrauerQuotient brauer_quotient(const MatRep& rep, const GroupPtr& p, GroupPtr n = nullptr,
                               const permgrp::SearchBounds& bounds = {});

struct FixedPointPart {
  GroupPtr k_i;                 // K_i <= H, K_i^{g_i} = K (null for supplied parts)
  Perm g_i;
  GroupPtr stabilizer;          // N_{H^{g_i}}(K): point stabilizer of the part in N_G(K)
  std::vector<std::size_t> points; // indices into FixedPointReport::points
};

/// K-fixed points of the coset space H\G, split into N_G(K)-orbits.
struct FixedPointReport {
  GroupPtr normalizer;           // N_G(K)
  std::vector<std::string> points; // labels of the fixed cosets
  std::vector<FixedPointPart> parts;
  permgrp::PermAction action;    // N_G(K) on the fixed points
  std::size_t size() const { return points.size(); }
};

/// Throws std::logic_error if the parts fail to partition the directly
/// counted fixed points or two parts share a double coset.
FixedPointReport perm_fixed_points(const GroupPtr& g, const GroupPtr& h, const GroupPtr& k,
                                   const permgrp::SearchBounds& bounds = {});
/// Report assembled from supplied point stabilizers N_{H^{g_i}}(K) <= N
/// when G and H are out of reach: the action is the disjoint union of
/// the coset actions of N on them.
FixedPointReport fixed_points_from_parts(const GroupPtr& n, const std::vector<GroupPtr>& stabilizers);

/// sum_i |N_G(K)| / |N_H(K_i)| over the fusion representatives.
std::uint64_t marks_count(const GroupPtr& g, const GroupPtr& h, const GroupPtr& k,
                          const permgrp::SearchBounds& bounds = {});

/// V(P) for a module whose standard basis is permuted by P. When N also
/// permutes the basis the result is the permutation module on the
/// P-fixed basis vectors; otherwise the generic quotient is returned.
/// Throws InputError if P does not permute the basis.
MatRep green_trivial_source(const MatRep& rep, const GroupPtr& p, const GroupPtr& n);
/// True if the fast path applies (N permutes the standard basis).
bool trivial_source_fast_path(const MatRep& rep, const GroupPtr& n);

struct GreenResult {
  MatRep correspondent;
  std::vector<MatRep> discarded; // summands of Res_N(V) with smaller vertex
};

struct VertexSplit {
  std::vector<MatRep> kept;      // not relatively projective to a maximal subgroup of P
  std::vector<MatRep> discarded;
};

/// Indecomposable summands of Res_N(V), split by whether their vertex is
/// strictly smaller than P.
VertexSplit split_by_vertex(const MatRep& rep, const GroupPtr& p, const GroupPtr& n, std::uint64_t seed = 0);

/// Restrict to N = N_G(P), decompose, and keep the unique summand that is
/// not relatively projective to any maximal subgroup of P. Throws
/// InputError if there is no such summand or more than one, Inconclusive
/// if decomposition cannot be certified.
GreenResult green_correspondent(const MatRep& rep, const GroupPtr& p, const GroupPtr& n, std::uint64_t seed = 0);

} // namespace brauerbox::brauer
