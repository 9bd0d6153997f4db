#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "brauerbox/ffla/matrix.hpp"
#include "brauerbox/modrep/rep.hpp"
#include "brauerbox/permgrp/construct.hpp"
#include "brauerbox/permgrp/search.hpp"

namespace brauerbox::cli {

using permgrp::GroupPtr;
using permgrp::Perm;

/// GL_2(3) on the eight nonzero row vectors of F_3^2, generated by
/// diag(-1,1), diag(1,-1), the coordinate swap and [[1,1],[0,1]]. The
/// first three generate the monomial D8, the first two and the last the
/// upper triangular Borel subgroup.
struct Gl23 {
  GroupPtr group;
  std::vector<ffla::FpMatrix> matrices; // one 2x2 matrix over F_3 per generator
};
Gl23 gl2_3();

/// Images of the GL_2(3) generators on the four lines of F_3^2, as 3x3
/// matrices over F_2 on F_2^4 / <1111> (basis e1, e2, e3).
std::vector<ffla::FpMatrix> line_module_matrices(const Gl23& gl);

/// Orbit lengths of the generators' action on the vectors of F_q^d.
std::vector<std::size_t> vector_orbit_lengths(const std::vector<ffla::FpMatrix>& mats);

/// The groups of the local J4 computation, all inside N = (2^3 x 3^2):GL_2(3).
struct LocalGroups {
  GroupPtr n;      // order 3456
  GroupPtr p;      // 3^2 translations
  GroupPtr e;      // 2^3 translations
  GroupPtr c;      // E x P
  GroupPtr d8;     // monomial D8 inside the complement
  GroupPtr hprime; // P:D8, the copy of N_{A8}(P) in N
  GroupPtr h;      // C:D8
  GroupPtr ntilde; // order 216, 2 x (P:Borel)
  std::vector<std::string> checks; // build-time verifications performed
  std::size_t ntilde_candidates = 0;
  std::size_t ntilde_matches = 0;
};

/// Builds N with the semidirect product constructor, verifies the
/// 2-part against the [2/1] / [1,1,6] description, and searches N for
/// the order 216 subgroup. Throws std::logic_error if a check fails.
LocalGroups build_local_groups(std::uint64_t seed = 0);

/// The linear characters of E fixed by D8 but not by N, in the order of
/// blocks::linear_characters. Their idempotents are e1 and e2.
std::vector<modrep::LinearCharacter> block_characters(const LocalGroups& g);

/// 2 x (3^2 : Borel) built directly, for fingerprint comparison.
GroupPtr reference_ntilde(std::uint64_t seed = 0);

/// Linear characters of E over F_3 fixed under conjugation by every
/// generator of `by`.
std::vector<modrep::LinearCharacter> invariant_characters(const GroupPtr& e, const GroupPtr& by);
/// Orbit lengths of `by` acting on the linear characters of E.
std::vector<std::size_t> character_orbit_lengths(const GroupPtr& e, const GroupPtr& by);

} // namespace brauerbox::cli
