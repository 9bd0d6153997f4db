#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "brauerbox/ffla/matrix.hpp"
#include "brauerbox/permgrp/group.hpp"
#include "brauerbox/text_reader.hpp"

namespace brauerbox::permgrp {

/// Elementary abelian q^d with one d x d matrix over F_q per generator of
/// the acting group (row vectors: x -> x * A).
struct AffineFactor {
  std::uint32_t q = 2;
  std::size_t dim = 0;
  std::vector<ffla::FpMatrix> action;
};

struct SemidirectProduct {
  GroupPtr group;
  /// Q's own points come first, then one block of q^d points per factor.
  std::vector<std::size_t> block_offset;
  std::vector<Perm> complement_generators;               // one per generator of Q
  std::vector<std::vector<Perm>> translation_generators; // per factor, one per basis vector
};

/// Point index of vector x (entries in [0,q)) inside a factor block.
std::size_t affine_point_index(const std::vector<std::uint32_t>& x, std::uint32_t q);

/// (V_1 x ... x V_m) : Q acting on Q's points plus the affine spaces.
/// Throws std::invalid_argument for a non-invertible or misshapen matrix,
/// and InputError if the matrices do not define a homomorphism from Q.
SemidirectProduct semidirect_product(const std::vector<AffineFactor>& factors, const GroupPtr& q,
                                     std::uint64_t seed = 0);

/// Group file: `permgroup degree=<n>` then one generator per line.
struct GroupSpec {
  std::size_t degree = 0;
  std::vector<Perm> generators;
};
GroupSpec read_group(TextReader& reader);
void write_group(std::ostream& os, std::size_t degree, const std::vector<Perm>& gens);
GroupSpec group_from_text(const std::string& text, const std::string& source = "<string>");

} // namespace brauerbox::permgrp
