#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "brauerbox/ffla/matrix.hpp"
#include "brauerbox/permgrp/action.hpp"
#include "brauerbox/permgrp/group.hpp"

namespace brauerbox::modrep {

using ffla::FpMatrix;
using permgrp::GroupPtr;
using permgrp::Perm;

/// Right kG-module on row vectors: v -> v * matrix(i) for generator i.
/// Matrices are anchored to the group's defining generators.
class MatRep {
public:
  MatRep() = default;
  /// Throws std::invalid_argument on a count, shape or field mismatch or
  /// a singular matrix.
  MatRep(GroupPtr group, std::uint32_t p, std::size_t dim, std::vector<FpMatrix> matrices);

  const GroupPtr& group() const { return group_; }
  std::uint32_t p() const { return p_; }
  std::size_t dim() const { return dim_; }
  const std::vector<FpMatrix>& matrices() const { return mats_; }
  const FpMatrix& matrix(std::size_t i) const { return mats_[i]; }
  const FpMatrix& inverse(std::size_t i) const { return invs_[i]; }
  const std::vector<FpMatrix>& inverses() const { return invs_; }

private:
  GroupPtr group_;
  std::uint32_t p_ = 3;
  std::size_t dim_ = 0;
  std::vector<FpMatrix> mats_;
  std::vector<FpMatrix> invs_;
};

/// Evaluates a representation at arbitrary group elements through sift
/// words; caches strong generator and transversal images.
class RepEvaluator {
public:
  explicit RepEvaluator(const MatRep& rep);
  /// Throws std::invalid_argument for non-members.
  FpMatrix at(const Perm& g) { return hom_.at(g); }
  const FpMatrix& transversal(const permgrp::ChainFactor& f) { return hom_.transversal(f); }

private:
  permgrp::HomEvaluator<FpMatrix> hom_;
};

FpMatrix evaluate(const MatRep& rep, const Perm& g);

/// Throws InputError if a random word is evaluated differently along the
/// word and through the stabilizer chain.
void spot_check(const MatRep& rep, std::uint64_t seed = 0, int trials = 20);

MatRep trivial_rep(GroupPtr group, std::uint32_t p);
MatRep perm_rep(const permgrp::PermAction& action, std::uint32_t p);
/// Throws std::invalid_argument unless H <= rep.group().
MatRep restrict(const MatRep& rep, const GroupPtr& h);
/// Induction from rep.group() = H to G via a right transversal of H in G.
MatRep induce(const MatRep& rep, const GroupPtr& g);
/// Contragredient: matrices replaced by inverse transposes.
MatRep dual(const MatRep& rep);
MatRep direct_sum(const MatRep& a, const MatRep& b);
/// Kronecker product: basis e_i (x) f_j in position i * dim(b) + j.
MatRep tensor(const MatRep& a, const MatRep& b);
/// Rep in the basis given by the rows of the invertible matrix b.
MatRep change_basis(const MatRep& rep, const FpMatrix& b);

/// Homomorphism G -> F_p^x given by its values on G's generators.
struct LinearCharacter {
  GroupPtr group;
  std::uint32_t p = 3;
  std::vector<std::uint32_t> values;
};

std::uint32_t character_value(const LinearCharacter& lambda, const Perm& g);
/// Scales generator i's matrix by lambda's value there.
MatRep tensor_linear(const MatRep& rep, const LinearCharacter& lambda);
/// One-dimensional module afforded by lambda.
MatRep linear_rep(const LinearCharacter& lambda);

/// True if every generator matrix is a permutation matrix.
bool is_permutation_rep(const MatRep& rep);

} // namespace brauerbox::modrep
