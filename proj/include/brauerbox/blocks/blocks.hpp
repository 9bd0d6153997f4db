#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "brauerbox/modrep/rep.hpp"
#include "brauerbox/text_reader.hpp"

namespace brauerbox::blocks {

using ffla::FpMatrix;
using modrep::LinearCharacter;
using modrep::MatRep;
using permgrp::GroupPtr;
using permgrp::Perm;

/// All homomorphisms G -> F_p^x, trivial first, then lexicographic on the
/// values at G's generators. Consistency is checked on the regular action
/// of G/[G,G].
std::vector<LinearCharacter> linear_characters(const GroupPtr& g, std::uint32_t p);
/// Throws InputError unless the values define a homomorphism.
void check_linear_character(const LinearCharacter& lambda);

/// Finitely supported element of kG.
struct GroupAlgebraElement {
  GroupPtr group;
  std::uint32_t p = 3;
  std::map<Perm, std::uint32_t> coeffs; // no zero coefficients

  static GroupAlgebraElement one(GroupPtr group, std::uint32_t p);
  void add(const Perm& g, std::uint32_t c);
  /// x^g: every support element conjugated by g.
  GroupAlgebraElement conjugate(const Perm& g) const;
  /// Sum of c_g * rep(g).
  FpMatrix evaluate(const MatRep& rep) const;

  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator+(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.p == b.p && a.coeffs == b.coeffs;
  }
};

/// e = |E|^-1 sum_{g in E} lambda(g^-1) g. Throws std::invalid_argument if
/// p divides |E|, InputError if lambda is not a homomorphism.
GroupAlgebraElement idempotent_from_character(const LinearCharacter& lambda);

struct Projection {
  MatRep rep;     // action of the designated subgroup on V e
  FpMatrix basis; // rows span V e (reduced echelon, ambient coordinates)
};

/// V e as a module for `s`, which must lie in V's group and fix e under
/// conjugation (checked; std::invalid_argument otherwise). The support of
/// e must lie in V's group.
Projection project(const MatRep& rep, const GroupAlgebraElement& e, const GroupPtr& s);

/// Names for the linear modules of a group with exactly four linear
/// characters over F_p: 1a trivial, 1b the nontrivial one with an element
/// of order 4 in its kernel, then 1c, 1d in lexicographic order of their
/// values at the stored generators. Throws InputError when the pattern
/// does not apply.
std::vector<std::pair<std::string, LinearCharacter>> label_linear_characters(const GroupPtr& g, std::uint32_t p);
/// Label of a one-dimensional module among `labels`, or "" if none matches.
std::string label_of(const MatRep& lin, const std::vector<std::pair<std::string, LinearCharacter>>& labels);

// Text format:
//   idem p=<p>
//   <coefficient> <element in cycle notation>
void write_idempotent(std::ostream& os, const GroupAlgebraElement& e);
/// Throws InputError on malformed lines or elements outside `group`.
GroupAlgebraElement read_idempotent(TextReader& reader, GroupPtr group);
GroupAlgebraElement idempotent_from_text(const std::string& text, GroupPtr group,
                                         const std::string& source = "<string>");

} // namespace brauerbox::blocks
