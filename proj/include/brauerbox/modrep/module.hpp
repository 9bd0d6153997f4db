#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "brauerbox/modrep/rep.hpp"

namespace brauerbox::modrep {

/// Smallest submodule containing the seed rows, as a reduced echelon basis.
FpMatrix spin(const MatRep& rep, const FpMatrix& seeds);
/// Same, spinning under the transposed generator matrices.
FpMatrix spin_transposed(const MatRep& rep, const FpMatrix& seeds);

/// A submodule or quotient together with the basis it is written in.
struct Subquotient {
  MatRep rep;
  /// Submodule: reduced echelon basis of the subspace (rows, ambient
  /// coordinates). Quotient: the complement rows, unit vectors at the
  /// non-pivot columns of the subspace basis.
  FpMatrix basis;
};

/// `subspace` must be generator-stable (checked).
Subquotient submodule(const MatRep& rep, const FpMatrix& subspace);
Subquotient quotient(const MatRep& rep, const FpMatrix& subspace);
/// Subquotient top/bottom with bottom <= top both submodules.
MatRep section(const MatRep& rep, const FpMatrix& top, const FpMatrix& bottom);

bool is_submodule(const MatRep& rep, const FpMatrix& subspace);

/// Basis of Hom_kG(M, N): matrices X (dim M x dim N) with
/// M(g) X = X N(g) for every generator g.
std::vector<FpMatrix> hom_space(const MatRep& m, const MatRep& n);
bool is_hom(const MatRep& m, const MatRep& n, const FpMatrix& x);

/// Invertible intertwiner M -> N, or nullopt when none exists.
/// Random combinations are tried first; if dim Hom <= 4 every
/// combination is then checked, otherwise Inconclusive is thrown.
std::optional<FpMatrix> is_isomorphic(const MatRep& m, const MatRep& n, std::uint64_t seed = 0);
/// For modules known to be simple: isomorphic iff Hom is nonzero.
bool simple_isomorphic(const MatRep& s, const MatRep& t);

} // namespace brauerbox::modrep
