#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "brauerbox/modrep/module.hpp"

namespace brauerbox::modrep {

struct Constituent {
  MatRep simple;
  unsigned multiplicity = 0;
};

/// Composition factors up to isomorphism, sorted by dimension (ties keep
/// order of discovery).
struct Constituents {
  std::vector<Constituent> factors;
  std::size_t total_dim() const;
  std::vector<std::size_t> dims_with_multiplicity() const;
};

struct ChopOptions {
  unsigned max_word_length = 12;
  unsigned retry_budget = 50;
};

/// Proper nonzero submodule (reduced echelon basis), or nullopt when the
/// module is certified irreducible. Throws Inconclusive if the retry
/// budget runs out without either outcome.
std::optional<FpMatrix> find_submodule(const MatRep& rep, Rng& rng, const ChopOptions& opts = {});
bool is_irreducible(const MatRep& rep, std::uint64_t seed = 0);

Constituents chop(const MatRep& rep, std::uint64_t seed = 0, const ChopOptions& opts = {});
/// Multiplicity of each simple of `simples` (matched by isomorphism).
std::vector<unsigned> multiplicities(const Constituents& c, const std::vector<MatRep>& simples);

struct SeriesReport {
  std::vector<Constituents> layers;
  /// Radical series: subspaces[i] = rad^i(M) (subspaces[0] = M).
  /// Socle series: subspaces[i] = soc^(i+1)(M).
  std::vector<FpMatrix> subspaces;
  std::vector<std::size_t> layer_dims() const;
};

/// rad(M): intersection of the kernels of all homomorphisms to the given
/// simples (which must include every composition factor of M).
FpMatrix radical(const MatRep& rep, const std::vector<MatRep>& simples);
/// Layers top to bottom.
SeriesReport radical_series(const MatRep& rep, std::uint64_t seed = 0);
/// Layers bottom to top, computed as annihilators of the radical series
/// of the dual module.
SeriesReport socle_series(const MatRep& rep, std::uint64_t seed = 0);

struct Decomposition {
  std::vector<MatRep> summands;
  /// Rows of bases[i] (ambient coordinates) span summand i.
  std::vector<FpMatrix> bases;
  /// vstack of the bases; verified: B M(g) B^-1 is block diagonal with the
  /// summand matrices.
  FpMatrix change_of_basis;
};

struct DecomposeOptions {
  unsigned fitting_rounds = 25;
  std::size_t max_dim = 500;
  std::uint64_t exhaustive_limit = 100'000; // p^dim End bound for the unit/nilpotent check
};

/// Throws BoundExceeded above max_dim and Inconclusive if a summand can be
/// neither split nor certified indecomposable.
Decomposition indecomposable_summands(const MatRep& rep, std::uint64_t seed = 0, const DecomposeOptions& opts = {});

/// Certifies End(M) local (so M indecomposable): true/false, or throws
/// Inconclusive when neither check applies.
bool endomorphism_ring_is_local(const MatRep& rep, const DecomposeOptions& opts = {});

} // namespace brauerbox::modrep
