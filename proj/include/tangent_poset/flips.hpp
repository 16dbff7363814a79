#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tangent_poset/complex.hpp"

namespace tp {

/// Bistellar (i, n-i) move on a pure n-complex: the star σ * ∂τ of `face` σ
/// is replaced by ∂σ * τ, where τ = `complement` and lk(σ) = ∂τ.
///
/// Vertices are named by label so moves stay meaningful after vertex
/// removal renumbers the complex. For i = 0 the complement is a single new
/// vertex label.
struct FlipMove {
  std::vector<std::string> face;
  std::vector<std::string> complement;

  int i() const noexcept { return static_cast<int>(complement.size()) - 1; }
  FlipMove inverse() const { return {complement, face}; }

  friend bool operator==(const FlipMove&, const FlipMove&) = default;
};

/// Every legal move of a pure complex, i = 0 moves included (one per facet,
/// with a fresh vertex label). Sorted by (i, face).
std::vector<FlipMove> find_flips(const SimplicialComplex& k);

/// Throws IllegalMove unless lk(face) = ∂complement and complement ∉ K.
SimplicialComplex apply_flip(const SimplicialComplex& k, const FlipMove& move);

struct SimplifyBudget {
  std::uint64_t seed = 0;
  /// Total moves over all restarts.
  std::size_t max_moves = 10000;
  std::size_t restarts = 20;
};

struct SimplifyResult {
  /// Smallest complex found, by (facet count, sorted labelled facets).
  SimplicialComplex complex;
  /// Moves that take the input to `complex`; replaying them with apply_flip
  /// reproduces it exactly.
  std::vector<FlipMove> moves;
  std::size_t moves_tried = 0;
  std::size_t restarts_used = 0;
  /// `complex` is the boundary of an (n+1)-simplex.
  bool reached_simplex_boundary = false;
};

/// Seeded bistellar reduction of a closed pseudomanifold: vertex removals
/// first, then facet-reducing moves, otherwise a random neutral or mildly
/// raising move whose probability of being taken while reductions exist
/// decays over the run. A restart begins from the input when a run stalls.
SimplifyResult simplify(const SimplicialComplex& k, const SimplifyBudget& budget = {});

/// Whether K is the boundary of a simplex of dimension dim(K) + 1.
bool is_simplex_boundary(const SimplicialComplex& k);

}  // namespace tp
