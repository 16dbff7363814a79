#pragma once

#include <cstdint>

#include "tangent_poset/certainty.hpp"
#include "tangent_poset/complex.hpp"
#include "tangent_poset/flips.hpp"

namespace tp {

/// Search limits shared by every heuristic oracle call.
struct OracleBudget {
  std::uint64_t seed = 0;
  std::size_t flip_budget = 10000;
  std::size_t restarts = 20;

  SimplifyBudget simplify() const { return {seed, flip_budget, restarts}; }
};

/// PL-sphere recognition.
///
/// Decided exactly for n <= 2: n = -1 is the empty complex, n = 0 two
/// points, n = 1 one circle, n = 2 a connected closed surface (every vertex
/// link a circle) with χ = 2. For n >= 3 a failed pseudomanifold, homology or
/// vertex-link test refutes, reaching ∂Δ^{n+1} by bistellar moves verifies,
/// and anything else is Unknown.
Certainty is_pl_sphere(const SimplicialComplex& k, int n, const OracleBudget& budget = {});

/// Closure of the (k-1)-faces that lie in exactly one facet of a pure k-complex.
SimplicialComplex boundary_complex(const SimplicialComplex& k);

/// PL-ball recognition.
///
/// Refuted when K is not pure of dimension k, some (k-1)-face lies in more
/// than two facets, the boundary is not a (k-1)-sphere, or the homology is
/// not that of a point. Verified when in addition K collapses to a vertex;
/// for k <= 2 (with vertex links checked) this is decisive. For k >= 3 a
/// complete collapse is recorded as heuristic evidence and a stuck greedy
/// collapse yields Unknown.
Certainty is_pl_ball(const SimplicialComplex& k, int dim, const OracleBudget& budget = {});

}  // namespace tp
