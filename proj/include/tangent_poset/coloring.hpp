#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tangent_poset/hocolim.hpp"
#include "tangent_poset/poset.hpp"
#include "tangent_poset/verify.hpp"

namespace tp {

/// R_n-coloring of a base poset: an INFINITY-labelled abstract n-sphere on
/// every element and an aggregation on every cover. The base is a poset (for
/// instance the face poset of a triangulation) so that the hocolim applies.
struct Coloring {
  Poset base;
  std::vector<Poset> objects;
  /// Keyed by cover (lower, upper).
  std::map<std::pair<Index, Index>, PosetMap> arrows;
  int n = 0;

  PosetFunctor functor() const { return {base, objects, arrows}; }
};

/// Gauss functor of P as a coloring in dimension n.
Coloring gauss_coloring(const Poset& p, int n);

/// Functor law (exact), every object in R_n and every arrow an R_n morphism.
VerificationReport validate_coloring(const Coloring& c, const OracleBudget& budget = {});

struct ColoringTotal {
  Hocolim hocolim;
  VerificationReport report;
};

/// Hocolim of the coloring. The report checks that each projection fiber is
/// order-isomorphic to its object and, when the base verifies as a strict
/// abstract m-manifold, that the total order complex is a closed
/// (m + n)-pseudomanifold. Throws FunctorLawViolation like hocolim.
ColoringTotal coloring_total_space(const Coloring& c, const OracleBudget& budget = {});

}  // namespace tp
