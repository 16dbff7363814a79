#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tangent_poset/certainty.hpp"
#include "tangent_poset/poset.hpp"
#include "tangent_poset/tangent.hpp"

namespace tp {

/// Poset-valued functor on a finite poset, with arrows stored on covers only.
struct PosetFunctor {
  Poset base;
  std::vector<Poset> objects;
  /// Keyed by cover (lower, upper); source and target must be the objects.
  std::map<std::pair<Index, Index>, PosetMap> arrows;
};

/// Gauss functor with its fibers as objects (labels kept).
PosetFunctor as_poset_functor(const GaussFunctor& g);

/// Transport maps F(x0 <= x1) for one source x0, composed from cover arrows.
///
/// Entry z holds the assignment F(x0) -> F(z) for every z >= x0 and is empty
/// otherwise. Every cover path is checked to give the same composite; a
/// disagreement throws FunctorLawViolation naming both paths.
std::vector<std::vector<Index>> transports_from(const PosetFunctor& f, Index x0);

/// Refuted with the first pair of disagreeing cover paths, else Verified.
Certainty check_functor_law(const PosetFunctor& f);

/// Grothendieck construction: pairs (x, y) with y in F(x), ordered by
///   (x0, y0) <= (x1, y1) iff x0 <= x1 and F(x0 <= x1)(y0) <= y1.
/// Element (x, y) has id "(x,y)" and index offset[x] + y.
struct Hocolim {
  Poset total;
  PosetMap projection;
  std::vector<Index> offset;
};

/// Throws FunctorLawViolation with a witness chain, InvalidArgument when an
/// arrow is missing or does not run between the objects of its cover.
Hocolim hocolim(const PosetFunctor& f);

struct HocolimWithSections {
  Hocolim hocolim;
  PosetMap section0;
  PosetMap section_inf;
};

/// Sections through the ZERO and INFINITY elements of each object. Throws
/// MissingLabel when an object lacks either label or an arrow does not send
/// INFINITY to INFINITY, and InvalidArgument if a section is not monotone.
HocolimWithSections hocolim_with_sections(const PosetFunctor& f);

/// Checks that (x, (x,y)) -> (x,y) is an order isomorphism from the hocolim
/// of the Gauss functor onto the tangent bundle total space, commuting with
/// the projections and both sections.
Certainty tangent_identity_check(const Poset& p);

}  // namespace tp
