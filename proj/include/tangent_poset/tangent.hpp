#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tangent_poset/poset.hpp"

namespace tp {

/// Reserved second coordinate of the section at infinity.
inline constexpr std::string_view kInfinityToken = "inf";

/// "(x,y)"
std::string pair_id(std::string_view x, std::string_view y);
/// "(x,inf)"
std::string infinity_id(std::string_view x);

/// All (x, y) with a common upper bound, in lexicographic index order.
std::vector<std::pair<Index, Index>> d_poset(const Poset& p);

/// Total space E(P) over P with its projection and the two sections.
///
/// Elements of the total space are grouped by base element x in base order;
/// inside a group come (x, y) for y in Star x in base order, then (x, inf).
/// The pair order is
///   (x1, y1) <= (x2, y2)   iff x1 <= x2 and y1 <= y2,
///   (x1, y1) <= (x2, inf)  iff x1 <= x2 and x2 is not below y1,
///   (x1, inf) <= (x2, inf) iff x1 <= x2.
/// Restricted to a fiber the middle case reads "y1 ∈ Link x".
struct TangentBundle {
  Poset base;
  Poset total;
  PosetMap projection;
  PosetMap section0;
  PosetMap section_inf;
  /// Chain a <= b <= c on which the narrower reading "y1 ∈ Link x2" of the
  /// middle case fails transitivity, when P has one.
  std::optional<std::array<std::string, 3>> link_reading_witness;
};

TangentBundle tangent_bundle(const Poset& p);

/// First transitivity failure of the relation whose middle case is
/// "y1 ∈ Link x2" across fibers, or nullopt if that relation is an order on P.
std::optional<std::array<std::string, 3>> link_reading_transitivity_witness(const Poset& p);

/// Fiber G_x with ZERO on (x,x) and INFINITY on (x,inf).
struct Fiber {
  Poset poset;
  std::string basepoint;
  /// Base index of the second coordinate of each fiber element, or
  /// kInfinityIndex for (x,inf).
  std::vector<Index> coordinate;
};

inline constexpr Index kInfinityIndex = ~Index{0};

/// Preimage of x under the projection of an already built bundle.
Fiber fiber(const TangentBundle& bundle, std::string_view x);
/// Builds E(P) and extracts the preimage of x. Throws UnknownIdentifier.
Fiber fiber(const Poset& p, std::string_view x);
/// G_x straight from its description {(x,y) | y ∈ Star x} ∪ {(x,inf)} without
/// building the total space.
Fiber fiber_direct(const Poset& p, Index x);

/// G_{x1 <= x2}: (x1,y) -> (x2,y) if y ∈ Star x2, else (x2,inf). Validated
/// monotone and infinity preserving. The diagonal (x1,x1) lands on (x2,x1),
/// so ZERO is not preserved unless x1 = x2. Throws NotComparable if x1 is
/// not below x2.
PosetMap gauss_morphism(const Poset& p, std::string_view x1, std::string_view x2);
PosetMap gauss_morphism(const Poset& p, const Fiber& from, const Fiber& to);

/// Gauss functor: fibers on every element and morphisms on every cover.
struct GaussFunctor {
  Poset base;
  std::vector<Fiber> objects;
  /// Keyed by cover (lower, upper).
  std::map<std::pair<Index, Index>, PosetMap> arrows;

  /// Direct morphism for any comparable pair.
  PosetMap morphism(Index x1, Index x2) const;
};

/// Checks every length-2 cover chain composite against the direct morphism;
/// throws FunctorialityFailure on mismatch.
GaussFunctor gauss_functor(const Poset& p);

}  // namespace tp
