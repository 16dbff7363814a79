#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tangent_poset/certainty.hpp"
#include "tangent_poset/complex.hpp"
#include "tangent_poset/smith.hpp"

namespace tp {

struct HomologyGroup {
  std::size_t betti = 0;
  /// Coefficients > 1 in divisibility order.
  std::vector<BigInt> torsion;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Unreduced integral homology, degrees 0..dim.
struct HomologyResult {
  std::vector<HomologyGroup> groups;

  std::vector<std::size_t> betti() const;
  bool torsion_free() const;
  /// e.g. "H0=Z H1=Z^2 H2=Z" or "H1=Z/2".
  std::string to_string() const;
  /// (1, 0, ..., 0, 1) without torsion in degrees 0..n (n = 0: Z^2).
  bool is_sphere_pattern(int n) const;
  /// Homology of a point.
  bool is_point_pattern() const;
};

/// Boundary map C_d -> C_{d-1} in the lexicographic face bases of `faces()`.
SparseIntMatrix boundary_matrix(const SimplicialComplex& k, int d);

HomologyResult homology(const SimplicialComplex& k);

/// Alternating face count; the void complex has χ = 0.
std::int64_t euler_characteristic(const SimplicialComplex& k);

/// Verified iff K is pure of dimension n, every (n-1)-face lies in exactly two
/// facets and the facets are strongly connected through (n-1)-faces.
Certainty is_closed_pseudomanifold(const SimplicialComplex& k, int n);

/// Order complex of the face poset.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

struct CollapseResult {
  SimplicialComplex reduced;
  bool fully_collapsed = false;
  std::size_t steps = 0;
};

/// Elementary collapses through free faces (faces with exactly one proper
/// coface) until none remain.
CollapseResult collapse(const SimplicialComplex& k);

}  // namespace tp
