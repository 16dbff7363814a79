#pragma once

#include <cstdint>

#include "tangent_poset/complex.hpp"
#include "tangent_poset/poset.hpp"

namespace tp::gen {

// Face posets (proper nonempty faces) of polytope boundaries. Identifiers are
// deterministic: simplex faces are vertex lists "0_1_2", cross-polytope faces
// signed axes "+0_-1", cube faces sign vectors over {-,+,0} and polygon faces
// "v<i>" / "e<i>" with e<i> = v<i> v<i+1>.

/// Boundary of the n-simplex (n + 1 vertices).
Poset simplex_boundary(int n);
/// Boundary of the n-dimensional cross-polytope (2n vertices).
Poset cross_polytope_boundary(int n);
/// Boundary of the n-cube (3^n - 1 faces).
Poset cube_boundary(int n);
/// Boundary of the m-gon.
Poset polygon(int m);

SimplicialComplex simplex_boundary_complex(int n);
SimplicialComplex cross_polytope_boundary_complex(int n);
/// Boundary of the icosahedron: 12 vertices, 20 triangles.
SimplicialComplex icosahedron_boundary();
/// The full simplex on n + 1 vertices.
SimplicialComplex simplex(int n);
/// 7-vertex torus (14 triangles).
SimplicialComplex torus_7();
/// 6-vertex real projective plane (10 triangles).
SimplicialComplex rp2_6();

/// Componentwise order on pairs; identifiers "(x,y)".
Poset product(const Poset& p, const Poset& q);
/// Vertex labels get prefixes "a." (left) and "b." (right).
SimplicialComplex join_complex(const SimplicialComplex& k, const SimplicialComplex& l);
/// Join with two new apexes "N" and "S".
SimplicialComplex suspension(const SimplicialComplex& k);

/// Random complex of dimension <= max_dim on 3..max_vertices vertices, seeded.
SimplicialComplex random_complex(std::uint64_t seed, int max_vertices = 7, int max_dim = 2);
Poset random_face_poset(std::uint64_t seed, int max_vertices = 7, int max_dim = 2);

}  // namespace tp::gen
