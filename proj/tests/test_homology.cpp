#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tangent_poset/error.hpp"
#include "tangent_poset/flips.hpp"
#include "tangent_poset/generators.hpp"
#include "tangent_poset/homology.hpp"
#include "tangent_poset/smith.hpp"

using namespace tp;

namespace {

SimplicialComplex hexagon() {
  return SimplicialComplex::from_indexed({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

// Homology from ranks over Q and over F_p: betti_d = z_d - b_d over Q, and a
// drop of rank mod p reveals p-torsion in H_{d-1}.
std::vector<std::size_t> betti_by_ranks(const SimplicialComplex& k) {
  const int dim = k.dimension();
  std::vector<std::size_t> faces(dim + 1, 0);
  for (const auto& f : oracle::all_faces(k)) ++faces[f.size() - 1];
  std::vector<std::size_t> rank(dim + 2, 0);
  for (int d = 1; d <= dim; ++d) rank[d] = oracle::rank_mod(oracle::boundary(k, d), 0);
  std::vector<std::size_t> b;
  for (int d = 0; d <= dim; ++d) b.push_back(faces[d] - rank[d] - rank[d + 1]);
  return b;
}

SparseIntMatrix sparse(const std::vector<std::vector<std::int64_t>>& m) {
  SparseIntMatrix s;
  s.rows = m.size();
  s.cols = m.empty() ? 0 : m[0].size();
  s.columns.resize(s.cols);
  for (std::size_t c = 0; c < s.cols; ++c)
    for (std::size_t r = 0; r < s.rows; ++r)
      if (m[r][c] != 0) s.columns[c].emplace_back(static_cast<std::uint32_t>(r), m[r][c]);
  return s;
}

}  // namespace

TEST_CASE("homology examples") {
  const auto s2 = homology(gen::simplex_boundary_complex(3));
  CHECK(s2.betti() == std::vector<std::size_t>{1, 0, 1});
  CHECK(s2.torsion_free());

  const auto rp2 = homology(gen::rp2_6());
  CHECK(rp2.betti() == std::vector<std::size_t>{1, 0, 0});
  REQUIRE(rp2.groups[1].torsion.size() == 1);
  CHECK(rp2.groups[1].torsion[0] == 2);
  CHECK(rp2.to_string() == "H0=Z H1=Z/2 H2=0");

  CHECK(homology(hexagon()).betti() == std::vector<std::size_t>{1, 1});
}

TEST_CASE("rp2 torsion against rank oracles") {
  const SimplicialComplex k = gen::rp2_6();
  const auto d2 = oracle::boundary(k, 2);
  // Full rank 10 over Q and F3 (H2 = 0), one less over F2 (the Z/2).
  CHECK(oracle::rank_mod(d2, 0) == 10);
  CHECK(oracle::rank_mod(d2, 2) == 9);
  CHECK(oracle::rank_mod(d2, 3) == 10);
  CHECK(betti_by_ranks(k) == std::vector<std::size_t>{1, 0, 0});
  // Smith normal form of d2: nine unit factors then 2.
  const SmithResult snf = smith_normal_form(sparse(d2));
  CHECK(snf.rank == 10);
  REQUIRE(snf.torsion.size() == 1);
  CHECK(snf.torsion[0] == 2);
}

TEST_CASE("smith normal form against determinantal divisors") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    const int spread = rep < 30 ? 3 : 12;
    std::uniform_int_distribution<int> entry(-spread, spread);
    std::bernoulli_distribution zero(0.3);
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    for (auto& r : m)
      for (auto& v : r) v = zero(rng) ? 0 : entry(rng);
    const auto expect = oracle::invariant_factors(m);
    std::vector<std::vector<BigInt>> dense(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) dense[i][j] = m[i][j];
    const auto diag = smith_diagonal_dense(dense);
    REQUIRE(diag.size() == expect.size());
    for (std::size_t i = 0; i < diag.size(); ++i) CHECK(diag[i] == expect[i]);
    const SmithResult snf = smith_normal_form(sparse(m));
    CHECK(snf.rank == expect.size());
    std::vector<BigInt> big;
    for (const auto& f : expect)
      if (f > 1) big.push_back(f);
    CHECK(snf.torsion == big);
  }
}

TEST_CASE("smith normal form survives 64-bit overflow") {
  // Entries near 2^40 force products beyond int64 during elimination.
  const std::int64_t big = std::int64_t{1} << 40;
  std::vector<std::vector<std::int64_t>> m = {{big + 1, big}, {big, big - 1}, {3, 5}};
  const SmithResult snf = smith_normal_form(sparse(m));
  const auto expect = oracle::invariant_factors(m);
  CHECK(snf.rank == expect.size());
  std::vector<BigInt> torsion;
  for (const auto& f : expect)
    if (f > 1) torsion.push_back(f);
  CHECK(snf.torsion == torsion);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic(gen::simplex_boundary_complex(3)) == 2);
  CHECK(euler_characteristic(SimplicialComplex::from_indexed({{0}})) == 1);
  CHECK(euler_characteristic(gen::torus_7()) == 0);
  CHECK(gen::torus_7().f_vector() == std::vector<std::size_t>{7, 21, 14});
  CHECK(euler_characteristic(gen::rp2_6()) == 1);
  CHECK(euler_characteristic(SimplicialComplex{}) == 0);
}

TEST_CASE("closed pseudomanifolds") {
  CHECK(is_closed_pseudomanifold(gen::simplex_boundary_complex(3), 2).is_verified());
  CHECK(is_closed_pseudomanifold(gen::simplex(2), 2).is_refuted());
  CHECK(is_closed_pseudomanifold(SimplicialComplex::from_indexed({{0, 1, 2}, {0, 3, 4}}), 2).is_refuted());
  CHECK(is_closed_pseudomanifold(gen::torus_7(), 2).is_verified());
  CHECK(is_closed_pseudomanifold(gen::rp2_6(), 2).is_verified());
  // Two disjoint spheres: every ridge in two facets, not strongly connected.
  CHECK(is_closed_pseudomanifold(SimplicialComplex::from_indexed({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                                                   {4, 5, 6}, {4, 5, 7}, {4, 6, 7}, {5, 6, 7}}),
                                 2)
            .is_refuted());
}

TEST_CASE("barycentric subdivision") {
  const auto path = barycentric_subdivision(SimplicialComplex::from_indexed({{0, 1}}));
  CHECK(path.f_vector() == std::vector<std::size_t>{3, 2});
  const auto sd = barycentric_subdivision(gen::simplex_boundary_complex(3));
  CHECK(sd.f_vector() == std::vector<std::size_t>{14, 36, 24});
  for (const auto& k : {gen::simplex_boundary_complex(3), gen::torus_7(), gen::rp2_6(), gen::icosahedron_boundary(),
                        gen::cross_polytope_boundary_complex(3), hexagon()}) {
    const auto s = barycentric_subdivision(k);
    CHECK(euler_characteristic(s) == euler_characteristic(k));
    CHECK(homology(s).to_string() == homology(k).to_string());
  }
}

TEST_CASE("bistellar flips") {
  const SimplicialComplex s = gen::simplex_boundary_complex(3);
  SUBCASE("boundary of the tetrahedron has only the four vertex insertions") {
    const auto moves = find_flips(s);
    CHECK(moves.size() == 4);
    for (const auto& m : moves) CHECK(m.i() == 0);
  }
  SUBCASE("a (0,n) move and its inverse") {
    const auto moves = find_flips(s);
    const auto up = apply_flip(s, moves.front());
    CHECK(up.f_vector() == std::vector<std::size_t>{5, 9, 6});
    CHECK(apply_flip(up, moves.front().inverse()) == s);
  }
  SUBCASE("octahedron vertex insertion") {
    const auto oct = gen::cross_polytope_boundary_complex(3);
    CHECK(oct.f_vector() == std::vector<std::size_t>{6, 12, 8});
    const auto moves = find_flips(oct);
    REQUIRE(!moves.empty());
    CHECK(moves.front().i() == 0);
    CHECK(apply_flip(oct, moves.front()).f_vector() == std::vector<std::size_t>{7, 15, 10});
  }
  SUBCASE("illegal moves") {
    CHECK_THROWS_AS(apply_flip(s, FlipMove{{"0", "1"}, {"2", "3"}}), Error);
    CHECK_THROWS_AS(apply_flip(s, FlipMove{{"0", "1", "2"}, {"3"}}), Error);
  }
  SUBCASE("random flip sequences preserve homology") {
    std::mt19937_64 rng(5);
    SimplicialComplex k = gen::cross_polytope_boundary_complex(3);
    const auto h0 = homology(k).to_string();
    for (int step = 0; step < 40; ++step) {
      const auto moves = find_flips(k);
      REQUIRE(!moves.empty());
      const FlipMove m = moves[rng() % moves.size()];
      const SimplicialComplex next = apply_flip(k, m);
      CHECK(apply_flip(next, m.inverse()) == k);
      k = next;
      CHECK(homology(k).to_string() == h0);
      CHECK(euler_characteristic(k) == 2);
    }
  }
}

TEST_CASE("simplify") {
  SUBCASE("subdivided tetrahedron boundary") {
    const auto sd = barycentric_subdivision(gen::simplex_boundary_complex(3));
    const auto r = simplify(sd);
    CHECK(r.reached_simplex_boundary);
    CHECK(r.complex.f_vector() == std::vector<std::size_t>{4, 6, 4});
    SimplicialComplex replay = sd;
    for (const auto& m : r.moves) replay = apply_flip(replay, m);
    CHECK(replay == r.complex);
    // Deterministic in the seed.
    CHECK(simplify(sd).moves == r.moves);
  }
  SUBCASE("already minimal") {
    const auto s = gen::simplex_boundary_complex(3);
    const auto r = simplify(s);
    CHECK(r.complex == s);
    CHECK(r.moves.empty());
  }
  SUBCASE("octahedron") {
    CHECK(simplify(gen::cross_polytope_boundary_complex(3)).complex.f_vector() == std::vector<std::size_t>{4, 6, 4});
  }
  SUBCASE("torus does not reach a simplex boundary") {
    const auto r = simplify(gen::torus_7(), {0, 500, 2});
    CHECK(!r.reached_simplex_boundary);
    CHECK(euler_characteristic(r.complex) == 0);
  }
}

TEST_CASE("collapse") {
  const auto full = collapse(gen::simplex(2));
  CHECK(full.fully_collapsed);
  CHECK(full.reduced.num_vertices() == 1);
  const auto s = gen::simplex_boundary_complex(3);
  const auto none = collapse(s);
  CHECK(!none.fully_collapsed);
  CHECK(none.reduced == s);
  CHECK(none.steps == 0);
  std::vector<Simplex> cone;
  for (Vertex i = 0; i < 6; ++i) cone.push_back({i, (i + 1) % 6, 6});
  CHECK(collapse(SimplicialComplex::from_indexed(cone)).fully_collapsed);
}

TEST_CASE("homology invariants on random complexes") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const SimplicialComplex k = gen::random_complex(seed, 7, 3);
    const auto h = homology(k);
    std::size_t components = 0;
    vertex_components(k, &components);
    CHECK(h.betti()[0] == components);
    std::int64_t alt = 0;
    for (std::size_t d = 0; d < h.groups.size(); ++d)
      alt += (d % 2 ? -1 : 1) * static_cast<std::int64_t>(h.groups[d].betti);
    CHECK(alt == euler_characteristic(k));
    CHECK(euler_characteristic(k) == oracle::euler(k));
    CHECK(h.betti() == betti_by_ranks(k));
    CHECK(k.num_faces() == oracle::all_faces(k).size());
  }
}
