#include <doctest.h>

#include "oracles.hpp"
#include "tangent_poset/complex.hpp"
#include "tangent_poset/error.hpp"
#include "tangent_poset/generators.hpp"
#include "tangent_poset/tangent.hpp"

using namespace tp;
using Ids = std::set<std::string>;

namespace {

// Pairs with a common upper bound, by a triple loop.
std::size_t common_upper_bound_pairs(const Poset& p) {
  const auto r = oracle::closure(p);
  std::size_t count = 0;
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      for (std::size_t z = 0; z < p.size(); ++z)
        if (r[x][z] && r[y][z]) {
          ++count;
          break;
        }
  return count;
}

std::vector<Poset> instances() {
  std::vector<Poset> out = {Poset::from_covers({"p"}, {}), oracle::triangle(), gen::polygon(5),
                            gen::simplex_boundary(3),      gen::cube_boundary(2), gen::cross_polytope_boundary(3),
                            oracle::chain(3),             oracle::antichain(2)};
  for (std::uint64_t seed = 0; seed < 15; ++seed) out.push_back(gen::random_face_poset(seed, 5, 2));
  return out;
}

}  // namespace

TEST_CASE("d_poset") {
  CHECK(d_poset(Poset::from_covers({"p"}, {})).size() == 1);
  const Poset anti = oracle::antichain(2);
  CHECK(d_poset(anti) == std::vector<std::pair<Index, Index>>{{0, 0}, {1, 1}});
  const Poset t = oracle::triangle();
  CHECK(d_poset(t).size() == 24);
  CHECK(common_upper_bound_pairs(t) == 24);
  for (const Poset& p : instances()) CHECK(d_poset(p).size() == common_upper_bound_pairs(p));
}

TEST_CASE("tangent bundle sizes") {
  const TangentBundle one = tangent_bundle(Poset::from_covers({"p"}, {}));
  CHECK(oracle::id_set(one.total) == Ids{"(p,p)", "(p,inf)"});
  CHECK(!one.total.comparable(0, 1));

  const TangentBundle t = tangent_bundle(oracle::triangle());
  CHECK(t.total.size() == 30);
  const Poset s3 = gen::simplex_boundary(3);
  std::size_t star_total = 0;
  for (Index x = 0; x < s3.size(); ++x) star_total += star(s3, s3.id(x)).size();
  CHECK(star_total == 146);
  CHECK(tangent_bundle(s3).total.size() == 160);
}

TEST_CASE("literal link reading of the middle case is not transitive") {
  const TangentBundle t = tangent_bundle(oracle::triangle());
  REQUIRE(t.link_reading_witness);
  const auto& w = *t.link_reading_witness;
  // The witness climbs through an infinity element of a different fiber.
  CHECK(w[1].find(",inf)") != std::string::npos);
  CHECK(!link_reading_transitivity_witness(Poset::from_covers({"p"}, {})));
  CHECK(t.total.leq("(a,c)", "(a,inf)"));
  CHECK(t.total.leq("(a,inf)", "(ab,inf)"));
  CHECK(t.total.leq("(a,c)", "(ab,inf)"));
}

TEST_CASE("fibers of the triangle") {
  const Poset t = oracle::triangle();
  SUBCASE("vertex") {
    const Fiber f = fiber(t, "a");
    CHECK(f.poset.size() == 6);
    CHECK(oracle::id_set(f.poset) == Ids{"(a,a)", "(a,b)", "(a,c)", "(a,ab)", "(a,ca)", "(a,inf)"});
    Ids minimal, maximal;
    for (Index i : f.poset.minimal_elements()) minimal.insert(f.poset.id(i));
    for (Index i : f.poset.maximal_elements()) maximal.insert(f.poset.id(i));
    CHECK(minimal == Ids{"(a,a)", "(a,b)", "(a,c)"});
    CHECK(maximal == Ids{"(a,ab)", "(a,ca)", "(a,inf)"});
    const SimplicialComplex hex = order_complex(f.poset);
    CHECK(hex.f_vector() == std::vector<std::size_t>{6, 6});
    std::size_t components = 0;
    vertex_components(hex, &components);
    CHECK(components == 1);
    CHECK(f.poset.id(*f.poset.zero()) == "(a,a)");
    CHECK(f.poset.id(*f.poset.infinity()) == "(a,inf)");
  }
  SUBCASE("edge") {
    const Fiber f = fiber(t, "ab");
    CHECK(f.poset.size() == 4);
    for (const char* lo : {"(ab,a)", "(ab,b)"})
      for (const char* hi : {"(ab,ab)", "(ab,inf)"}) CHECK(f.poset.less(f.poset.index_of(lo), f.poset.index_of(hi)));
    CHECK(f.poset.comparable_pairs() == 8);
  }
  SUBCASE("singleton") {
    const Fiber f = fiber(Poset::from_covers({"p"}, {}), "p");
    CHECK(f.poset.size() == 2);
    CHECK(f.poset.comparable_pairs() == 2);
    CHECK(f.poset.zero());
    CHECK(f.poset.infinity());
  }
  CHECK_THROWS_AS(fiber(t, "zz"), Error);
}

TEST_CASE("gauss morphisms") {
  const Poset t = oracle::triangle();
  const PosetMap id = gauss_morphism(t, "a", "a");
  for (Index i = 0; i < id.source().size(); ++i) CHECK(id(i) == i);

  const PosetMap f = gauss_morphism(t, "a", "ab");
  CHECK(f("(a,a)") == "(ab,a)");
  CHECK(f("(a,b)") == "(ab,b)");
  CHECK(f("(a,ab)") == "(ab,ab)");
  CHECK(f("(a,c)") == "(ab,inf)");
  CHECK(f("(a,ca)") == "(ab,inf)");
  CHECK(f("(a,inf)") == "(ab,inf)");
  CHECK(validate_map(f).is_verified());

  try {
    gauss_morphism(t, "ab", "a");
    FAIL("expected NotComparable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotComparable);
  }

  // Maximal x whose star is its own ideal: everything else goes to infinity.
  const PosetMap g = gauss_morphism(t, "b", "ab");
  CHECK(g("(b,c)") == "(ab,inf)");
  CHECK(g("(b,bc)") == "(ab,inf)");
}

TEST_CASE("gauss functor") {
  const GaussFunctor one = gauss_functor(Poset::from_covers({"p"}, {}));
  CHECK(one.objects.size() == 1);
  CHECK(one.arrows.empty());
  const GaussFunctor t = gauss_functor(oracle::triangle());
  CHECK(t.objects.size() == 6);
  CHECK(t.arrows.size() == 6);
  const Poset s3 = gen::simplex_boundary(3);
  const GaussFunctor g = gauss_functor(s3);
  CHECK(g.objects.size() == 14);
  CHECK(g.arrows.size() == 24);
  std::size_t chains = 0;
  for (const auto& [key, first] : g.arrows)
    for (Index top : s3.upper_covers(key.second)) {
      CHECK(first.then(g.arrows.at({key.second, top})) == g.morphism(key.first, top));
      ++chains;
    }
  // Chains vertex < edge < triangle are the top simplices of the order complex.
  CHECK(chains == 24);
  std::size_t triples = 0;
  for (Index x = 0; x < s3.size(); ++x)
    for (Index y = 0; y < s3.size(); ++y)
      for (Index z = 0; z < s3.size(); ++z) triples += s3.less(x, y) && s3.less(y, z);
  CHECK(chains == triples);
  // Every strict comparable pair, through one cover path.
  std::size_t pairs = 0;
  for (Index x = 0; x < s3.size(); ++x)
    for (Index z = 0; z < s3.size(); ++z) {
      if (!s3.less(x, z)) continue;
      ++pairs;
      PosetMap along = PosetMap::identity(g.objects[x].poset);
      for (Index at = x; at != z;)
        for (Index up : s3.upper_covers(at))
          if (s3.leq(up, z)) {
            along = along.then(g.arrows.at({at, up}));
            at = up;
            break;
          }
      CHECK(along == g.morphism(x, z));
    }
  CHECK(pairs == 36);
  for (const auto& [key, arrow] : g.arrows) {
    const Poset& src = arrow.source();
    CHECK(arrow(*src.infinity()) == *arrow.target().infinity());
  }
}

TEST_CASE("tangent bundle invariants") {
  for (const Poset& p : instances()) {
    const TangentBundle b = tangent_bundle(p);
    const auto& e = b.total;
    std::set<Index> zero_image, inf_image;
    for (Index x = 0; x < p.size(); ++x) {
      CHECK(b.projection(b.section0(x)) == x);
      CHECK(b.projection(b.section_inf(x)) == x);
      CHECK(e.id(b.section0(x)) == pair_id(p.id(x), p.id(x)));
      CHECK(e.id(b.section_inf(x)) == infinity_id(p.id(x)));
      zero_image.insert(b.section0(x));
      inf_image.insert(b.section_inf(x));
      // Fiber size and agreement with the direct description.
      const Fiber over = fiber(b, p.id(x));
      const Fiber direct = fiber_direct(p, x);
      CHECK(over.poset.size() == star_indices(p, x).size() + 1);
      CHECK(over.poset == direct.poset);
    }
    for (Index z : zero_image) CHECK(inf_image.count(z) == 0);
    CHECK(validate_map(b.projection).is_verified());
    CHECK(validate_map(b.section0).is_verified());
    CHECK(validate_map(b.section_inf).is_verified());
    CHECK(e.size() == d_poset(p).size() + p.size());

    // Composites along every chain x <= y <= z, by brute force.
    if (p.size() <= 200) {
      std::vector<Fiber> fibers;
      for (Index x = 0; x < p.size(); ++x) fibers.push_back(fiber_direct(p, x));
      for (Index x = 0; x < p.size(); ++x)
        for (Index y = 0; y < p.size(); ++y) {
          if (!p.leq(x, y)) continue;
          const PosetMap xy = gauss_morphism(p, fibers[x], fibers[y]);
          for (Index z = 0; z < p.size(); ++z)
            if (p.leq(y, z)) CHECK(xy.then(gauss_morphism(p, fibers[y], fibers[z])) == gauss_morphism(p, fibers[x], fibers[z]));
        }
    }
  }
}
