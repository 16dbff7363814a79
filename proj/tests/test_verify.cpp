#include <doctest.h>

#include "oracles.hpp"
#include "tangent_poset/error.hpp"
#include "tangent_poset/generators.hpp"
#include "tangent_poset/homology.hpp"
#include "tangent_poset/tangent.hpp"
#include "tangent_poset/verify.hpp"

using namespace tp;

namespace {

bool mentions(const VerificationReport& r, const std::string& s) { return r.overall().summary().find(s) != std::string::npos; }

// Relabel every element of a labelled poset, keeping labels and order.
Poset renamed(const Poset& p, const std::string& prefix) {
  std::vector<std::string> ids;
  for (const auto& s : p.ids()) ids.push_back(prefix + s);
  return Poset::from_order(ids, p.up_matrix(), {p.labels().begin(), p.labels().end()});
}

Poset with_infinity_at(const Poset& p, const std::string& id) {
  std::vector<Label> labels(p.size(), Label::None);
  labels[p.index_of(id)] = Label::Infinity;
  return p.with_labels(labels);
}

}  // namespace

TEST_CASE("report aggregation") {
  VerificationReport r{"demo", {}, {}};
  CHECK(r.verdict() == Verdict::Verified);
  r.add("one", Certainty::verified("fine"));
  r.add("two", Certainty::unknown("budget"));
  CHECK(r.verdict() == Verdict::Unknown);
  r.add("three", Certainty::refuted("broken").note("witness element q"));
  CHECK(r.verdict() == Verdict::Refuted);
  CHECK(mentions(r, "witness element q"));
  CHECK(r.to_text().find("overall: refuted") != std::string::npos);
}

TEST_CASE("abstract ball complexes") {
  CHECK(is_abstract_ball_complex(oracle::triangle()).verdict() == Verdict::Verified);
  CHECK(is_abstract_ball_complex(gen::simplex_boundary(3)).verdict() == Verdict::Verified);
  // Rank-1 element with a single lower cover.
  const Poset pinched =
      Poset::from_covers({"v", "e"}, std::vector<std::pair<std::string, std::string>>{{"v", "e"}});
  const auto r = is_abstract_ball_complex(pinched);
  CHECK(r.verdict() == Verdict::Refuted);
  CHECK(mentions(r, "witness element e"));
}

TEST_CASE("abstract manifolds") {
  CHECK(is_abstract_manifold(oracle::triangle()).verdict() == Verdict::Verified);
  CHECK(is_abstract_manifold(gen::simplex_boundary(3)).verdict() == Verdict::Verified);
  const Poset full = face_poset(gen::simplex(2));
  const auto r = is_abstract_manifold(full);
  CHECK(r.verdict() == Verdict::Refuted);
  // The opposite fails at a vertex.
  CHECK(mentions(r, "opposite"));
  CHECK((mentions(r, "witness element 0") || mentions(r, "witness element 1") || mentions(r, "witness element 2")));
  const std::vector<std::pair<std::string, std::string>> covers = {{"x", "z"}, {"y", "w"}, {"w", "z"}};
  const auto impure = is_abstract_manifold(Poset::from_covers({"x", "y", "w", "z"}, covers));
  CHECK(impure.verdict() == Verdict::Refuted);
  CHECK(impure.checks.front().result.is_refuted());
}

TEST_CASE("strictness") {
  const auto s3 = is_strict(gen::simplex_boundary(3), 2);
  CHECK(s3.verdict() == Verdict::Verified);
  CHECK(!s3.notes.empty());
  CHECK(s3.notes.front().find("approximate") != std::string::npos);
  CHECK(is_strict(gen::cube_boundary(3), 2).verdict() == Verdict::Verified);
  CHECK(is_strict(oracle::triangle(), 1).verdict() == Verdict::Verified);
  CHECK(is_strict(gen::polygon(4), 1).verdict() == Verdict::Verified);
  CHECK(is_strict(face_poset(gen::torus_7()), 2).verdict() == Verdict::Verified);
  CHECK(is_strict(oracle::triangle(), 2).verdict() == Verdict::Refuted);
}

TEST_CASE("abstract spheres") {
  CHECK(is_abstract_sphere(oracle::triangle(), 1).verdict() == Verdict::Verified);
  CHECK(is_abstract_sphere(gen::simplex_boundary(3), 2).verdict() == Verdict::Verified);
  const auto torus = is_abstract_sphere(face_poset(gen::torus_7()), 2);
  CHECK(torus.verdict() == Verdict::Refuted);
  CHECK(mentions(torus, "H1=Z^2"));
}

TEST_CASE("R_n objects") {
  const Poset t = oracle::triangle();
  const Fiber ga = fiber(t, "a");
  CHECK(is_rn_object(ga.poset, 1).verdict() == Verdict::Verified);
  const Poset s3 = gen::simplex_boundary(3);
  CHECK(is_rn_object(fiber(s3, "0").poset, 2).verdict() == Verdict::Verified);
  const Poset hex = with_infinity_at(t, "a");
  CHECK(is_rn_object(hex, 1).verdict() == Verdict::Refuted);
  CHECK(mentions(is_rn_object(hex, 1), "witness element a"));
  CHECK_THROWS_AS(is_rn_object(t, 1), Error);
  // Relabelling the base does not change the verdict.
  const Poset t2 = renamed(t, "q");
  CHECK(is_rn_object(fiber(t2, "qa").poset, 1).verdict() == Verdict::Verified);
  CHECK(is_rn_object(renamed(ga.poset, "z"), 1).verdict() == Verdict::Verified);
}

TEST_CASE("aggregations") {
  const Poset s3 = gen::simplex_boundary(3);
  CHECK(is_aggregation(PosetMap::identity(s3), 2).verdict() == Verdict::Verified);
  const PosetMap g = gauss_morphism(oracle::triangle(), "a", "ab");
  CHECK(is_aggregation(g, 1).verdict() == Verdict::Verified);

  // Square circle onto one of its edges' worth: two opposite edges to e0.
  const Poset sq = gen::polygon(4);
  std::vector<Index> a(sq.size());
  for (Index i = 0; i < sq.size(); ++i) a[i] = i;
  a[sq.index_of("e2")] = sq.index_of("e0");
  const auto bad = is_aggregation(PosetMap(sq, sq, a), 1);
  CHECK(bad.verdict() == Verdict::Refuted);
}

TEST_CASE("R_n morphisms") {
  const GaussFunctor g = gauss_functor(gen::simplex_boundary(2));
  for (const auto& [key, arrow] : g.arrows) CHECK(is_rn_morphism(arrow, 1).verdict() == Verdict::Verified);
  const Fiber ga = fiber(oracle::triangle(), "a");
  CHECK(is_rn_morphism(PosetMap::identity(ga.poset), 1).verdict() == Verdict::Verified);
  // Same map with infinity moved on the target.
  const PosetMap f = gauss_morphism(oracle::triangle(), "a", "ab");
  const Poset moved = with_infinity_at(f.target().without_labels(), "(ab,ab)");
  const PosetMap relabelled(f.source(), moved, {f.assignment().begin(), f.assignment().end()});
  CHECK(is_rn_morphism(relabelled, 1).verdict() == Verdict::Refuted);
  CHECK_THROWS_AS(is_rn_morphism(PosetMap::identity(oracle::triangle()), 1), Error);
}

TEST_CASE("aggregations compose") {
  const Poset s3 = gen::simplex_boundary(3);
  const GaussFunctor g = gauss_functor(s3);
  int composed = 0;
  for (const auto& [key, first] : g.arrows)
    for (Index top : s3.upper_covers(key.second)) {
      const PosetMap second = g.arrows.at({key.second, top});
      REQUIRE(is_aggregation(first, 2).verdict() == Verdict::Verified);
      CHECK(is_aggregation(first.then(second), 2).verdict() == Verdict::Verified);
      if (++composed == 6) return;
    }
}

TEST_CASE("fibers minus infinity are stars") {
  for (const Poset& p : {oracle::triangle(), gen::simplex_boundary(3), gen::cube_boundary(2)}) {
    for (Index x = 0; x < p.size(); ++x) {
      const Fiber f = fiber_direct(p, x);
      std::vector<Index> finite;
      for (Index i = 0; i < f.poset.size(); ++i)
        if (f.poset.label(i) != Label::Infinity) finite.push_back(i);
      const Poset without = f.poset.induced(finite);
      const Poset st = star(p, p.id(x));
      REQUIRE(without.size() == st.size());
      for (Index a = 0; a < st.size(); ++a)
        for (Index b = 0; b < st.size(); ++b) CHECK(without.leq(a, b) == st.leq(a, b));
      CHECK(without.id(*without.zero()) == pair_id(p.id(x), p.id(x)));
    }
  }
}

TEST_CASE("theorem 1 on small instances") {
  const auto tri = verify_theorem1(oracle::triangle(), 1);
  CHECK(tri.verdict() == Verdict::Verified);
  bool torus_note = false;
  for (const auto& n : tri.notes) torus_note = torus_note || n.find("H0=Z H1=Z^2 H2=Z, chi = 0") != std::string::npos;
  CHECK(torus_note);
  bool not_checkable = false;
  for (const auto& n : tri.notes) not_checkable = not_checkable || n.find("items 3-5") != std::string::npos;
  CHECK(not_checkable);
  CHECK(verify_theorem1(gen::polygon(4), 1).verdict() == Verdict::Verified);

  const TangentBundle b = tangent_bundle(oracle::triangle());
  const SimplicialComplex k = order_complex(b.total);
  CHECK(homology(k).betti() == std::vector<std::size_t>{1, 2, 1});
  CHECK(euler_characteristic(k) == 0);
}
