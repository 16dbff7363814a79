#include "tangent_poset/sphere.hpp"

#include <algorithm>
#include <unordered_map>

#include "tangent_poset/error.hpp"
#include "tangent_poset/homology.hpp"

namespace tp {
namespace {

std::string fvec(const SimplicialComplex& k) {
  std::string s = "f=(";
  const auto f = k.f_vector();
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + ")";
}

std::string named(const SimplicialComplex& k, const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + k.label(s[i]);
  return out + "}";
}

// (n-1)-faces mapped to the number of facets containing them.
std::unordered_map<Simplex, std::size_t, SimplexHash> ridge_degrees(const SimplicialComplex& k) {
  std::unordered_map<Simplex, std::size_t, SimplexHash> deg;
  Simplex sub;
  for (const auto& f : k.facets())
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      sub.clear();
      for (std::size_t j = 0; j < f.size(); ++j)
        if (j != drop) sub.push_back(f[j]);
      ++deg[sub];
    }
  return deg;
}

bool connected(const SimplicialComplex& k) {
  std::size_t count = 0;
  vertex_components(k, &count);
  return count == 1;
}

Certainty circle_test(const SimplicialComplex& k) {
  if (k.dimension() != 1 || !k.is_pure())
    return Certainty::refuted("1-sphere: not a pure 1-complex (dim " + std::to_string(k.dimension()) + ")");
  std::vector<std::size_t> degree(k.num_vertices(), 0);
  for (const auto& e : k.facets()) {
    ++degree[e[0]];
    ++degree[e[1]];
  }
  for (Vertex v = 0; v < degree.size(); ++v)
    if (degree[v] != 2)
      return Certainty::refuted("1-sphere: vertex " + k.label(v) + " has degree " + std::to_string(degree[v]))
          .note("witness vertex " + k.label(v));
  if (!connected(k)) return Certainty::refuted("1-sphere: more than one cycle");
  return Certainty::verified("1-sphere: single cycle of length " + std::to_string(k.num_vertices()));
}

Certainty surface_sphere_test(const SimplicialComplex& k) {
  auto pm = is_closed_pseudomanifold(k, 2);
  if (pm.is_refuted()) return pm;
  for (Vertex v = 0; v < k.num_vertices(); ++v) {
    auto c = circle_test(k.link({v}));
    if (!c.is_verified())
      return Certainty::refuted("2-sphere: link of vertex " + k.label(v) + " is not a circle (" + c.summary() + ")")
          .note("witness vertex " + k.label(v));
  }
  const auto chi = euler_characteristic(k);
  if (chi != 2)
    return Certainty::refuted("2-sphere: closed surface with chi=" + std::to_string(chi) + ", " + fvec(k))
        .note("homology " + homology(k).to_string());
  return Certainty::verified("2-sphere: connected closed surface with chi=2, " + fvec(k));
}

}  // namespace

SimplicialComplex boundary_complex(const SimplicialComplex& k) {
  std::vector<Simplex> faces;
  for (const auto& [ridge, deg] : ridge_degrees(k))
    if (deg == 1) faces.push_back(ridge);
  std::vector<std::string> labels(k.labels().begin(), k.labels().end());
  return SimplicialComplex::from_facets(std::move(labels), std::move(faces));
}

Certainty is_pl_sphere(const SimplicialComplex& k, int n, const OracleBudget& budget) {
  if (n < -1) throw Error(ErrorKind::InvalidArgument, "sphere dimension must be >= -1");
  if (n == -1) {
    return k.has_no_vertices() ? Certainty::verified("(-1)-sphere: empty complex")
                               : Certainty::refuted("(-1)-sphere: complex has " + std::to_string(k.num_vertices()) + " vertices");
  }
  if (n == 0) {
    if (k.dimension() == 0 && k.num_vertices() == 2) return Certainty::verified("0-sphere: two points");
    return Certainty::refuted("0-sphere: dim " + std::to_string(k.dimension()) + " with " +
                              std::to_string(k.num_vertices()) + " vertices");
  }
  if (n == 1) return circle_test(k);
  if (n == 2) {
    if (k.dimension() != 2) return Certainty::refuted("2-sphere: dimension " + std::to_string(k.dimension()));
    if (!connected(k)) return Certainty::refuted("2-sphere: disconnected");
    return surface_sphere_test(k);
  }

  const std::string tag = std::to_string(n) + "-sphere: ";
  if (k.dimension() != n) return Certainty::refuted(tag + "dimension " + std::to_string(k.dimension()));
  auto pm = is_closed_pseudomanifold(k, n);
  if (pm.is_refuted()) return pm;
  const auto h = homology(k);
  if (!h.is_sphere_pattern(n)) return Certainty::refuted(tag + "homology " + h.to_string());
  Certainty out = Certainty::unknown(tag + "homology " + h.to_string() + ", " + fvec(k));
  std::size_t unknown_links = 0;
  for (Vertex v = 0; v < k.num_vertices(); ++v) {
    auto c = is_pl_sphere(k.link({v}), n - 1, budget);
    if (c.is_refuted())
      return Certainty::refuted(tag + "link of vertex " + k.label(v) + " is not a PL " + std::to_string(n - 1) +
                                "-sphere (" + c.summary() + ")")
          .note("witness vertex " + k.label(v));
    if (c.is_unknown()) ++unknown_links;
  }
  out.note(unknown_links == 0 ? "all vertex links are PL spheres"
                              : std::to_string(unknown_links) + " vertex links undecided");
  const auto s = simplify(k, budget.simplify());
  if (s.reached_simplex_boundary) {
    out.verdict = Verdict::Verified;
    out.note("bistellar reduction to the boundary of the " + std::to_string(n + 1) + "-simplex in " +
             std::to_string(s.moves.size()) + " moves (seed " + std::to_string(budget.seed) + ")");
    return out;
  }
  out.note("budget exhausted: " + std::to_string(s.moves_tried) + " moves over " + std::to_string(s.restarts_used) +
           " restarts, smallest " + fvec(s.complex));
  return out;
}

Certainty is_pl_ball(const SimplicialComplex& k, int dim, const OracleBudget& budget) {
  if (dim < 0) throw Error(ErrorKind::InvalidArgument, "ball dimension must be >= 0");
  const std::string tag = std::to_string(dim) + "-ball: ";
  if (dim == 0) {
    return k.num_vertices() == 1 && k.dimension() == 0 ? Certainty::verified(tag + "single vertex")
                                                         : Certainty::refuted(tag + "not a single vertex");
  }
  if (k.dimension() != dim || !k.is_pure())
    return Certainty::refuted(tag + "not pure of dimension " + std::to_string(dim) + " (dim " +
                              std::to_string(k.dimension()) + ")");
  for (const auto& [ridge, deg] : ridge_degrees(k))
    if (deg > 2)
      return Certainty::refuted(tag + "ridge " + named(k, ridge) + " lies in " + std::to_string(deg) + " facets")
          .note("witness face " + named(k, ridge));
  const auto bd = boundary_complex(k);
  auto bs = is_pl_sphere(bd, dim - 1, budget);
  if (bs.is_refuted()) return Certainty::refuted(tag + "boundary is not a sphere (" + bs.summary() + ")");
  const auto h = homology(k);
  if (!h.is_point_pattern()) return Certainty::refuted(tag + "homology " + h.to_string() + " differs from a point");

  std::size_t unknown_links = 0;
  for (Vertex v = 0; v < k.num_vertices(); ++v) {
    const bool on_boundary = std::find(bd.labels().begin(), bd.labels().end(), k.label(v)) != bd.labels().end();
    const auto lk = k.link({v});
    auto c = on_boundary ? is_pl_ball(lk, dim - 1, budget) : is_pl_sphere(lk, dim - 1, budget);
    if (c.is_refuted())
      return Certainty::refuted(tag + "link of " + (on_boundary ? "boundary" : "interior") + " vertex " + k.label(v) +
                                " fails (" + c.summary() + ")")
          .note("witness vertex " + k.label(v));
    if (c.is_unknown()) ++unknown_links;
  }

  const auto col = collapse(k);
  Certainty out = Certainty::unknown(tag + "boundary " + bs.summary() + "; homology of a point");
  if (!col.fully_collapsed) {
    out.note("greedy collapse stopped at " + fvec(col.reduced));
    return out;
  }
  out.note("collapses to a vertex in " + std::to_string(col.steps) + " elementary collapses");
  if (bs.is_verified() && unknown_links == 0) {
    out.verdict = Verdict::Verified;
    if (dim >= 3) out.note("heuristic: collapsible manifold with PL-sphere boundary");
  }
  return out;
}

}  // namespace tp
