#include "tangent_poset/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace tp {

std::vector<std::size_t> HomologyResult::betti() const {
  std::vector<std::size_t> b;
  for (const auto& g : groups) b.push_back(g.betti);
  return b;
}

bool HomologyResult::torsion_free() const {
  return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& g) { return g.torsion.empty(); });
}

std::string HomologyResult::to_string() const {
  std::ostringstream out;
  for (std::size_t d = 0; d < groups.size(); ++d) {
    if (d) out << ' ';
    out << 'H' << d << '=';
    const auto& g = groups[d];
    bool any = false;
    if (g.betti > 0) {
      out << 'Z';
      if (g.betti > 1) out << '^' << g.betti;
      any = true;
    }
    for (const auto& t : g.torsion) {
      if (any) out << '+';
      out << "Z/" << t;
      any = true;
    }
    if (!any) out << '0';
  }
  return out.str();
}

bool HomologyResult::is_sphere_pattern(int n) const {
  if (n < 0 || groups.size() != static_cast<std::size_t>(n) + 1 || !torsion_free()) return false;
  if (n == 0) return groups[0].betti == 2;
  for (int d = 0; d <= n; ++d) {
    const std::size_t want = (d == 0 || d == n) ? 1 : 0;
    if (groups[d].betti != want) return false;
  }
  return true;
}

bool HomologyResult::is_point_pattern() const {
  if (groups.empty() || !torsion_free() || groups[0].betti != 1) return false;
  return std::all_of(groups.begin() + 1, groups.end(), [](const HomologyGroup& g) { return g.betti == 0; });
}

SparseIntMatrix boundary_matrix(const SimplicialComplex& k, int d) {
  const auto& t = k.faces();
  SparseIntMatrix m;
  m.rows = d >= 1 ? t.count(d - 1) : 0;
  m.cols = t.count(d);
  m.columns.resize(m.cols);
  if (d < 1) return m;
  Simplex sub;
  for (std::size_t c = 0; c < m.cols; ++c) {
    const Simplex& s = t.faces[d][c];
    auto& col = m.columns[c];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      sub.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) sub.push_back(s[i]);
      const std::size_t r = t.find(sub);
      col.emplace_back(static_cast<std::uint32_t>(r), drop % 2 == 0 ? 1 : -1);
    }
    std::sort(col.begin(), col.end());
  }
  return m;
}

HomologyResult homology(const SimplicialComplex& k) {
  HomologyResult out;
  const int dim = k.dimension();
  if (dim < 0) return out;
  // snf[d] describes the boundary map out of degree d.
  std::vector<SmithResult> snf(static_cast<std::size_t>(dim) + 2);
  for (int d = 1; d <= dim; ++d) snf[d] = smith_normal_form(boundary_matrix(k, d));
  const auto& t = k.faces();
  for (int d = 0; d <= dim; ++d) {
    HomologyGroup g;
    const std::size_t cycles = t.count(d) - snf[d].rank;
    g.betti = cycles - snf[d + 1].rank;
    g.torsion = snf[d + 1].torsion;
    out.groups.push_back(std::move(g));
  }
  return out;
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
  std::int64_t chi = 0;
  const auto f = k.f_vector();
  for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[d]);
  return chi;
}

Certainty is_closed_pseudomanifold(const SimplicialComplex& k, int n) {
  const std::string tag = "closed " + std::to_string(n) + "-pseudomanifold: ";
  if (k.num_facets() == 0) return Certainty::refuted(tag + "void complex");
  for (const auto& f : k.facets())
    if (static_cast<int>(f.size()) != n + 1)
      return Certainty::refuted(tag + "facet of dimension " + std::to_string(f.size() - 1) + " (not pure of dimension " +
                                std::to_string(n) + ")");
  if (n <= 0) {
    // The empty face is the only ridge.
    if (n == 0 && k.num_facets() != 2)
      return Certainty::refuted(tag + std::to_string(k.num_facets()) + " points instead of 2");
    return Certainty::verified(tag + "holds");
  }
  // Ridge -> facets containing it.
  std::unordered_map<Simplex, std::vector<std::size_t>, SimplexHash> ridges;
  const auto facets = k.facets();
  Simplex sub;
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t drop = 0; drop < facets[i].size(); ++drop) {
      sub.clear();
      for (std::size_t j = 0; j < facets[i].size(); ++j)
        if (j != drop) sub.push_back(facets[i][j]);
      ridges[sub].push_back(i);
    }
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<const Simplex*> order;
  for (const auto& [ridge, owners] : ridges) order.push_back(&ridge);
  std::sort(order.begin(), order.end(), [](const Simplex* a, const Simplex* b) { return *a < *b; });
  for (const Simplex* r : order) {
    const auto& owners = ridges.at(*r);
    if (owners.size() != 2) {
      std::string face;
      for (Vertex v : *r) face += (face.empty() ? "" : ",") + k.label(v);
      return Certainty::refuted(tag + "ridge {" + face + "} lies in " + std::to_string(owners.size()) + " facets")
          .note("witness face {" + face + "}");
    }
    parent[root(owners[0])] = root(owners[1]);
  }
  for (std::size_t i = 1; i < facets.size(); ++i)
    if (root(i) != root(0))
      return Certainty::refuted(tag + "facets are not strongly connected through ridges");
  return Certainty::verified(tag + std::to_string(facets.size()) + " facets, every ridge in exactly two, strongly connected");
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) { return order_complex(face_poset(k)); }

CollapseResult collapse(const SimplicialComplex& k) {
  CollapseResult out;
  const auto& t = k.faces();
  struct State {
    std::size_t cofaces = 0;  // immediate cofaces still present
    bool alive = true;
  };
  std::unordered_map<Simplex, State, SimplexHash> faces;
  for (const auto& row : t.faces)
    for (const auto& s : row) faces.emplace(s, State{});
  auto for_each_ridge = [](const Simplex& s, auto&& f) {
    if (s.size() < 2) return;
    Simplex sub;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      sub.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) sub.push_back(s[i]);
      f(sub);
    }
  };
  for (auto& [s, st] : faces) for_each_ridge(s, [&](const Simplex& r) { ++faces.at(r).cofaces; });

  // Candidates ordered by dimension (high first), then lexicographically.
  auto cmp = [](const Simplex& a, const Simplex& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; };
  std::set<Simplex, decltype(cmp)> candidates(cmp);
  for (const auto& [s, st] : faces)
    if (st.cofaces == 1) candidates.insert(s);

  auto unique_coface = [&](const Simplex& s) -> const Simplex* {
    // The only live face of size |s|+1 containing s.
    for (const auto& f : k.facets()) {
      if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) continue;
      for (Vertex v : f) {
        if (std::binary_search(s.begin(), s.end(), v)) continue;
        Simplex up(s);
        up.insert(std::upper_bound(up.begin(), up.end(), v), v);
        auto it = faces.find(up);
        if (it != faces.end() && it->second.alive) return &it->first;
      }
    }
    return nullptr;
  };

  while (!candidates.empty()) {
    const Simplex s = *candidates.begin();
    candidates.erase(candidates.begin());
    auto& st = faces.at(s);
    if (!st.alive || st.cofaces != 1) continue;
    const Simplex* tau = unique_coface(s);
    if (!tau || faces.at(*tau).cofaces != 0) continue;
    const Simplex upper = *tau;
    faces.at(upper).alive = false;
    st.alive = false;
    for_each_ridge(upper, [&](const Simplex& r) {
      auto& rs = faces.at(r);
      --rs.cofaces;
      if (rs.alive && rs.cofaces == 1) candidates.insert(r);
    });
    for_each_ridge(s, [&](const Simplex& r) {
      auto& rs = faces.at(r);
      --rs.cofaces;
      if (rs.alive && rs.cofaces == 1) candidates.insert(r);
    });
    // Faces that lost their last coface become maximal; their own faces may turn free.
    for_each_ridge(upper, [&](const Simplex& r) {
      if (faces.at(r).alive && faces.at(r).cofaces == 0)
        for_each_ridge(r, [&](const Simplex& q) {
          if (faces.at(q).alive && faces.at(q).cofaces == 1) candidates.insert(q);
        });
    });
    ++out.steps;
  }
  std::vector<Simplex> remaining;
  for (const auto& [s, st] : faces)
    if (st.alive && st.cofaces == 0) remaining.push_back(s);
  std::vector<std::string> labels(k.labels().begin(), k.labels().end());
  out.reduced = SimplicialComplex::from_facets(std::move(labels), std::move(remaining));
  out.fully_collapsed = out.reduced.num_vertices() == 1;
  return out;
}

}  // namespace tp
