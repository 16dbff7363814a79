#include "tangent_poset/generators.hpp"

#include <algorithm>
#include <random>

#include "tangent_poset/error.hpp"

namespace tp::gen {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

std::vector<Simplex> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<Simplex> out;
  Simplex cur;
  auto rec = [&](auto&& self, Vertex start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (Vertex v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

SimplicialComplex simplex_boundary_complex(int n) {
  require(n >= 1, "simplex boundary needs n >= 1");
  return SimplicialComplex::from_indexed(subsets_of_size(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n)));
}

SimplicialComplex simplex(int n) {
  require(n >= 0, "simplex needs n >= 0");
  return SimplicialComplex::from_indexed(subsets_of_size(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n) + 1));
}

SimplicialComplex cross_polytope_boundary_complex(int n) {
  require(n >= 1, "cross-polytope needs n >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back("+" + std::to_string(i));
    labels.push_back("-" + std::to_string(i));
  }
  // Facets pick one sign per axis.
  std::vector<Simplex> facets;
  for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << n); ++signs) {
    Simplex f;
    for (int i = 0; i < n; ++i) f.push_back(static_cast<Vertex>(2 * i + ((signs >> i) & 1)));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

SimplicialComplex icosahedron_boundary() {
  std::vector<Simplex> f;
  auto u = [](int i) { return static_cast<Vertex>(1 + (i % 5)); };
  auto l = [](int i) { return static_cast<Vertex>(6 + (i % 5)); };
  for (int i = 0; i < 5; ++i) {
    f.push_back({0, u(i), u(i + 1)});
    f.push_back({11, l(i), l(i + 1)});
    f.push_back({u(i), u(i + 1), l(i)});
    f.push_back({u(i + 1), l(i), l(i + 1)});
  }
  return SimplicialComplex::from_indexed(std::move(f));
}

SimplicialComplex torus_7() {
  std::vector<Simplex> f;
  for (Vertex i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_indexed(std::move(f));
}

SimplicialComplex rp2_6() {
  return SimplicialComplex::from_indexed({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                          {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
}

Poset simplex_boundary(int n) { return face_poset(simplex_boundary_complex(n)); }
Poset cross_polytope_boundary(int n) { return face_poset(cross_polytope_boundary_complex(n)); }

Poset cube_boundary(int n) {
  require(n >= 1 && n <= 12, "cube boundary needs 1 <= n <= 12");
  // Digit 0 = '-', 1 = '+', 2 = free.
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::vector<std::string> ids;
  std::vector<std::vector<int>> digits;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> d(n);
    std::size_t c = code;
    for (int i = 0; i < n; ++i, c /= 3) d[i] = static_cast<int>(c % 3);
    if (std::all_of(d.begin(), d.end(), [](int x) { return x == 2; })) continue;
    std::string s;
    for (int x : d) s += x == 0 ? '-' : x == 1 ? '+' : '0';
    ids.push_back(std::move(s));
    digits.push_back(std::move(d));
  }
  // F <= G iff G fixes a subset of F's coordinates with the same signs.
  const std::size_t m = ids.size();
  BitMatrix up(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      bool le = true;
      for (int i = 0; i < n && le; ++i) le = digits[b][i] == 2 || digits[b][i] == digits[a][i];
      if (le) up.set(a, b);
    }
  return Poset::from_order(std::move(ids), std::move(up));
}

Poset polygon(int m) {
  require(m >= 3, "polygon needs m >= 3");
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < m; ++i) ids.push_back("v" + std::to_string(i));
  for (int i = 0; i < m; ++i) {
    const std::string e = "e" + std::to_string(i);
    ids.push_back(e);
    covers.emplace_back("v" + std::to_string(i), e);
    covers.emplace_back("v" + std::to_string((i + 1) % m), e);
  }
  return Poset::from_covers(std::move(ids), covers);
}

Poset product(const Poset& p, const Poset& q) {
  std::vector<std::string> ids;
  for (Index x = 0; x < p.size(); ++x)
    for (Index y = 0; y < q.size(); ++y) ids.push_back("(" + p.id(x) + "," + q.id(y) + ")");
  const std::size_t qn = q.size();
  BitMatrix up(ids.size());
  for (Index x0 = 0; x0 < p.size(); ++x0)
    for (Index y0 = 0; y0 < qn; ++y0)
      for (Index x1 = 0; x1 < p.size(); ++x1)
        for (Index y1 = 0; y1 < qn; ++y1)
          if (p.leq(x0, x1) && q.leq(y0, y1)) up.set(x0 * qn + y0, x1 * qn + y1);
  return Poset::from_order(std::move(ids), std::move(up));
}

SimplicialComplex join_complex(const SimplicialComplex& k, const SimplicialComplex& l) {
  std::vector<std::string> labels;
  for (const auto& s : k.labels()) labels.push_back("a." + s);
  for (const auto& s : l.labels()) labels.push_back("b." + s);
  const auto shift = static_cast<Vertex>(k.num_vertices());
  // The void complex is the unit of the join through its empty face.
  std::vector<Simplex> left(k.facets().begin(), k.facets().end());
  std::vector<Simplex> right(l.facets().begin(), l.facets().end());
  if (left.empty()) left.push_back({});
  if (right.empty()) right.push_back({});
  std::vector<Simplex> facets;
  for (const auto& a : left)
    for (const auto& b : right) {
      Simplex f(a);
      for (Vertex v : b) f.push_back(v + shift);
      facets.push_back(std::move(f));
    }
  return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

SimplicialComplex suspension(const SimplicialComplex& k) {
  std::vector<std::string> labels(k.labels().begin(), k.labels().end());
  auto fresh = [&](std::string base) {
    while (std::find(labels.begin(), labels.end(), base) != labels.end()) base += "'";
    return base;
  };
  const auto north = static_cast<Vertex>(labels.size());
  labels.push_back(fresh("N"));
  const auto south = static_cast<Vertex>(labels.size());
  labels.push_back(fresh("S"));
  std::vector<Simplex> base(k.facets().begin(), k.facets().end());
  if (base.empty()) base.push_back({});
  std::vector<Simplex> facets;
  for (const auto& f : base) {
    Simplex a(f);
    a.push_back(north);
    Simplex b(f);
    b.push_back(south);
    facets.push_back(std::move(a));
    facets.push_back(std::move(b));
  }
  return SimplicialComplex::from_facets(std::move(labels), std::move(facets));
}

SimplicialComplex random_complex(std::uint64_t seed, int max_vertices, int max_dim) {
  require(max_vertices >= 3 && max_dim >= 1, "random complex needs >= 3 vertices and dim >= 1");
  std::mt19937_64 rng(seed);
  const int nv = std::uniform_int_distribution<int>(3, max_vertices)(rng);
  const int top = std::min(max_dim, nv - 1);
  std::vector<Simplex> chosen;
  std::bernoulli_distribution keep(0.45);
  for (int d = top; d >= 1; --d)
    for (auto& s : subsets_of_size(static_cast<std::size_t>(nv), static_cast<std::size_t>(d) + 1))
      if (keep(rng)) chosen.push_back(std::move(s));
  if (chosen.empty()) chosen.push_back({0, 1});
  return SimplicialComplex::from_indexed(std::move(chosen));
}

Poset random_face_poset(std::uint64_t seed, int max_vertices, int max_dim) {
  return face_poset(random_complex(seed, max_vertices, max_dim));
}

}  // namespace tp::gen
