#include "tangent_poset/complex.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "tangent_poset/error.hpp"

namespace tp {

struct SimplicialComplex::FaceCache {
  std::once_flag once;
  FaceTable table;
};

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull ^ s.size();
  for (Vertex v : s) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t FaceTable::find(const Simplex& s) const {
  if (s.empty() || s.size() > faces.size()) return npos;
  const auto& row = faces[s.size() - 1];
  auto it = std::lower_bound(row.begin(), row.end(), s);
  return it != row.end() && *it == s ? static_cast<std::size_t>(it - row.begin()) : npos;
}

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<FaceCache>()) {}

namespace {

bool is_subset_sorted(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <class F>
void for_each_nonempty_subset(const Simplex& s, F&& f) {
  const std::size_t n = s.size();
  Simplex sub;
  sub.reserve(n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    sub.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) sub.push_back(s[i]);
    f(sub);
  }
}

std::vector<Simplex> maximal_only(std::vector<Simplex> simplices) {
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::sort(simplices.begin(), simplices.end(),
            [](const Simplex& a, const Simplex& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  if (simplices.empty() || simplices.front().size() == simplices.back().size()) {
    std::sort(simplices.begin(), simplices.end());
    return simplices;
  }
  std::vector<Simplex> kept;
  const std::size_t top = simplices.front().size();
  if (top <= 16) {
    std::unordered_set<Simplex, SimplexHash> covered;
    for (auto& s : simplices) {
      if (s.empty() ? !kept.empty() : covered.contains(s)) continue;
      if (s.size() > 1)
        for_each_nonempty_subset(s, [&](const Simplex& sub) {
          if (sub.size() < s.size()) covered.insert(sub);
        });
      kept.push_back(std::move(s));
    }
  } else {
    for (auto& s : simplices) {
      const bool inside = std::any_of(kept.begin(), kept.end(), [&](const Simplex& k) { return is_subset_sorted(s, k); });
      if (!inside) kept.push_back(std::move(s));
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> labels, std::vector<Simplex> simplices) {
  for (const auto& s : simplices)
    for (Vertex v : s)
      if (v >= labels.size()) throw Error(ErrorKind::InvalidArgument, "simplex vertex without a label");
  auto facets = maximal_only(std::move(simplices));
  std::vector<char> used(labels.size(), 0);
  for (const auto& f : facets)
    for (Vertex v : f) used[v] = 1;
  std::vector<Vertex> remap(labels.size(), 0);
  SimplicialComplex k;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (!used[v]) continue;
    remap[v] = static_cast<Vertex>(k.labels_.size());
    k.labels_.push_back(std::move(labels[v]));
  }
  {
    std::unordered_set<std::string> seen(k.labels_.begin(), k.labels_.end());
    if (seen.size() != k.labels_.size()) throw Error(ErrorKind::DuplicateIdentifier, "repeated vertex label");
  }
  const bool identity = k.labels_.size() == labels.size();
  if (!identity)
    for (auto& f : facets)
      for (auto& v : f) v = remap[v];
  if (!identity) std::sort(facets.begin(), facets.end());
  k.facets_ = std::move(facets);
  return k;
}

SimplicialComplex SimplicialComplex::from_named(const std::vector<std::vector<std::string>>& simplices) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> index;
  std::vector<Simplex> faces;
  faces.reserve(simplices.size());
  for (const auto& named : simplices) {
    Simplex s;
    for (const auto& l : named) {
      auto [it, fresh] = index.emplace(l, static_cast<Vertex>(labels.size()));
      if (fresh) labels.push_back(l);
      s.push_back(it->second);
    }
    faces.push_back(std::move(s));
  }
  return from_facets(std::move(labels), std::move(faces));
}

SimplicialComplex SimplicialComplex::from_indexed(std::vector<Simplex> simplices) {
  Vertex top = 0;
  for (const auto& s : simplices)
    for (Vertex v : s) top = std::max(top, v + 1);
  std::vector<std::string> labels(top);
  for (Vertex v = 0; v < top; ++v) labels[v] = std::to_string(v);
  return from_facets(std::move(labels), std::move(simplices));
}

int SimplicialComplex::dimension() const noexcept {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const noexcept {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Simplex& f) { return f.size() == facets_.front().size(); });
}

const FaceTable& SimplicialComplex::faces() const {
  std::call_once(cache_->once, [this] {
    const int dim = dimension();
    std::vector<std::unordered_set<Simplex, SimplexHash>> sets(static_cast<std::size_t>(dim + 1));
    for (const auto& f : facets_)
      for_each_nonempty_subset(f, [&](const Simplex& sub) { sets[sub.size() - 1].insert(sub); });
    auto& table = cache_->table;
    table.faces.resize(sets.size());
    for (std::size_t d = 0; d < sets.size(); ++d) {
      table.faces[d].assign(sets[d].begin(), sets[d].end());
      std::sort(table.faces[d].begin(), table.faces[d].end());
    }
  });
  return cache_->table;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  const auto& t = faces();
  std::vector<std::size_t> f;
  for (const auto& row : t.faces) f.push_back(row.size());
  return f;
}

std::size_t SimplicialComplex::num_faces() const {
  std::size_t n = 0;
  for (auto c : f_vector()) n += c;
  return n;
}

bool SimplicialComplex::contains(const Simplex& face) const {
  if (face.empty()) return !facets_.empty();
  return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) { return is_subset_sorted(face, f); });
}

std::vector<Simplex> SimplicialComplex::cofacets(const Simplex& face) const {
  std::vector<Simplex> out;
  for (const auto& f : facets_)
    if (is_subset_sorted(face, f)) out.push_back(f);
  return out;
}

SimplicialComplex SimplicialComplex::link(const Simplex& face) const {
  std::vector<Simplex> parts;
  for (const auto& f : facets_) {
    if (!is_subset_sorted(face, f)) continue;
    Simplex rest;
    std::set_difference(f.begin(), f.end(), face.begin(), face.end(), std::back_inserter(rest));
    parts.push_back(std::move(rest));
  }
  return from_facets(labels_, std::move(parts));
}

SimplicialComplex SimplicialComplex::closed_star(const Simplex& face) const {
  return from_facets(labels_, cofacets(face));
}

SimplicialComplex SimplicialComplex::skeleton(int d) const {
  std::vector<Simplex> parts;
  const auto& t = faces();
  for (int k = 0; k <= d && k < static_cast<int>(t.faces.size()); ++k)
    parts.insert(parts.end(), t.faces[k].begin(), t.faces[k].end());
  return from_facets(labels_, std::move(parts));
}

std::vector<std::vector<std::string>> SimplicialComplex::canonical_facets() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) {
    std::vector<std::string> named;
    for (Vertex v : f) named.push_back(labels_[v]);
    std::sort(named.begin(), named.end());
    out.push_back(std::move(named));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> vertex_components(const SimplicialComplex& k, std::size_t* count) {
  std::vector<std::size_t> parent(k.num_vertices());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& f : k.facets())
    for (std::size_t i = 1; i < f.size(); ++i) parent[root(f[i])] = root(f[0]);
  std::vector<std::size_t> comp(k.num_vertices());
  std::unordered_map<std::size_t, std::size_t> ids;
  for (std::size_t v = 0; v < comp.size(); ++v) {
    auto [it, fresh] = ids.emplace(root(v), ids.size());
    comp[v] = it->second;
  }
  if (count) *count = ids.size();
  return comp;
}

SimplicialComplex order_complex(const Poset& p) {
  std::vector<std::string> labels(p.ids().begin(), p.ids().end());
  std::vector<Simplex> chains;
  Simplex chain;
  // Maximal chains are saturated chains from a minimal to a maximal element.
  auto extend = [&](auto&& self, Index x) -> void {
    chain.push_back(x);
    const auto up = p.upper_covers(x);
    if (up.empty()) chains.push_back(chain);
    for (Index y : up) self(self, y);
    chain.pop_back();
  };
  for (Index m : p.minimal_elements()) extend(extend, m);
  return SimplicialComplex::from_facets(std::move(labels), std::move(chains));
}

std::uint64_t count_chains(const Poset& p) {
  const auto& k = kernels::ops();
  const std::size_t n = p.size();
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::vector<std::size_t> below(n);
  for (Index i = 0; i < n; ++i) below[i] = k.popcount(p.down_row(i));
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return below[a] < below[b]; });
  std::vector<std::uint64_t> ending(n, 0);
  std::uint64_t total = 0;
  for (Index x : order) {
    std::uint64_t c = 1;
    for_each_bit(p.down_row(x), [&](std::size_t y) {
      if (y != x) c += ending[y];
    });
    ending[x] = c;
    total += c;
  }
  return total;
}

namespace {

bool plain_token(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '+' || c == '-' || c == '.';
  });
}

}  // namespace

std::string face_id(std::span<const std::string> labels) {
  if (labels.size() == 1) return labels.front();
  const bool plain = std::all_of(labels.begin(), labels.end(), plain_token);
  std::string out = plain ? "" : "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += plain ? "_" : "|";
    out += labels[i];
  }
  if (!plain) out += "}";
  return out;
}

Poset face_poset(const SimplicialComplex& k) {
  const auto& t = k.faces();
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> covers;
  auto name = [&](const Simplex& s) {
    std::vector<std::string> labels;
    for (Vertex v : s) labels.push_back(k.label(v));
    return face_id(labels);
  };
  for (const auto& row : t.faces)
    for (const auto& s : row) {
      ids.push_back(name(s));
      if (s.size() < 2) continue;
      const std::string upper = ids.back();
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex sub;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) sub.push_back(s[i]);
        covers.emplace_back(name(sub), upper);
      }
    }
  return Poset::from_covers(std::move(ids), covers);
}

}  // namespace tp
