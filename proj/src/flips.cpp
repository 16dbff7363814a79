#include "tangent_poset/flips.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "tangent_poset/error.hpp"

namespace tp {
namespace {

struct Move {
  Simplex face;
  Simplex tau;
  int i() const { return static_cast<int>(tau.size()) - 1; }
  bool operator<(const Move& o) const {
    return tau.size() != o.tau.size() ? tau.size() < o.tau.size() : (face != o.face ? face < o.face : tau < o.tau);
  }
  bool operator==(const Move& o) const { return face == o.face && tau == o.tau; }
};

Simplex merge(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex minus(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Simplex without(const Simplex& s, Vertex v) {
  Simplex out;
  for (Vertex x : s)
    if (x != v) out.push_back(x);
  return out;
}

// Mutable working copy of a pure complex. Vertex indices are never reused or
// compacted, so logged moves stay valid for the whole run.
class Engine {
public:
  explicit Engine(const SimplicialComplex& k)
      : labels_(k.labels().begin(), k.labels().end()),
        facets_(k.facets().begin(), k.facets().end()),
        n_(k.dimension()) {}

  int dimension() const { return n_; }
  std::size_t num_facets() const { return facets_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t live_vertices() const {
    std::unordered_set<Vertex> seen;
    for (const auto& f : facets_) seen.insert(f.begin(), f.end());
    return seen.size();
  }

  bool minimal() const {
    return n_ >= 0 && facets_.size() == static_cast<std::size_t>(n_) + 2 && live_vertices() == facets_.size();
  }

  // Legal moves with i >= min_i, sorted.
  std::vector<Move> moves(int min_i) const {
    struct Acc {
      std::uint32_t count = 0;
      Simplex uni;
      bool overflow = false;
    };
    std::unordered_map<Simplex, Acc, SimplexHash> acc;
    const std::size_t width = static_cast<std::size_t>(n_) + 1;
    Simplex sub;
    for (const auto& f : facets_) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << width); ++mask) {
        sub.clear();
        for (std::size_t b = 0; b < width; ++b)
          if (mask & (std::uint64_t{1} << b)) sub.push_back(f[b]);
        auto& a = acc[sub];
        ++a.count;
        if (a.overflow) continue;
        // |τ| = n + 2 - |σ|
        a.uni = merge(a.uni, minus(f, sub));
        if (a.uni.size() > width + 1 - sub.size()) a.overflow = true;
      }
    }
    std::vector<Move> out;
    for (const auto& [face, a] : acc) {
      const int i = static_cast<int>(width) - static_cast<int>(face.size());
      if (i < min_i || a.overflow) continue;
      if (i == 0) continue;
      if (a.count != static_cast<std::uint32_t>(i) + 1 || a.uni.size() != static_cast<std::size_t>(i) + 1) continue;
      if (acc.contains(a.uni)) continue;  // τ already a face
      out.push_back({face, a.uni});
    }
    if (min_i <= 0) {
      Vertex fresh = static_cast<Vertex>(labels_.size());
      for (const auto& f : facets_) out.push_back({f, Simplex{fresh}});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void apply(const Move& m) {
    for (Vertex v : m.tau) {
      if (v >= labels_.size()) labels_.push_back(fresh_label());
      facets_.erase(merge(m.face, without(m.tau, v)));
    }
    for (Vertex u : m.face) facets_.insert(merge(without(m.face, u), m.tau));
  }

  SimplicialComplex snapshot() const {
    return SimplicialComplex::from_facets(labels_, std::vector<Simplex>(facets_.begin(), facets_.end()));
  }

  FlipMove named(const Move& m) const {
    FlipMove out;
    for (Vertex v : m.face) out.face.push_back(labels_.at(v));
    for (Vertex v : m.tau) out.complement.push_back(v < labels_.size() ? labels_[v] : fresh_label());
    return out;
  }

  std::string fresh_label() const {
    std::unordered_set<std::string> taken(labels_.begin(), labels_.end());
    for (std::size_t k = labels_.size();; ++k) {
      std::string name = "v" + std::to_string(k);
      if (!taken.contains(name)) return name;
    }
  }

private:
  std::vector<std::string> labels_;
  std::set<Simplex> facets_;
  int n_;
};

}  // namespace

bool is_simplex_boundary(const SimplicialComplex& k) {
  const int n = k.dimension();
  if (n < 0 || !k.is_pure()) return false;
  return k.num_vertices() == static_cast<std::size_t>(n) + 2 && k.num_facets() == static_cast<std::size_t>(n) + 2;
}

std::vector<FlipMove> find_flips(const SimplicialComplex& k) {
  if (k.num_facets() == 0 || !k.is_pure() || k.dimension() < 0) return {};
  Engine e(k);
  std::vector<FlipMove> out;
  for (const auto& m : e.moves(0)) out.push_back(e.named(m));
  return out;
}

SimplicialComplex apply_flip(const SimplicialComplex& k, const FlipMove& move) {
  const int n = k.dimension();
  if (!k.is_pure() || n < 0) throw Error(ErrorKind::IllegalMove, "complex is not pure");
  if (move.face.empty() || move.complement.empty() ||
      move.face.size() + move.complement.size() != static_cast<std::size_t>(n) + 2)
    throw Error(ErrorKind::IllegalMove, "face and complement sizes do not add up to n + 2");
  std::unordered_map<std::string, Vertex> index;
  for (Vertex v = 0; v < k.num_vertices(); ++v) index.emplace(k.label(v), v);
  std::vector<std::string> labels(k.labels().begin(), k.labels().end());
  auto resolve = [&](const std::vector<std::string>& named, bool allow_new) {
    Simplex s;
    for (const auto& l : named) {
      auto it = index.find(l);
      if (it == index.end()) {
        if (!allow_new) throw Error(ErrorKind::IllegalMove, "unknown vertex " + l);
        it = index.emplace(l, static_cast<Vertex>(labels.size())).first;
        labels.push_back(l);
      }
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error(ErrorKind::IllegalMove, "repeated vertex");
    return s;
  };
  const Simplex face = resolve(move.face, false);
  const bool subdivision = move.complement.size() == 1;
  const Simplex tau = resolve(move.complement, subdivision);
  if (minus(face, tau).size() != face.size()) throw Error(ErrorKind::IllegalMove, "face and complement intersect");
  if (subdivision && tau.front() < k.num_vertices())
    throw Error(ErrorKind::IllegalMove, "a (0,n) move needs a new vertex");

  const auto star = k.cofacets(face);
  if (star.size() != tau.size()) throw Error(ErrorKind::IllegalMove, "link of the face is not the boundary of the complement");
  std::set<Simplex> expected;
  for (Vertex v : tau) expected.insert(merge(face, without(tau, v)));
  if (std::set<Simplex>(star.begin(), star.end()) != expected)
    throw Error(ErrorKind::IllegalMove, "link of the face is not the boundary of the complement");
  if (!subdivision && k.contains(tau)) throw Error(ErrorKind::IllegalMove, "complement is already a face");

  std::set<Simplex> facets(k.facets().begin(), k.facets().end());
  for (const auto& f : expected) facets.erase(f);
  for (Vertex u : face) facets.insert(merge(without(face, u), tau));
  return SimplicialComplex::from_facets(std::move(labels), std::vector<Simplex>(facets.begin(), facets.end()));
}

SimplifyResult simplify(const SimplicialComplex& k, const SimplifyBudget& budget) {
  SimplifyResult result;
  result.complex = k;
  const int n = k.dimension();
  if (is_simplex_boundary(k)) {
    result.reached_simplex_boundary = true;
    return result;
  }
  if (n < 1 || !k.is_pure()) return result;

  const std::size_t restarts = std::max<std::size_t>(1, budget.restarts);
  const std::size_t patience = std::max<std::size_t>(200, budget.max_moves / restarts);
  auto canonical = [](const SimplicialComplex& c) { return c.canonical_facets(); };
  auto best_key = canonical(k);

  for (std::size_t r = 0; r < restarts && result.moves_tried < budget.max_moves; ++r) {
    ++result.restarts_used;
    std::mt19937_64 rng(budget.seed * 0x9E3779B97F4A7C15ull + r);
    auto pick = [&](const std::vector<const Move*>& pool) {
      return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    };
    Engine e(k);
    std::vector<Move> log;
    std::size_t run_best = e.num_facets();
    std::size_t run_best_len = 0;
    std::size_t stale = 0;
    Move undo;
    bool have_undo = false;

    while (result.moves_tried < budget.max_moves && !e.minimal()) {
      const auto all = e.moves(1);
      if (all.empty()) break;
      std::vector<const Move*> removal;
      std::vector<const Move*> reducing;
      std::vector<const Move*> sideways;
      for (const auto& m : all) {
        if (m.i() == n)
          removal.push_back(&m);
        else if (2 * m.i() > n)
          reducing.push_back(&m);
        else if (m.i() == n / 2 && !(have_undo && m == undo))
          sideways.push_back(&m);
      }
      const double progress = static_cast<double>(result.moves_tried) / static_cast<double>(budget.max_moves);
      const double wander = 0.2 * (1.0 - progress);
      const Move* chosen = nullptr;
      if (!removal.empty())
        chosen = pick(removal);
      else if (!reducing.empty() && (sideways.empty() || std::uniform_real_distribution<>(0, 1)(rng) >= wander))
        chosen = pick(reducing);
      else if (!sideways.empty())
        chosen = pick(sideways);
      else
        chosen = &all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];

      undo = Move{chosen->tau, chosen->face};
      have_undo = true;
      const Move applied = *chosen;
      e.apply(applied);
      log.push_back(applied);
      ++result.moves_tried;
      if (e.num_facets() < run_best) {
        run_best = e.num_facets();
        run_best_len = log.size();
        stale = 0;
      } else if (++stale > patience) {
        break;
      }
    }

    // Rebuild the run's best state from the log prefix.
    Engine replay(k);
    std::vector<FlipMove> named;
    for (std::size_t s = 0; s < run_best_len; ++s) {
      named.push_back(replay.named(log[s]));
      replay.apply(log[s]);
    }
    const SimplicialComplex candidate = replay.snapshot();
    auto key = canonical(candidate);
    if (candidate.num_facets() < result.complex.num_facets() ||
        (candidate.num_facets() == result.complex.num_facets() && key < best_key)) {
      result.complex = candidate;
      result.moves = std::move(named);
      best_key = std::move(key);
    }
    if (is_simplex_boundary(result.complex)) break;
  }
  result.reached_simplex_boundary = is_simplex_boundary(result.complex);
  return result;
}

}  // namespace tp
