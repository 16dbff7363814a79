#include "tangent_poset/tangent.hpp"

#include <algorithm>

#include "tangent_poset/error.hpp"

namespace tp {

std::string pair_id(std::string_view x, std::string_view y) {
  std::string s;
  s.reserve(x.size() + y.size() + 3);
  s += '(';
  s += x;
  s += ',';
  s += y;
  s += ')';
  return s;
}

std::string infinity_id(std::string_view x) { return pair_id(x, kInfinityToken); }

std::vector<std::pair<Index, Index>> d_poset(const Poset& p) {
  const auto& k = kernels::ops();
  std::vector<std::pair<Index, Index>> out;
  for (Index x = 0; x < p.size(); ++x)
    for (Index y = 0; y < p.size(); ++y)
      if (k.intersects(p.up_row(x), p.up_row(y))) out.emplace_back(x, y);
  return out;
}

namespace {

// Element layout of E(P): grouped by first coordinate.
struct Layout {
  std::vector<Index> first;
  std::vector<Index> second;  // kInfinityIndex for the section at infinity
  std::vector<std::size_t> group_begin;  // size |P| + 1
  std::vector<std::string> ids;
};

Layout layout(const Poset& p) {
  Layout l;
  for (Index x = 0; x < p.size(); ++x) {
    l.group_begin.push_back(l.first.size());
    for (Index y : star_indices(p, x)) {
      l.first.push_back(x);
      l.second.push_back(y);
      l.ids.push_back(pair_id(p.id(x), p.id(y)));
    }
    l.first.push_back(x);
    l.second.push_back(kInfinityIndex);
    l.ids.push_back(infinity_id(p.id(x)));
  }
  l.group_begin.push_back(l.first.size());
  return l;
}

enum class MiddleCase { NotAboveY, InLink };

BitMatrix relation(const Poset& p, const Layout& l, MiddleCase mode) {
  const std::size_t n = l.first.size();
  BitMatrix up(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Index x1 = l.first[a];
    const Index y1 = l.second[a];
    for_each_bit(p.up_row(x1), [&](std::size_t x2s) {
      const auto x2 = static_cast<Index>(x2s);
      for (std::size_t b = l.group_begin[x2]; b < l.group_begin[x2 + 1]; ++b) {
        const Index y2 = l.second[b];
        bool le;
        if (y1 != kInfinityIndex && y2 != kInfinityIndex) {
          le = p.leq(y1, y2);
        } else if (y1 != kInfinityIndex) {
          if (mode == MiddleCase::NotAboveY) {
            le = !p.leq(x2, y1);
          } else {
            const auto& k = kernels::ops();
            le = k.intersects(p.up_row(x2), p.up_row(y1)) && !p.leq(x2, y1);
          }
        } else {
          le = y2 == kInfinityIndex;
        }
        if (le) up.set(a, b);
      }
    });
  }
  return up;
}

}  // namespace

std::optional<std::array<std::string, 3>> link_reading_transitivity_witness(const Poset& p) {
  const Layout l = layout(p);
  const auto w = transitivity_witness(relation(p, l, MiddleCase::InLink));
  if (!w) return std::nullopt;
  return std::array<std::string, 3>{l.ids[(*w)[0]], l.ids[(*w)[1]], l.ids[(*w)[2]]};
}

TangentBundle tangent_bundle(const Poset& p) {
  Layout l = layout(p);
  BitMatrix up = relation(p, l, MiddleCase::NotAboveY);
  if (auto w = transitivity_witness(up))
    throw Error(ErrorKind::FunctorialityFailure, "tangent order not transitive at " + l.ids[(*w)[0]] + " <= " +
                                                     l.ids[(*w)[1]] + " <= " + l.ids[(*w)[2]]);
  std::vector<Index> proj(l.first);
  std::vector<Index> s0(p.size());
  std::vector<Index> sinf(p.size());
  for (Index x = 0; x < p.size(); ++x) {
    for (std::size_t e = l.group_begin[x]; e < l.group_begin[x + 1]; ++e) {
      if (l.second[e] == x) s0[x] = static_cast<Index>(e);
      if (l.second[e] == kInfinityIndex) sinf[x] = static_cast<Index>(e);
    }
  }
  Poset total = Poset::from_order(std::move(l.ids), std::move(up));
  TangentBundle b{p,
                  total,
                  PosetMap(total, p, std::move(proj)),
                  PosetMap(p, total, std::move(s0)),
                  PosetMap(p, total, std::move(sinf)),
                  link_reading_transitivity_witness(p)};
  return b;
}

Fiber fiber(const TangentBundle& bundle, std::string_view x) {
  const Index xi = bundle.base.index_of(x);
  std::vector<Index> members;
  for (Index e = 0; e < bundle.total.size(); ++e)
    if (bundle.projection(e) == xi) members.push_back(e);
  Poset sub = bundle.total.induced(members);
  std::vector<Label> labels(sub.size(), Label::None);
  labels[sub.index_of(pair_id(x, x))] = Label::Zero;
  labels[sub.index_of(infinity_id(x))] = Label::Infinity;
  // The second coordinates follow Star x in base order, then infinity.
  std::vector<Index> coordinate = star_indices(bundle.base, xi);
  coordinate.push_back(kInfinityIndex);
  return {sub.with_labels(std::move(labels)), std::string(x), std::move(coordinate)};
}

Fiber fiber(const Poset& p, std::string_view x) {
  p.index_of(x);
  return fiber(tangent_bundle(p), x);
}

Fiber fiber_direct(const Poset& p, Index x) {
  std::vector<Index> coordinate = star_indices(p, x);
  const std::size_t m = coordinate.size() + 1;
  std::vector<std::string> ids;
  std::vector<Label> labels(m, Label::None);
  for (std::size_t i = 0; i < coordinate.size(); ++i) {
    ids.push_back(pair_id(p.id(x), p.id(coordinate[i])));
    if (coordinate[i] == x) labels[i] = Label::Zero;
  }
  ids.push_back(infinity_id(p.id(x)));
  labels.back() = Label::Infinity;
  BitMatrix up(m);
  for (std::size_t a = 0; a < coordinate.size(); ++a) {
    for (std::size_t b = 0; b < coordinate.size(); ++b)
      if (p.leq(coordinate[a], coordinate[b])) up.set(a, b);
    if (!p.leq(x, coordinate[a])) up.set(a, m - 1);  // y ∈ Link x
  }
  up.set(m - 1, m - 1);
  coordinate.push_back(kInfinityIndex);
  return {Poset::from_order(std::move(ids), std::move(up), std::move(labels)), p.id(x), std::move(coordinate)};
}

PosetMap gauss_morphism(const Poset& p, const Fiber& from, const Fiber& to) {
  const Index x1 = p.index_of(from.basepoint);
  const Index x2 = p.index_of(to.basepoint);
  if (!p.leq(x1, x2)) throw Error(ErrorKind::NotComparable, from.basepoint + " is not below " + to.basepoint);
  const auto& k = kernels::ops();
  std::vector<Index> position(p.size(), kInfinityIndex);
  Index inf = kInfinityIndex;
  for (Index i = 0; i < to.coordinate.size(); ++i) {
    if (to.coordinate[i] == kInfinityIndex)
      inf = i;
    else
      position[to.coordinate[i]] = i;
  }
  std::vector<Index> assignment(from.coordinate.size());
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const Index y = from.coordinate[i];
    const bool in_star = y != kInfinityIndex && k.intersects(p.up_row(x2), p.up_row(y));
    assignment[i] = in_star ? position[y] : inf;
  }
  PosetMap f(from.poset, to.poset, std::move(assignment), Preserves::Infinity);
  if (auto c = validate_map(f); !c.is_verified())
    throw Error(ErrorKind::FunctorialityFailure,
                "Gauss morphism " + from.basepoint + " <= " + to.basepoint + " invalid: " + c.summary());
  return f;
}

PosetMap gauss_morphism(const Poset& p, std::string_view x1, std::string_view x2) {
  const Index a = p.index_of(x1);
  const Index b = p.index_of(x2);
  if (!p.leq(a, b)) throw Error(ErrorKind::NotComparable, std::string(x1) + " is not below " + std::string(x2));
  return gauss_morphism(p, fiber_direct(p, a), fiber_direct(p, b));
}

PosetMap GaussFunctor::morphism(Index x1, Index x2) const {
  return gauss_morphism(base, objects.at(x1), objects.at(x2));
}

GaussFunctor gauss_functor(const Poset& p) {
  GaussFunctor g{p, {}, {}};
  g.objects.reserve(p.size());
  for (Index x = 0; x < p.size(); ++x) g.objects.push_back(fiber_direct(p, x));
  for (const auto& [lo, hi] : p.covers()) g.arrows.emplace(std::pair{lo, hi}, gauss_morphism(p, g.objects[lo], g.objects[hi]));
  for (const auto& [key, first] : g.arrows) {
    const Index mid = key.second;
    for (Index top : p.upper_covers(mid)) {
      const PosetMap composite = first.then(g.arrows.at({mid, top}));
      if (!(composite == g.morphism(key.first, top)))
        throw Error(ErrorKind::FunctorialityFailure,
                    "composite along " + p.id(key.first) + " < " + p.id(mid) + " < " + p.id(top) + " differs from the direct morphism");
    }
  }
  return g;
}

}  // namespace tp
