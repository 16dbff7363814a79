#include "tangent_poset/hocolim.hpp"

#include <algorithm>

#include "tangent_poset/error.hpp"

namespace tp {
namespace {

constexpr Index kNone = ~Index{0};

std::string path_string(const Poset& base, const std::vector<Index>& pred, Index x0, Index z) {
  std::vector<Index> chain{z};
  while (chain.back() != x0) chain.push_back(pred[chain.back()]);
  std::string s;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) s += (s.empty() ? "" : " < ") + base.id(*it);
  return s;
}

void check_shape(const PosetFunctor& f) {
  if (f.objects.size() != f.base.size())
    throw Error(ErrorKind::InvalidArgument, "functor needs one object per base element");
  for (const auto& [lo, hi] : f.base.covers()) {
    auto it = f.arrows.find({lo, hi});
    if (it == f.arrows.end())
      throw Error(ErrorKind::InvalidArgument, "no arrow on cover " + f.base.id(lo) + " < " + f.base.id(hi));
    if (!(it->second.source() == f.objects[lo]) || !(it->second.target() == f.objects[hi]))
      throw Error(ErrorKind::InvalidArgument,
                  "arrow on " + f.base.id(lo) + " < " + f.base.id(hi) + " does not run between its objects");
  }
  if (f.arrows.size() != f.base.covers().size())
    throw Error(ErrorKind::InvalidArgument, "arrows given on pairs that are not covers");
}

}  // namespace

PosetFunctor as_poset_functor(const GaussFunctor& g) {
  PosetFunctor f{g.base, {}, g.arrows};
  f.objects.reserve(g.objects.size());
  for (const auto& o : g.objects) f.objects.push_back(o.poset);
  return f;
}

std::vector<std::vector<Index>> transports_from(const PosetFunctor& f, Index x0) {
  const Poset& base = f.base;
  const auto& k = kernels::ops();
  // Up-set of x0 in a linear extension: down-set sizes grow along the order.
  std::vector<Index> order;
  for_each_bit(base.up_row(x0), [&](std::size_t z) { order.push_back(static_cast<Index>(z)); });
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return k.popcount(base.down_row(a)) < k.popcount(base.down_row(b)); });

  std::vector<std::vector<Index>> t(base.size());
  std::vector<Index> pred(base.size(), kNone);
  t[x0].resize(f.objects[x0].size());
  for (Index y = 0; y < t[x0].size(); ++y) t[x0][y] = y;
  std::vector<Index> candidate;
  for (Index z : order) {
    if (z == x0) continue;
    for (Index c : base.lower_covers(z)) {
      if (!base.leq(x0, c)) continue;
      const PosetMap& arrow = f.arrows.at({c, z});
      candidate.resize(t[c].size());
      for (std::size_t y = 0; y < candidate.size(); ++y) candidate[y] = arrow(t[c][y]);
      if (pred[z] == kNone) {
        t[z] = candidate;
        pred[z] = c;
      } else if (candidate != t[z]) {
        std::vector<Index> other = pred;
        other[z] = c;
        throw Error(ErrorKind::FunctorLawViolation, "paths " + path_string(base, pred, x0, z) + " and " +
                                                        path_string(base, other, x0, z) + " compose differently");
      }
    }
  }
  return t;
}

Certainty check_functor_law(const PosetFunctor& f) {
  try {
    check_shape(f);
    for (Index x = 0; x < f.base.size(); ++x) transports_from(f, x);
  } catch (const Error& e) {
    return Certainty::refuted(std::string("functor law: ") + e.what());
  }
  return Certainty::verified("functor law: every cover path composes to the same map (" +
                             std::to_string(f.arrows.size()) + " arrows)");
}

Hocolim hocolim(const PosetFunctor& f) {
  check_shape(f);
  const Poset& base = f.base;
  std::vector<Index> offset(base.size() + 1, 0);
  for (Index x = 0; x < base.size(); ++x) offset[x + 1] = offset[x] + static_cast<Index>(f.objects[x].size());
  const Index n = offset.back();

  std::vector<std::string> ids;
  std::vector<Index> proj;
  ids.reserve(n);
  for (Index x = 0; x < base.size(); ++x)
    for (Index y = 0; y < f.objects[x].size(); ++y) {
      ids.push_back(pair_id(base.id(x), f.objects[x].id(y)));
      proj.push_back(x);
    }

  BitMatrix up(n);
  for (Index x0 = 0; x0 < base.size(); ++x0) {
    const auto t = transports_from(f, x0);
    for_each_bit(base.up_row(x0), [&](std::size_t zs) {
      const auto z = static_cast<Index>(zs);
      const Poset& target = f.objects[z];
      for (Index y0 = 0; y0 < t[x0].size(); ++y0)
        for_each_bit(target.up_row(t[z][y0]), [&](std::size_t y1) { up.set(offset[x0] + y0, offset[z] + y1); });
    });
  }
  if (auto w = transitivity_witness(up))
    throw Error(ErrorKind::FunctorLawViolation,
                "hocolim order not transitive at " + ids[(*w)[0]] + " <= " + ids[(*w)[1]] + " <= " + ids[(*w)[2]]);
  Poset total = Poset::from_order(std::move(ids), std::move(up));
  offset.pop_back();
  PosetMap projection(total, base, std::move(proj));
  return {std::move(total), std::move(projection), std::move(offset)};
}

HocolimWithSections hocolim_with_sections(const PosetFunctor& f) {
  for (Index x = 0; x < f.objects.size(); ++x)
    if (!f.objects[x].zero() || !f.objects[x].infinity())
      throw Error(ErrorKind::MissingLabel, "object over " + f.base.id(x) + " lacks a ZERO or INFINITY element");
  for (const auto& [cover, arrow] : f.arrows) {
    const Poset& s = arrow.source();
    const Poset& t = arrow.target();
    if (!s.infinity() || !t.infinity() || arrow(*s.infinity()) != *t.infinity())
      throw Error(ErrorKind::MissingLabel, "arrow on " + f.base.id(cover.first) + " < " + f.base.id(cover.second) +
                                               " does not send INFINITY to INFINITY");
  }
  Hocolim h = hocolim(f);
  std::vector<Index> s0(f.base.size());
  std::vector<Index> sinf(f.base.size());
  for (Index x = 0; x < f.base.size(); ++x) {
    s0[x] = h.offset[x] + *f.objects[x].zero();
    sinf[x] = h.offset[x] + *f.objects[x].infinity();
  }
  PosetMap section0(f.base, h.total, std::move(s0));
  PosetMap section_inf(f.base, h.total, std::move(sinf));
  for (const auto* s : {&section0, &section_inf})
    if (auto c = validate_map(*s); !c.is_verified())
      throw Error(ErrorKind::InvalidArgument, "section is not monotone: " + c.summary());
  return {std::move(h), std::move(section0), std::move(section_inf)};
}

Certainty tangent_identity_check(const Poset& p) {
  try {
    const TangentBundle tb = tangent_bundle(p);
    const GaussFunctor g = gauss_functor(p);
    const HocolimWithSections hs = hocolim_with_sections(as_poset_functor(g));
    const Poset& h = hs.hocolim.total;
    const Poset& e = tb.total;
    if (h.size() != e.size())
      return Certainty::refuted("identity: hocolim has " + std::to_string(h.size()) + " elements, total space " +
                                std::to_string(e.size()));
    // (x, (x,y)) -> (x,y): the second coordinate of a hocolim element is the
    // fiber element's own identifier.
    std::vector<Index> phi(h.size());
    std::vector<char> hit(e.size(), 0);
    for (Index x = 0; x < p.size(); ++x) {
      const Poset& obj = g.objects[x].poset;
      for (Index y = 0; y < obj.size(); ++y) {
        const Index a = hs.hocolim.offset[x] + y;
        const auto b = e.find(obj.id(y));
        if (!b) return Certainty::refuted("identity: " + h.id(a) + " has no counterpart " + obj.id(y));
        if (hit[*b]++) return Certainty::refuted("identity: " + obj.id(y) + " is hit twice");
        if (tb.projection(*b) != hs.hocolim.projection(a))
          return Certainty::refuted("identity: projections differ at " + h.id(a)).note("witness " + h.id(a));
        phi[a] = *b;
      }
    }
    for (Index a = 0; a < h.size(); ++a)
      for (Index b = 0; b < h.size(); ++b)
        if (h.leq(a, b) != e.leq(phi[a], phi[b]))
          return Certainty::refuted("identity: order differs on " + h.id(a) + " <= " + h.id(b) + " (hocolim " +
                                    (h.leq(a, b) ? "yes" : "no") + ", total space " +
                                    (e.leq(phi[a], phi[b]) ? "yes" : "no") + ")")
              .note("witness (" + h.id(a) + "," + h.id(b) + ")");
    for (Index x = 0; x < p.size(); ++x) {
      if (phi[hs.section0(x)] != tb.section0(x))
        return Certainty::refuted("identity: zero sections differ over " + p.id(x)).note("witness " + p.id(x));
      if (phi[hs.section_inf(x)] != tb.section_inf(x))
        return Certainty::refuted("identity: infinity sections differ over " + p.id(x)).note("witness " + p.id(x));
    }
    return Certainty::verified("identity: order isomorphism on " + std::to_string(h.size()) + " elements, " +
                               std::to_string(h.comparable_pairs()) +
                               " comparable pairs, projections and both sections commute");
  } catch (const Error& err) {
    return Certainty::refuted(std::string("identity: construction failed: ") + err.what());
  }
}

}  // namespace tp
