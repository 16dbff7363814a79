#include "tangent_poset/coloring.hpp"

#include "tangent_poset/complex.hpp"
#include "tangent_poset/error.hpp"
#include "tangent_poset/homology.hpp"
#include "tangent_poset/parallel.hpp"

namespace tp {

Coloring gauss_coloring(const Poset& p, int n) {
  const PosetFunctor f = as_poset_functor(gauss_functor(p));
  return {f.base, f.objects, f.arrows, n};
}

VerificationReport validate_coloring(const Coloring& c, const OracleBudget& budget) {
  VerificationReport rep{"R_" + std::to_string(c.n) + " coloring over " + std::to_string(c.base.size()) +
                             " base elements",
                         {},
                         {}};
  rep.add("functor law", check_functor_law(c.functor()));
  auto objects = parallel_map(c.objects.size(), [&](std::size_t i) {
    Certainty r;
    try {
      r = is_rn_object(c.objects[i], c.n, budget).overall();
    } catch (const Error& e) {
      r = Certainty::refuted(e.what()).note("witness element " + c.base.id(static_cast<Index>(i)));
    }
    return Check{"object over " + c.base.id(static_cast<Index>(i)) + " in R_" + std::to_string(c.n), std::move(r)};
  });
  for (auto& ch : objects) rep.checks.push_back(std::move(ch));
  std::vector<std::pair<Index, Index>> keys;
  for (const auto& [key, arrow] : c.arrows) keys.push_back(key);
  auto arrows = parallel_map(keys.size(), [&](std::size_t i) {
    const auto [lo, hi] = keys[i];
    const std::string name = "arrow " + c.base.id(lo) + " < " + c.base.id(hi) + " in R_" + std::to_string(c.n);
    Certainty r;
    try {
      r = is_rn_morphism(c.arrows.at(keys[i]), c.n, budget).overall();
    } catch (const Error& e) {
      r = Certainty::refuted(e.what());
    }
    if (r.is_refuted()) r.note("witness cover " + c.base.id(lo) + " < " + c.base.id(hi));
    return Check{name, std::move(r)};
  });
  for (auto& ch : arrows) rep.checks.push_back(std::move(ch));
  return rep;
}

ColoringTotal coloring_total_space(const Coloring& c, const OracleBudget& budget) {
  Hocolim h = hocolim(c.functor());
  VerificationReport rep{"total space of the R_" + std::to_string(c.n) + " coloring, " +
                             std::to_string(h.total.size()) + " elements",
                         {},
                         {}};
  for (Index x = 0; x < c.base.size(); ++x) {
    const Poset& obj = c.objects[x];
    const Index off = h.offset[x];
    Certainty r = Certainty::verified("fiber over " + c.base.id(x) + " is order-isomorphic to its object (" +
                                      std::to_string(obj.size()) + " elements)");
    std::size_t in_fiber = 0;
    for (Index e = 0; e < h.total.size(); ++e) in_fiber += h.projection(e) == x;
    if (in_fiber != obj.size()) r = Certainty::refuted("fiber over " + c.base.id(x) + " has the wrong size");
    for (Index a = 0; a < obj.size() && r.is_verified(); ++a)
      for (Index b = 0; b < obj.size(); ++b)
        if (h.total.leq(off + a, off + b) != obj.leq(a, b)) {
          r = Certainty::refuted("fiber over " + c.base.id(x) + " differs on " + obj.id(a) + " <= " + obj.id(b))
                  .note("witness (" + obj.id(a) + "," + obj.id(b) + ")");
          break;
        }
    rep.add("fiber over " + c.base.id(x), std::move(r));
  }
  const RankInfo r = rank_info(c.base);
  const int m = r.height;
  if (m >= 0 && r.pure && is_abstract_manifold(c.base, budget).verdict() == Verdict::Verified &&
      is_strict(c.base, m, budget).verdict() == Verdict::Verified) {
    const SimplicialComplex k = order_complex(h.total);
    rep.add("total order complex is a closed " + std::to_string(m + c.n) + "-pseudomanifold",
            is_closed_pseudomanifold(k, m + c.n));
    rep.notes.push_back("total order complex: " + homology(k).to_string());
  } else {
    rep.notes.push_back("base is not a verified strict abstract manifold; pseudomanifold check skipped");
  }
  return {std::move(h), std::move(rep)};
}

}  // namespace tp
