#include "tangent_poset/verify.hpp"

#include <sstream>
#include <unordered_map>

#include "tangent_poset/complex.hpp"
#include "tangent_poset/error.hpp"
#include "tangent_poset/hocolim.hpp"
#include "tangent_poset/homology.hpp"
#include "tangent_poset/parallel.hpp"
#include "tangent_poset/tangent.hpp"

namespace tp {

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.result});
  for (const auto& n : other.notes)
    if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
}

Verdict VerificationReport::verdict() const {
  Verdict v = Verdict::Verified;
  for (const auto& c : checks) v = meet(v, c.result.verdict);
  return v;
}

Certainty VerificationReport::overall() const {
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& c : checks) ++counts[static_cast<int>(c.result.verdict)];
  Certainty out{verdict(), {}};
  out.note(subject + ": " + std::to_string(counts[2]) + " verified, " + std::to_string(counts[1]) + " unknown, " +
           std::to_string(counts[0]) + " refuted");
  for (const auto& c : checks)
    if (c.result.verdict == out.verdict && !out.is_verified()) {
      out.note("first " + std::string(to_string(out.verdict)) + " check: " + c.name);
      for (const auto& e : c.result.evidence) out.note(e);
      break;
    }
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << subject << "\n";
  std::size_t width = 5;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  for (const auto& c : checks) {
    os << "  " << c.name << std::string(width - c.name.size() + 2, ' ') << to_string(c.result.verdict);
    if (!c.result.evidence.empty()) os << "  " << c.result.evidence.front();
    os << "\n";
    for (std::size_t i = 1; i < c.result.evidence.size(); ++i)
      os << "  " << std::string(width + 2, ' ') << "        " << c.result.evidence[i] << "\n";
  }
  for (const auto& n : notes) os << "  note: " << n << "\n";
  os << "overall: " << to_string(verdict()) << "\n";
  return os.str();
}

namespace {

Certainty purity(const Poset& p, const RankInfo& r) {
  if (r.pure) return Certainty::verified("pure: every maximal chain has length " + std::to_string(r.height));
  for (Index m : p.maximal_elements())
    if (r.rank[m] != r.height)
      return Certainty::refuted("not pure: maximal element " + p.id(m) + " has rank " + std::to_string(r.rank[m]) +
                                " below height " + std::to_string(r.height))
          .note("witness " + p.id(m));
  const Index a = r.ambiguous.front();
  return Certainty::refuted("not pure: maximal chains below " + p.id(a) + " differ in length")
      .note("witness " + p.id(a));
}

std::string rank_note(const Poset& p, const RankInfo& r) {
  std::string s = "longest-chain rank is a convention at";
  for (std::size_t i = 0; i < r.ambiguous.size() && i < 5; ++i) s += " " + p.id(r.ambiguous[i]);
  if (r.ambiguous.size() > 5) s += " ...";
  return s;
}

bool contained_in(const SimplicialComplex& small, const SimplicialComplex& big, std::string* missing) {
  std::unordered_map<std::string, Vertex> where;
  for (Vertex v = 0; v < big.num_vertices(); ++v) where.emplace(big.label(v), v);
  for (const auto& f : small.facets()) {
    Simplex s;
    bool ok = true;
    for (Vertex v : f) {
      auto it = where.find(small.label(v));
      if (it == where.end()) {
        ok = false;
        break;
      }
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    if (!ok || !big.contains(s)) {
      *missing = "{";
      for (std::size_t i = 0; i < f.size(); ++i) *missing += (i ? "," : "") + small.label(f[i]);
      *missing += "}";
      return false;
    }
  }
  return true;
}

Index require_infinity(const Poset& q, const char* what) {
  const auto inf = q.infinity();
  if (!inf) throw Error(ErrorKind::MissingLabel, std::string(what) + " has no INFINITY element");
  return *inf;
}

}  // namespace

VerificationReport is_abstract_ball_complex(const Poset& p, const OracleBudget& budget) {
  VerificationReport rep{"abstract PL-ball complex on " + std::to_string(p.size()) + " elements", {}, {}};
  const RankInfo r = rank_info(p);
  auto checks = parallel_map(p.size(), [&](std::size_t i) {
    const auto x = static_cast<Index>(i);
    const Poset below = p.induced(ideal_indices(p, x, true));
    Certainty c = is_pl_sphere(order_complex(below), r.rank[x] - 1, budget);
    if (c.is_refuted()) c.note("witness element " + p.id(x));
    return Check{"B P<" + p.id(x) + " is a PL " + std::to_string(r.rank[x] - 1) + "-sphere", std::move(c)};
  });
  rep.checks = std::move(checks);
  if (!r.ambiguous.empty()) rep.notes.push_back(rank_note(p, r));
  return rep;
}

VerificationReport is_abstract_manifold(const Poset& p, const OracleBudget& budget) {
  VerificationReport rep{"abstract manifold on " + std::to_string(p.size()) + " elements", {}, {}};
  const RankInfo r = rank_info(p);
  rep.add("pure", purity(p, r));
  rep.absorb(is_abstract_ball_complex(p, budget));
  rep.absorb(is_abstract_ball_complex(opposite(p), budget), "opposite: ");
  return rep;
}

VerificationReport is_strict(const Poset& p, int n, const OracleBudget& budget) {
  VerificationReport rep{"strict abstract " + std::to_string(n) + "-manifold on " + std::to_string(p.size()) +
                             " elements",
                         {},
                         {kStrictnessNote}};
  auto checks = parallel_map(p.size(), [&](std::size_t i) {
    const auto x = static_cast<Index>(i);
    const SimplicialComplex st = order_complex(p.induced(star_indices(p, x)));
    const SimplicialComplex lk = order_complex(p.induced(link_indices(p, x)));
    Certainty ball = is_pl_ball(st, n, budget);
    Certainty sphere = is_pl_sphere(lk, n - 1, budget);
    Certainty c{meet(ball.verdict, sphere.verdict), {}};
    c.note("star: " + ball.summary());
    c.note("link: " + sphere.summary());
    std::string missing;
    if (!contained_in(lk, boundary_complex(st), &missing)) {
      c.verdict = Verdict::Refuted;
      c.note("link simplex " + missing + " is not on the boundary of the star");
    }
    if (c.is_refuted()) c.note("witness element " + p.id(x));
    return Check{"(Star, Link) of " + p.id(x), std::move(c)};
  });
  rep.checks = std::move(checks);
  return rep;
}

VerificationReport is_abstract_sphere(const Poset& p, int n, const OracleBudget& budget) {
  VerificationReport rep{"abstract " + std::to_string(n) + "-sphere on " + std::to_string(p.size()) + " elements",
                         {},
                         {}};
  rep.absorb(is_abstract_manifold(p, budget));
  rep.add("B P is a PL " + std::to_string(n) + "-sphere", is_pl_sphere(order_complex(p), n, budget));
  return rep;
}

VerificationReport is_rn_object(const Poset& q, int n, const OracleBudget& budget) {
  const Index inf = require_infinity(q, "R_n object");
  const Poset plain = q.without_labels();
  VerificationReport rep{"R_" + std::to_string(n) + " object on " + std::to_string(q.size()) + " elements", {}, {}};
  rep.absorb(is_abstract_sphere(plain, n, budget));
  const RankInfo r = rank_info(plain);
  if (r.rank[inf] == r.height)
    rep.add("infinity has maximal rank", Certainty::verified("rank of " + q.id(inf) + " is " +
                                                             std::to_string(r.rank[inf]) + " = height"));
  else
    rep.add("infinity has maximal rank",
            Certainty::refuted("rank of " + q.id(inf) + " is " + std::to_string(r.rank[inf]) + " < height " +
                               std::to_string(r.height))
                .note("witness element " + q.id(inf)));
  return rep;
}

VerificationReport is_aggregation(const PosetMap& f, int n, const OracleBudget& budget) {
  const Poset& src = f.source();
  const Poset& dst = f.target();
  VerificationReport rep{"aggregation of dimension " + std::to_string(n) + " from " + std::to_string(src.size()) +
                             " to " + std::to_string(dst.size()) + " elements",
                         {},
                         {}};
  rep.add("monotone", validate_map(PosetMap(src, dst, {f.assignment().begin(), f.assignment().end()})));
  if (!rep.checks.back().result.is_verified()) return rep;
  const RankInfo r = rank_info(dst);
  auto checks = parallel_map(dst.size(), [&](std::size_t i) {
    const auto o = static_cast<Index>(i);
    std::vector<Index> pre;
    for (Index x = 0; x < src.size(); ++x)
      if (dst.leq(f(x), o)) pre.push_back(x);
    const int k = r.rank[o];
    Certainty c = is_pl_ball(order_complex(src.induced(pre)), k, budget);
    if (c.is_refuted()) c.note("witness element " + dst.id(o));
    return Check{"preimage of the " + std::to_string(k) + "-ball below " + dst.id(o), std::move(c)};
  });
  for (auto& c : checks) rep.checks.push_back(std::move(c));
  if (!r.ambiguous.empty()) rep.notes.push_back(rank_note(dst, r));
  return rep;
}

VerificationReport is_rn_morphism(const PosetMap& f, int n, const OracleBudget& budget) {
  const Index si = require_infinity(f.source(), "source");
  const Index ti = require_infinity(f.target(), "target");
  VerificationReport rep{"R_" + std::to_string(n) + " morphism", {}, {}};
  if (f(si) == ti)
    rep.add("infinity to infinity", Certainty::verified(f.source().id(si) + " -> " + f.target().id(ti)));
  else
    rep.add("infinity to infinity", Certainty::refuted(f.source().id(si) + " -> " + f.target().id(f(si)) +
                                                       ", not " + f.target().id(ti))
                                        .note("witness element " + f.source().id(si)));
  rep.absorb(is_aggregation(f, n, budget));
  return rep;
}

VerificationReport verify_theorem1(const Poset& p, int n, const OracleBudget& budget) {
  VerificationReport rep{"Theorem 1 items 1-2, n = " + std::to_string(n) + ", on " + std::to_string(p.size()) +
                             " elements",
                         {},
                         {kStrictnessNote, kNotCheckableNote}};
  rep.add("precondition: strict (approximate)", is_strict(p, n, budget).overall());
  rep.add("hocolim identity", tangent_identity_check(p));

  GaussFunctor g;
  try {
    g = gauss_functor(p);
  } catch (const Error& e) {
    rep.add("item 1: Gauss functor", Certainty::refuted(e.what()));
    return rep;
  }
  auto fibers = parallel_map(p.size(), [&](std::size_t i) {
    const auto x = static_cast<Index>(i);
    return Check{"item 1: fiber over " + p.id(x) + " in R_" + std::to_string(n),
                 is_rn_object(g.objects[x].poset, n, budget).overall()};
  });
  for (auto& c : fibers) rep.checks.push_back(std::move(c));
  std::vector<std::pair<Index, Index>> covers;
  for (const auto& [key, arrow] : g.arrows) covers.push_back(key);
  auto arrows = parallel_map(covers.size(), [&](std::size_t i) {
    const auto [lo, hi] = covers[i];
    return Check{"item 1: arrow " + p.id(lo) + " < " + p.id(hi) + " in R_" + std::to_string(n),
                 is_rn_morphism(g.arrows.at(covers[i]), n, budget).overall()};
  });
  for (auto& c : arrows) rep.checks.push_back(std::move(c));

  const TangentBundle tb = tangent_bundle(p);
  const SimplicialComplex k = order_complex(tb.total);
  rep.add("item 2: closed pseudomanifold of dimension " + std::to_string(2 * n), is_closed_pseudomanifold(k, 2 * n));
  auto links = parallel_map(k.num_vertices(), [&](std::size_t v) {
    return is_pl_sphere(k.link({static_cast<Vertex>(v)}), 2 * n - 1, budget);
  });
  std::size_t unknown = 0;
  Certainty item2 = Certainty::verified("item 2: all " + std::to_string(k.num_vertices()) + " vertex links are PL " +
                                        std::to_string(2 * n - 1) + "-spheres");
  for (Vertex v = 0; v < links.size(); ++v) {
    if (links[v].is_refuted()) {
      item2 = Certainty::refuted("link of " + k.label(v) + ": " + links[v].summary())
                  .note("witness element " + k.label(v));
      break;
    }
    if (links[v].is_unknown()) ++unknown;
  }
  if (!item2.is_refuted() && unknown > 0)
    item2 = Certainty::unknown("verified except " + std::to_string(unknown) + " unknown links of " +
                               std::to_string(k.num_vertices()));
  rep.add("item 2: vertex links are PL " + std::to_string(2 * n - 1) + "-spheres", std::move(item2));
  const auto h = homology(k);
  rep.notes.push_back("total space order complex: " + h.to_string() + ", chi = " +
                      std::to_string(euler_characteristic(k)));
  return rep;
}

}  // namespace tp
