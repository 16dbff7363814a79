#include "tangent_poset/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "tangent_poset/error.hpp"

namespace tp {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
    case ErrorKind::DuplicateIdentifier: return "DuplicateIdentifier";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::IllegalMove: return "IllegalMove";
    case ErrorKind::FunctorLawViolation: return "FunctorLawViolation";
    case ErrorKind::FunctorialityFailure: return "FunctorialityFailure";
    case ErrorKind::MissingLabel: return "MissingLabel";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Refuted: return "refuted";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::string Certainty::summary() const {
  std::string out;
  for (const auto& e : evidence) {
    if (!out.empty()) out += "; ";
    out += e;
  }
  return out;
}

const char* to_string(Label l) noexcept {
  switch (l) {
    case Label::None: return "none";
    case Label::Zero: return "0";
    case Label::Infinity: return "infinity";
  }
  return "none";
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r) for_each_bit(row(r), [&](std::size_t c) { t.set(c, r); });
  return t;
}

struct Poset::Data {
  std::vector<std::string> ids;
  std::unordered_map<std::string, Index> index;
  std::vector<Label> labels;
  BitMatrix up;
  BitMatrix down;
  std::vector<std::vector<Index>> upper;
  std::vector<std::vector<Index>> lower;
  std::size_t num_covers = 0;
};

namespace {

std::vector<Label> normalize_labels(std::vector<Label> labels, std::size_t n) {
  if (labels.empty()) labels.assign(n, Label::None);
  if (labels.size() != n) throw Error(ErrorKind::InvalidArgument, "label count does not match element count");
  int zeros = 0;
  int infs = 0;
  for (Label l : labels) {
    zeros += l == Label::Zero;
    infs += l == Label::Infinity;
  }
  if (zeros > 1 || infs > 1)
    throw Error(ErrorKind::InvalidArgument, "at most one element may carry each of the 0 and infinity labels");
  return labels;
}

std::unordered_map<std::string, Index> make_index(const std::vector<std::string>& ids) {
  std::unordered_map<std::string, Index> index;
  index.reserve(ids.size());
  for (Index i = 0; i < ids.size(); ++i)
    if (!index.emplace(ids[i], i).second) throw Error(ErrorKind::DuplicateIdentifier, ids[i]);
  return index;
}

}  // namespace

Poset::Poset() : d_(std::make_shared<Data>()) {}
Poset::Poset(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

Poset Poset::build(std::vector<std::string> elements, BitMatrix up, std::vector<Label> labels) {
  const auto& k = kernels::ops();
  auto d = std::make_shared<Data>();
  const std::size_t n = elements.size();
  d->labels = normalize_labels(std::move(labels), n);
  d->index = make_index(elements);
  d->ids = std::move(elements);
  d->down = up.transposed();
  d->up = std::move(up);
  d->upper.resize(n);
  d->lower.resize(n);
  // y covers x iff the interval [x, y] has exactly two elements.
  for (Index x = 0; x < n; ++x) {
    const auto ux = d->up.row(x);
    for_each_bit(ux, [&](std::size_t y) {
      if (y == x) return;
      if (k.and_popcount(ux, d->down.row(y)) == 2) {
        d->upper[x].push_back(static_cast<Index>(y));
        d->lower[y].push_back(x);
        ++d->num_covers;
      }
    });
  }
  return Poset(std::move(d));
}

Poset Poset::from_order(std::vector<std::string> elements, BitMatrix up, std::vector<Label> labels) {
  const std::size_t n = elements.size();
  if (up.size() != n) throw Error(ErrorKind::InvalidArgument, "relation size does not match element count");
  for (Index x = 0; x < n; ++x) {
    if (!up.test(x, x)) throw Error(ErrorKind::InvalidArgument, "relation not reflexive at " + elements[x]);
    for_each_bit(up.row(x), [&](std::size_t y) {
      if (y != x && up.test(y, x))
        throw Error(ErrorKind::CycleDetected, elements[x] + " and " + elements[y] + " are mutually below");
    });
  }
  if (auto w = transitivity_witness(up))
    throw Error(ErrorKind::InvalidArgument, "relation not transitive: " + elements[(*w)[0]] + " <= " +
                                                elements[(*w)[1]] + " <= " + elements[(*w)[2]]);
  return build(std::move(elements), std::move(up), std::move(labels));
}

Poset Poset::from_relation(std::vector<std::string> elements, BitMatrix relation, std::vector<Label> labels) {
  transitive_closure(relation);
  const std::size_t n = elements.size();
  for (Index x = 0; x < n; ++x)
    for_each_bit(relation.row(x), [&](std::size_t y) {
      if (y != x && relation.test(y, x))
        throw Error(ErrorKind::CycleDetected, elements[x] + " and " + elements[y] + " lie on a cycle");
    });
  return build(std::move(elements), std::move(relation), std::move(labels));
}

Poset Poset::from_covers(std::vector<std::string> elements,
                         std::span<const std::pair<std::string, std::string>> covers, std::vector<Label> labels) {
  const auto index = make_index(elements);
  const std::size_t n = elements.size();
  std::vector<std::vector<Index>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  auto lookup = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) throw Error(ErrorKind::UnknownIdentifier, s);
    return it->second;
  };
  for (const auto& [lo, hi] : covers) {
    const Index a = lookup(lo);
    const Index b = lookup(hi);
    if (a == b) throw Error(ErrorKind::CycleDetected, lo + " covers itself");
    succ[a].push_back(b);
    ++indegree[b];
  }
  // Kahn order; leftovers sit on a cycle.
  std::vector<Index> topo;
  topo.reserve(n);
  for (Index i = 0; i < n; ++i)
    if (indegree[i] == 0) topo.push_back(i);
  for (std::size_t head = 0; head < topo.size(); ++head)
    for (Index s : succ[topo[head]])
      if (--indegree[s] == 0) topo.push_back(s);
  if (topo.size() != n) {
    for (Index i = 0; i < n; ++i)
      if (indegree[i] != 0) throw Error(ErrorKind::CycleDetected, "cycle through " + elements[i]);
  }
  const auto& k = kernels::ops();
  BitMatrix up(n);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    const Index x = *it;
    up.set(x, x);
    for (Index s : succ[x]) k.or_into(up.row(x), up.row(s));
  }
  return build(std::move(elements), std::move(up), std::move(labels));
}

void transitive_closure(BitMatrix& r) {
  const auto& k = kernels::ops();
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      if (i != m && r.test(i, m)) k.or_into(r.row(i), r.row(m));
}

std::optional<std::array<Index, 3>> transitivity_witness(const BitMatrix& r) {
  const auto& k = kernels::ops();
  const std::size_t n = r.size();
  for (Index x = 0; x < n; ++x) {
    std::optional<std::array<Index, 3>> found;
    for_each_bit(r.row(x), [&](std::size_t y) {
      if (found || k.is_subset(r.row(y), r.row(x))) return;
      for_each_bit(r.row(y), [&](std::size_t z) {
        if (!found && !r.test(x, z)) found = std::array<Index, 3>{x, static_cast<Index>(y), static_cast<Index>(z)};
      });
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::size_t Poset::size() const noexcept { return d_->ids.size(); }
const std::string& Poset::id(Index i) const { return d_->ids.at(i); }
std::span<const std::string> Poset::ids() const noexcept { return d_->ids; }

std::optional<Index> Poset::find(std::string_view id) const {
  auto it = d_->index.find(std::string(id));
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

Index Poset::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw Error(ErrorKind::UnknownIdentifier, std::string(id));
}

bool Poset::leq(Index a, Index b) const noexcept { return d_->up.test(a, b); }
std::span<const Index> Poset::upper_covers(Index i) const { return d_->upper.at(i); }
std::span<const Index> Poset::lower_covers(Index i) const { return d_->lower.at(i); }
std::size_t Poset::num_covers() const noexcept { return d_->num_covers; }

std::vector<std::pair<Index, Index>> Poset::covers() const {
  std::vector<std::pair<Index, Index>> out;
  out.reserve(d_->num_covers);
  for (Index x = 0; x < size(); ++x)
    for (Index y : d_->upper[x]) out.emplace_back(x, y);
  return out;
}

std::span<const kernels::Word> Poset::up_row(Index i) const { return d_->up.row(i); }
std::span<const kernels::Word> Poset::down_row(Index i) const { return d_->down.row(i); }
const BitMatrix& Poset::up_matrix() const noexcept { return d_->up; }
const BitMatrix& Poset::down_matrix() const noexcept { return d_->down; }

Label Poset::label(Index i) const { return d_->labels.at(i); }
std::span<const Label> Poset::labels() const noexcept { return d_->labels; }

std::optional<Index> Poset::labelled(Label l) const {
  for (Index i = 0; i < size(); ++i)
    if (d_->labels[i] == l) return i;
  return std::nullopt;
}

Poset Poset::with_labels(std::vector<Label> labels) const {
  auto d = std::make_shared<Data>(*d_);
  d->labels = normalize_labels(std::move(labels), size());
  return Poset(std::move(d));
}

Poset Poset::forget(Label l) const {
  std::vector<Label> labels(d_->labels);
  for (auto& x : labels)
    if (x == l) x = Label::None;
  return with_labels(std::move(labels));
}

Poset Poset::induced(std::span<const Index> subset) const {
  std::vector<Index> keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  const std::size_t m = keep.size();
  std::vector<std::string> ids;
  std::vector<Label> labels;
  ids.reserve(m);
  labels.reserve(m);
  for (Index i : keep) {
    ids.push_back(id(i));
    labels.push_back(label(i));
  }
  BitMatrix up(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (leq(keep[a], keep[b])) up.set(a, b);
  return build(std::move(ids), std::move(up), std::move(labels));
}

std::size_t Poset::comparable_pairs() const {
  const auto& k = kernels::ops();
  std::size_t n = 0;
  for (Index i = 0; i < size(); ++i) n += k.popcount(d_->up.row(i));
  return n;
}

std::vector<Index> Poset::minimal_elements() const {
  std::vector<Index> out;
  for (Index i = 0; i < size(); ++i)
    if (d_->lower[i].empty()) out.push_back(i);
  return out;
}

std::vector<Index> Poset::maximal_elements() const {
  std::vector<Index> out;
  for (Index i = 0; i < size(); ++i)
    if (d_->upper[i].empty()) out.push_back(i);
  return out;
}

bool operator==(const Poset& a, const Poset& b) {
  return a.d_->ids == b.d_->ids && a.d_->labels == b.d_->labels && a.d_->up == b.d_->up;
}

std::vector<Index> star_indices(const Poset& p, Index x) {
  const auto& k = kernels::ops();
  std::vector<Index> out;
  const auto ux = p.up_row(x);
  for (Index y = 0; y < p.size(); ++y)
    if (k.intersects(ux, p.up_row(y))) out.push_back(y);
  return out;
}

std::vector<Index> link_indices(const Poset& p, Index x) {
  std::vector<Index> out;
  for (Index y : star_indices(p, x))
    if (!p.leq(x, y)) out.push_back(y);
  return out;
}

std::vector<Index> ideal_indices(const Poset& p, Index x, bool strict) {
  std::vector<Index> out;
  for_each_bit(p.down_row(x), [&](std::size_t y) {
    if (!strict || y != x) out.push_back(static_cast<Index>(y));
  });
  return out;
}

std::vector<Index> filter_indices(const Poset& p, Index x, bool strict) {
  std::vector<Index> out;
  for_each_bit(p.up_row(x), [&](std::size_t y) {
    if (!strict || y != x) out.push_back(static_cast<Index>(y));
  });
  return out;
}

Poset star(const Poset& p, std::string_view x) { return p.induced(star_indices(p, p.index_of(x))); }
Poset link(const Poset& p, std::string_view x) { return p.induced(link_indices(p, p.index_of(x))); }
Poset ideal(const Poset& p, std::string_view x, bool strict) {
  return p.induced(ideal_indices(p, p.index_of(x), strict));
}

Poset opposite(const Poset& p) {
  std::vector<std::string> ids(p.ids().begin(), p.ids().end());
  std::vector<Label> labels(p.labels().begin(), p.labels().end());
  return Poset::from_order(std::move(ids), p.down_matrix(), std::move(labels));
}

RankInfo rank_info(const Poset& p) {
  const std::size_t n = p.size();
  RankInfo info;
  info.rank.assign(n, 0);
  if (n == 0) return info;
  // Linear extension by number of elements below: x < y implies |down x| < |down y|.
  const auto& k = kernels::ops();
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::vector<std::size_t> below(n);
  for (Index i = 0; i < n; ++i) below[i] = k.popcount(p.down_row(i));
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return below[a] < below[b]; });

  std::vector<int> shortest(n, 0);
  for (Index x : order) {
    int lo = -1;
    int hi = -1;
    for (Index y : p.lower_covers(x)) {
      hi = std::max(hi, info.rank[y]);
      lo = lo < 0 ? shortest[y] : std::min(lo, shortest[y]);
    }
    info.rank[x] = hi + 1;
    shortest[x] = lo + 1;
    if (shortest[x] != info.rank[x]) info.ambiguous.push_back(x);
  }
  std::sort(info.ambiguous.begin(), info.ambiguous.end());
  // Pure iff every maximal element is reached only by chains of one common length.
  const auto maximal = p.maximal_elements();
  for (Index m : maximal) info.height = std::max(info.height, info.rank[m]);
  info.pure = std::all_of(maximal.begin(), maximal.end(),
                          [&](Index m) { return shortest[m] == info.height && info.rank[m] == info.height; });
  return info;
}

PosetMap::PosetMap(Poset source, Poset target, std::vector<Index> assignment, Preserves labels)
    : source_(std::move(source)),
      target_(std::move(target)),
      assignment_(std::move(assignment)),
      labels_(labels) {
  if (assignment_.size() != source_.size())
    throw Error(ErrorKind::InvalidArgument, "poset map assignment is not total on its source");
  for (Index v : assignment_)
    if (v >= target_.size()) throw Error(ErrorKind::InvalidArgument, "poset map assigns outside its target");
}

PosetMap PosetMap::from_ids(Poset source, Poset target,
                            std::span<const std::pair<std::string, std::string>> assignment,
                            Preserves labels) {
  constexpr Index kUnset = ~Index{0};
  std::vector<Index> a(source.size(), kUnset);
  for (const auto& [from, to] : assignment) a[source.index_of(from)] = target.index_of(to);
  for (Index i = 0; i < a.size(); ++i)
    if (a[i] == kUnset) throw Error(ErrorKind::InvalidArgument, "no image for " + source.id(i));
  return PosetMap(std::move(source), std::move(target), std::move(a), labels);
}

PosetMap PosetMap::identity(const Poset& p, Preserves labels) {
  std::vector<Index> a(p.size());
  std::iota(a.begin(), a.end(), Index{0});
  return PosetMap(p, p, std::move(a), labels);
}

const std::string& PosetMap::operator()(std::string_view x) const {
  return target_.id(assignment_.at(source_.index_of(x)));
}

PosetMap PosetMap::then(const PosetMap& g) const {
  if (!(target_ == g.source_)) throw Error(ErrorKind::InvalidArgument, "maps are not composable");
  std::vector<Index> a(assignment_.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = g.assignment_[assignment_[i]];
  return PosetMap(source_, g.target_, std::move(a), labels_ & g.labels_);
}

bool operator==(const PosetMap& a, const PosetMap& b) {
  return a.assignment_ == b.assignment_ && a.source_ == b.source_ && a.target_ == b.target_;
}

Certainty validate_map(const PosetMap& f) {
  const Poset& s = f.source();
  const Poset& t = f.target();
  for (Index x = 0; x < s.size(); ++x) {
    std::optional<Index> bad;
    for_each_bit(s.up_row(x), [&](std::size_t y) {
      if (!bad && !t.leq(f(x), f(static_cast<Index>(y)))) bad = static_cast<Index>(y);
    });
    if (bad)
      return Certainty::refuted("not monotone: " + s.id(x) + " <= " + s.id(*bad) + " but " + t.id(f(x)) +
                                " !<= " + t.id(f(*bad)))
          .note("witness (" + s.id(x) + "," + s.id(*bad) + ")");
  }
  for (Label l : {Label::Zero, Label::Infinity}) {
    if (!preserves(f.labels(), l)) continue;
    const auto src = s.labelled(l);
    if (!src) continue;
    const auto dst = t.labelled(l);
    if (!dst || f(*src) != *dst)
      return Certainty::refuted(std::string("label ") + to_string(l) + " on " + s.id(*src) +
                                " is not sent to the equally labelled element")
          .note("witness " + s.id(*src));
  }
  return Certainty::verified("monotone on " + std::to_string(s.comparable_pairs()) + " comparable pairs" +
                             (f.labels() != Preserves::Nothing ? ", labels preserved" : ""));
}

}  // namespace tp
