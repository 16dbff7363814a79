#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tangent_poset/bit_matrix.hpp"
#include "tangent_poset/certainty.hpp"

namespace tp {

using Index = std::uint32_t;

/// Marks carried by distinguished elements of labelled posets.
enum class Label : std::uint8_t { None, Zero, Infinity };

const char* to_string(Label l) noexcept;

/// Finite partial order on opaque string identifiers.
///
/// The order is stored twice: as its Hasse diagram (upper/lower covers) and
/// as dense reflexive-transitive reachability rows, so comparisons are O(1)
/// and set queries reduce to word-parallel bit operations. Values are
/// immutable and cheap to copy (shared storage).
class Poset {
public:
  /// The empty poset.
  Poset();

  /// Builds the order generated by `covers`. Implied pairs are dropped, so the
  /// stored cover set is always the Hasse diagram. Throws CycleDetected,
  /// UnknownIdentifier or DuplicateIdentifier.
  static Poset from_covers(std::vector<std::string> elements,
                           std::span<const std::pair<std::string, std::string>> covers,
                           std::vector<Label> labels = {});

  /// Builds a poset from a reflexive, transitive, antisymmetric relation given
  /// as reachability rows (`up.test(x, y)` iff x <= y). Throws CycleDetected
  /// on antisymmetry failure and InvalidArgument if the relation is not
  /// reflexive or not transitive.
  static Poset from_order(std::vector<std::string> elements, BitMatrix up, std::vector<Label> labels = {});

  /// Same as from_order but closes `relation` transitively first.
  static Poset from_relation(std::vector<std::string> elements, BitMatrix relation,
                             std::vector<Label> labels = {});

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  const std::string& id(Index i) const;
  std::span<const std::string> ids() const noexcept;
  std::optional<Index> find(std::string_view id) const;
  /// Throws UnknownIdentifier.
  Index index_of(std::string_view id) const;

  bool leq(Index a, Index b) const noexcept;
  bool less(Index a, Index b) const noexcept { return a != b && leq(a, b); }
  bool comparable(Index a, Index b) const noexcept { return leq(a, b) || leq(b, a); }
  bool leq(std::string_view a, std::string_view b) const { return leq(index_of(a), index_of(b)); }

  std::span<const Index> upper_covers(Index i) const;
  std::span<const Index> lower_covers(Index i) const;
  std::vector<std::pair<Index, Index>> covers() const;
  std::size_t num_covers() const noexcept;

  /// Reachability rows; bit y of up_row(x) is set iff x <= y.
  std::span<const kernels::Word> up_row(Index i) const;
  std::span<const kernels::Word> down_row(Index i) const;
  const BitMatrix& up_matrix() const noexcept;
  const BitMatrix& down_matrix() const noexcept;

  Label label(Index i) const;
  std::span<const Label> labels() const noexcept;
  std::optional<Index> labelled(Label l) const;
  std::optional<Index> zero() const { return labelled(Label::Zero); }
  std::optional<Index> infinity() const { return labelled(Label::Infinity); }
  Poset with_labels(std::vector<Label> labels) const;
  Poset without_labels() const { return with_labels({}); }
  /// Drops one kind of mark (used for the forgetful functor to Posets^∞).
  Poset forget(Label l) const;

  /// Induced subposet on the given element indices (any order; duplicates
  /// are ignored). Elements keep their relative order and their labels.
  Poset induced(std::span<const Index> subset) const;

  /// Number of pairs (x, y) with x <= y, reflexive pairs included.
  std::size_t comparable_pairs() const;

  std::vector<Index> minimal_elements() const;
  std::vector<Index> maximal_elements() const;

  /// Same identifiers in the same order, same labels, same order relation.
  friend bool operator==(const Poset& a, const Poset& b);

private:
  struct Data;
  explicit Poset(std::shared_ptr<const Data> d);
  static Poset build(std::vector<std::string> elements, BitMatrix up, std::vector<Label> labels);

  std::shared_ptr<const Data> d_;
};

/// Reflexive-transitive closure of a relation, in place.
void transitive_closure(BitMatrix& relation);

/// First (x, y, z) with x R y, y R z but not x R z, if any.
std::optional<std::array<Index, 3>> transitivity_witness(const BitMatrix& relation);

// Set-valued queries. Index variants return ascending element indices.

std::vector<Index> star_indices(const Poset& p, Index x);
std::vector<Index> link_indices(const Poset& p, Index x);
std::vector<Index> ideal_indices(const Poset& p, Index x, bool strict);
std::vector<Index> filter_indices(const Poset& p, Index x, bool strict);

/// Union of all principal ideals containing x. Throws UnknownIdentifier.
Poset star(const Poset& p, std::string_view x);
/// Elements of star(p, x) not above x.
Poset link(const Poset& p, std::string_view x);
/// Principal ideal {y <= x}, or {y < x} when strict.
Poset ideal(const Poset& p, std::string_view x, bool strict);
Poset opposite(const Poset& p);

struct RankInfo {
  /// Length (edge count) of the longest chain ending at each element.
  std::vector<int> rank;
  bool pure = true;
  /// Length of the longest chain in the poset, -1 for the empty poset.
  int height = -1;
  /// Elements where maximal chains from below disagree in length, i.e. where
  /// the longest-chain rank is a convention rather than a fact.
  std::vector<Index> ambiguous;
};

RankInfo rank_info(const Poset& p);

/// Labels a map promises to send to the equally labelled element.
enum class Preserves : unsigned { Nothing = 0, Zero = 1, Infinity = 2, Both = 3 };

constexpr Preserves operator&(Preserves a, Preserves b) {
  return static_cast<Preserves>(static_cast<unsigned>(a) & static_cast<unsigned>(b));
}
constexpr bool preserves(Preserves set, Label l) {
  return l == Label::Zero ? (set & Preserves::Zero) != Preserves::Nothing
                          : l == Label::Infinity && (set & Preserves::Infinity) != Preserves::Nothing;
}

/// Monotone map between posets, stored as an index assignment.
class PosetMap {
public:
  PosetMap() = default;
  /// Throws InvalidArgument unless `assignment` is total and in range.
  PosetMap(Poset source, Poset target, std::vector<Index> assignment, Preserves labels = Preserves::Nothing);
  /// Assignment given by identifiers. Throws UnknownIdentifier / InvalidArgument.
  static PosetMap from_ids(Poset source, Poset target,
                           std::span<const std::pair<std::string, std::string>> assignment,
                           Preserves labels = Preserves::Nothing);
  static PosetMap identity(const Poset& p, Preserves labels = Preserves::Nothing);

  const Poset& source() const noexcept { return source_; }
  const Poset& target() const noexcept { return target_; }
  std::span<const Index> assignment() const noexcept { return assignment_; }
  Index operator()(Index x) const { return assignment_.at(x); }
  const std::string& operator()(std::string_view x) const;
  Preserves labels() const noexcept { return labels_; }

  /// g ∘ f, where f is *this. Keeps the labels both maps preserve.
  PosetMap then(const PosetMap& g) const;

  friend bool operator==(const PosetMap& a, const PosetMap& b);

private:
  Poset source_;
  Poset target_;
  std::vector<Index> assignment_;
  Preserves labels_ = Preserves::Nothing;
};

/// Verified iff monotone and sends each declared label to its counterpart; Refuted with a
/// witness pair otherwise.
Certainty validate_map(const PosetMap& f);

}  // namespace tp
