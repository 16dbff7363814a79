#pragma once

#include <string>
#include <vector>

#include "tangent_poset/certainty.hpp"
#include "tangent_poset/poset.hpp"
#include "tangent_poset/sphere.hpp"

namespace tp {

struct Check {
  std::string name;
  Certainty result;
};

/// Named checks with an overall verdict that is their meet
/// (Refuted < Unknown < Verified).
struct VerificationReport {
  std::string subject;
  std::vector<Check> checks;
  /// Caveats that hold regardless of the verdict.
  std::vector<std::string> notes;

  void add(std::string name, Certainty c) { checks.push_back({std::move(name), std::move(c)}); }
  /// Appends another report's checks with a name prefix, and its notes.
  void absorb(const VerificationReport& other, const std::string& prefix = "");
  Verdict verdict() const;
  /// Verdict plus counts; for Refuted the first refuted check's evidence.
  Certainty overall() const;
  /// Human-readable table.
  std::string to_text() const;
};

inline constexpr const char* kStrictnessNote =
    "strictness is approximate: the (Star, Link) pair condition is checked as a ball, a sphere and "
    "link-in-boundary containment";
inline constexpr const char* kNotCheckableNote =
    "items 3-5 (model equivalence, classifying spaces, Gauss map homotopy class) are homotopy statements "
    "with no finite certificate and are not checked";

/// For every p: the order complex of P_{<p} is a PL (rank p - 1)-sphere.
VerificationReport is_abstract_ball_complex(const Poset& p, const OracleBudget& budget = {});

/// Pure, and both P and its opposite are abstract PL-ball complexes.
VerificationReport is_abstract_manifold(const Poset& p, const OracleBudget& budget = {});

/// For every x: B Star x is a PL n-ball, B Link x a PL (n-1)-sphere lying in
/// the boundary of B Star x.
VerificationReport is_strict(const Poset& p, int n, const OracleBudget& budget = {});

/// Abstract manifold whose order complex is a PL n-sphere.
VerificationReport is_abstract_sphere(const Poset& p, int n, const OracleBudget& budget = {});

/// Abstract n-sphere (ZERO label ignored) whose INFINITY element has maximal
/// longest-chain rank. Throws MissingLabel.
VerificationReport is_rn_object(const Poset& q, int n, const OracleBudget& budget = {});

/// Monotone, and for every target element O of rank k the preimage of the
/// closed ideal below O has a PL k-ball as order complex.
VerificationReport is_aggregation(const PosetMap& f, int n, const OracleBudget& budget = {});

/// Aggregation sending INFINITY to INFINITY. Throws MissingLabel.
VerificationReport is_rn_morphism(const PosetMap& f, int n, const OracleBudget& budget = {});

/// Per-instance checks of Theorem 1: item 1 (fibers in R_n, Gauss arrows are
/// R_n morphisms) and item 2 (order complex of the total space is a
/// combinatorial 2n-manifold), plus the hocolim identity and strictness of P.
VerificationReport verify_theorem1(const Poset& p, int n, const OracleBudget& budget = {});

}  // namespace tp
