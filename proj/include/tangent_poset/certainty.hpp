#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tp {

/// Three-valued verdict. The numeric order is the meet order used when
/// aggregating checks: Refuted < Unknown < Verified.
enum class Verdict { Refuted = 0, Unknown = 1, Verified = 2 };

const char* to_string(Verdict v) noexcept;

/// A verdict together with the trace that justifies it. Verified and Refuted
/// results carry re-checkable evidence; Unknown records the exhausted budget.
struct Certainty {
  Verdict verdict = Verdict::Unknown;
  std::vector<std::string> evidence;

  static Certainty verified(std::string why) { return {Verdict::Verified, {std::move(why)}}; }
  static Certainty refuted(std::string why) { return {Verdict::Refuted, {std::move(why)}}; }
  static Certainty unknown(std::string why) { return {Verdict::Unknown, {std::move(why)}}; }

  bool is_verified() const noexcept { return verdict == Verdict::Verified; }
  bool is_refuted() const noexcept { return verdict == Verdict::Refuted; }
  bool is_unknown() const noexcept { return verdict == Verdict::Unknown; }

  Certainty& note(std::string line) {
    evidence.push_back(std::move(line));
    return *this;
  }

  /// Evidence joined with "; ".
  std::string summary() const;
};

inline Verdict meet(Verdict a, Verdict b) noexcept { return a < b ? a : b; }

}  // namespace tp
