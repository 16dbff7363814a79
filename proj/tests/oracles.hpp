#pragma once

// Independent reference computations used to cross-check the library. They
// are deliberately naive: no shared code with the implementation beyond the
// public accessors of the value types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tangent_poset/complex.hpp"
#include "tangent_poset/poset.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;

/// The triangle face poset with element names a, b, c, ab, bc, ca.
inline tp::Poset triangle() {
  const std::vector<std::pair<std::string, std::string>> covers = {
      {"a", "ab"}, {"b", "ab"}, {"b", "bc"}, {"c", "bc"}, {"c", "ca"}, {"a", "ca"}};
  return tp::Poset::from_covers({"a", "b", "c", "ab", "bc", "ca"}, covers);
}

inline tp::Poset chain(int n) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(std::to_string(i), std::to_string(i + 1));
  return tp::Poset::from_covers(ids, covers);
}

inline tp::Poset antichain(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i));
  return tp::Poset::from_covers(ids, {});
}

inline std::set<std::string> id_set(const tp::Poset& p) { return {p.ids().begin(), p.ids().end()}; }

/// Reflexive-transitive closure of the cover relation by Floyd-Warshall.
inline std::vector<std::vector<bool>> closure(const tp::Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (const auto& [lo, hi] : p.covers()) r[lo][hi] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

/// Nonempty chains by subset enumeration (n <= 20).
inline std::uint64_t chains_by_subsets(const tp::Poset& p) {
  const std::size_t n = p.size();
  std::uint64_t count = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1)) ok = p.comparable(static_cast<tp::Index>(i), static_cast<tp::Index>(j));
    count += ok;
  }
  return count;
}

/// All nonempty faces of a complex by subsets of its facets.
inline std::set<std::vector<tp::Vertex>> all_faces(const tp::SimplicialComplex& k) {
  std::set<std::vector<tp::Vertex>> out;
  for (const auto& f : k.facets())
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << f.size()); ++mask) {
      std::vector<tp::Vertex> s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1) s.push_back(f[i]);
      out.insert(s);
    }
  return out;
}

inline std::int64_t euler(const tp::SimplicialComplex& k) {
  std::int64_t chi = 0;
  for (const auto& f : all_faces(k)) chi += f.size() % 2 == 1 ? 1 : -1;
  return chi;
}

/// Boundary matrix d_d as dense rows (faces of dim d-1) x columns (dim d),
/// with its own face ordering.
inline std::vector<std::vector<std::int64_t>> boundary(const tp::SimplicialComplex& k, int d) {
  std::vector<std::vector<tp::Vertex>> lower, upper;
  for (const auto& f : all_faces(k)) {
    if (static_cast<int>(f.size()) == d) lower.push_back(f);
    if (static_cast<int>(f.size()) == d + 1) upper.push_back(f);
  }
  std::vector<std::vector<std::int64_t>> m(lower.size(), std::vector<std::int64_t>(upper.size(), 0));
  for (std::size_t c = 0; c < upper.size(); ++c)
    for (std::size_t drop = 0; drop < upper[c].size(); ++drop) {
      std::vector<tp::Vertex> face;
      for (std::size_t j = 0; j < upper[c].size(); ++j)
        if (j != drop) face.push_back(upper[c][j]);
      const auto r = std::find(lower.begin(), lower.end(), face) - lower.begin();
      m[r][c] = drop % 2 == 0 ? 1 : -1;
    }
  return m;
}

/// Rank modulo a prime p (p = 0 means over the rationals, via exact
/// fraction-free elimination).
inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<cpp_int>> a(rows, std::vector<cpp_int>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      cpp_int v = m[i][j];
      if (p) v = ((v % p) + p) % p;
      a[i][j] = v;
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const cpp_int f = a[i][c], g = a[rank][c];
      for (std::size_t j = 0; j < cols; ++j) {
        a[i][j] = a[i][j] * g - a[rank][j] * f;
        if (p) a[i][j] = ((a[i][j] % p) + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

inline cpp_int det(std::vector<std::vector<cpp_int>> a) {
  // Bareiss fraction-free elimination.
  const std::size_t n = a.size();
  cpp_int sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Invariant factors from determinantal divisors: d_k = gcd of k x k minors,
/// factor_k = d_k / d_{k-1}.
inline std::vector<cpp_int> invariant_factors(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<cpp_int> out;
  cpp_int prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    cpp_int g = 0;
    std::vector<std::size_t> ri(k), ci(k);
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + k, true);
      do {
        std::vector<std::vector<cpp_int>> sub;
        for (std::size_t i = 0; i < rows; ++i) {
          if (!rsel[i]) continue;
          std::vector<cpp_int> row;
          for (std::size_t j = 0; j < cols; ++j)
            if (csel[j]) row.push_back(m[i][j]);
          sub.push_back(std::move(row));
        }
        cpp_int d = abs(det(sub));
        g = boost::multiprecision::gcd(g, d);
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

}  // namespace oracle
