#include "tangent_poset/smith.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_set>

namespace tp {
namespace {

struct Overflow {};

// Checked arithmetic for the 64-bit pass; BigInt never overflows.
inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }
inline BigInt sub(const BigInt& a, const BigInt& b) { return a - b; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

template <class Int>
struct Eliminator {
  using Column = std::vector<std::pair<std::uint32_t, Int>>;

  std::vector<Column> cols;
  std::vector<std::unordered_set<std::uint32_t>> row_cols;
  std::vector<char> col_alive;
  std::size_t rank = 0;

  explicit Eliminator(const SparseIntMatrix& m) : cols(m.cols), row_cols(m.rows), col_alive(m.cols, 1) {
    for (std::uint32_t c = 0; c < m.cols; ++c) {
      for (const auto& [r, v] : m.columns[c]) {
        cols[c].emplace_back(r, Int(v));
        row_cols[r].insert(c);
      }
    }
  }

  // cols[dst] -= factor * cols[src]
  void axpy(std::uint32_t dst, const Int& factor, std::uint32_t src) {
    const Column& a = cols[dst];
    const Column& b = cols[src];
    Column out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, sub(Int(0), mul(factor, b[j].second)));
        row_cols[b[j].first].insert(dst);
        ++j;
      } else {
        Int v = sub(a[i].second, mul(factor, b[j].second));
        if (v != 0)
          out.emplace_back(a[i].first, std::move(v));
        else
          row_cols[a[i].first].erase(dst);
        ++i;
        ++j;
      }
    }
    cols[dst] = std::move(out);
  }

  void pivot(std::uint32_t r, std::uint32_t c) {
    Int a{};
    for (const auto& [row, v] : cols[c])
      if (row == r) a = v;
    // a is a unit, so a^{-1} = a.
    std::vector<std::uint32_t> others(row_cols[r].begin(), row_cols[r].end());
    std::sort(others.begin(), others.end());
    for (std::uint32_t other : others) {
      if (other == c) continue;
      Int entry{};
      for (const auto& [row, v] : cols[other])
        if (row == r) entry = v;
      axpy(other, mul(entry, a), c);
    }
    for (const auto& [row, v] : cols[c]) row_cols[row].erase(c);
    cols[c].clear();
    col_alive[c] = 0;
    ++rank;
  }

  // Sparse phase: repeatedly pivot on the cheapest unit entry.
  void run() {
    bool progress = true;
    while (progress) {
      progress = false;
      std::vector<std::uint32_t> order;
      for (std::uint32_t c = 0; c < cols.size(); ++c)
        if (col_alive[c] && !cols[c].empty()) order.push_back(c);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::uint32_t x, std::uint32_t y) { return cols[x].size() < cols[y].size(); });
      for (std::uint32_t c : order) {
        if (!col_alive[c] || cols[c].empty()) continue;
        std::uint32_t best_row = 0;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (const auto& [row, v] : cols[c]) {
          if (!is_unit(v)) continue;
          if (row_cols[row].size() < best_cost) {
            best_cost = row_cols[row].size();
            best_row = row;
          }
        }
        if (best_cost == std::numeric_limits<std::size_t>::max()) continue;
        pivot(best_row, c);
        progress = true;
      }
    }
  }

  std::vector<std::vector<BigInt>> leftover() const {
    std::map<std::uint32_t, std::size_t> rows;
    std::vector<std::uint32_t> live;
    for (std::uint32_t c = 0; c < cols.size(); ++c) {
      if (!col_alive[c] || cols[c].empty()) continue;
      live.push_back(c);
      for (const auto& [r, v] : cols[c]) rows.emplace(r, 0);
    }
    std::size_t k = 0;
    for (auto& [r, pos] : rows) pos = k++;
    std::vector<std::vector<BigInt>> dense(rows.size(), std::vector<BigInt>(live.size()));
    for (std::size_t j = 0; j < live.size(); ++j)
      for (const auto& [r, v] : cols[live[j]]) dense[rows.at(r)][j] = BigInt(v);
    return dense;
  }
};

template <class Int>
SmithResult finish(Eliminator<Int>& e) {
  e.run();
  SmithResult out;
  out.rank = e.rank;
  for (auto& d : smith_diagonal_dense(e.leftover())) {
    ++out.rank;
    if (d > 1) out.torsion.push_back(std::move(d));
  }
  return out;
}

}  // namespace

SmithResult smith_normal_form(const SparseIntMatrix& m) {
  try {
    Eliminator<std::int64_t> e(m);
    return finish(e);
  } catch (const Overflow&) {
    Eliminator<BigInt> e(m);
    return finish(e);
  }
}

std::vector<BigInt> smith_diagonal_dense(std::vector<std::vector<BigInt>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<BigInt> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero magnitude in the trailing block becomes the pivot.
    auto find_min = [&](std::size_t& pi, std::size_t& pj) {
      bool found = false;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] == 0) continue;
          BigInt a = abs(m[i][j]);
          if (!found || a < best) {
            best = a;
            pi = i;
            pj = j;
            found = true;
          }
        }
      return found;
    };
    std::size_t pi = 0;
    std::size_t pj = 0;
    if (!find_min(pi, pj)) break;
    for (;;) {
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (clean) {
        // Enforce divisibility of the trailing block by the pivot.
        bool divides = true;
        for (std::size_t i = t + 1; i < rows && divides; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
              divides = false;
              break;
            }
        if (divides) break;
      }
      // Remainders are smaller than the pivot: pick again.
      find_min(pi, pj);
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace tp
