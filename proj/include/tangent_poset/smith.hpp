#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tp {

using BigInt = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// columns[c] holds (row, value) pairs sorted by row, no zeros.
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;
};

struct SmithResult {
  std::size_t rank = 0;
  /// Invariant factors greater than one, in divisibility order.
  std::vector<BigInt> torsion;
};

/// Rank and torsion of an integer matrix. Unit pivots are eliminated sparsely
/// (Markowitz order, checked 64-bit arithmetic, restarting in arbitrary
/// precision on overflow); whatever is left is finished densely.
SmithResult smith_normal_form(const SparseIntMatrix& m);

/// Nonzero invariant factors d1 | d2 | ... of a dense matrix (absolute values).
std::vector<BigInt> smith_diagonal_dense(std::vector<std::vector<BigInt>> m);

}  // namespace tp
