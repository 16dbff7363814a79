#include "tangent_poset/bitset_kernels.hpp"

#include <bit>

namespace tp::kernels {
namespace {

void or_into_scalar(std::span<Word> dst, std::span<const Word> src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] |= src[i];
}

bool intersects_scalar(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

bool is_subset_scalar(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

std::size_t popcount_scalar(std::span<const Word> a) {
  std::size_t n = 0;
  for (Word w : a) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t and_popcount_scalar(std::span<const Word> a, std::span<const Word> b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return n;
}

constexpr BitsetOps kScalar{or_into_scalar, intersects_scalar, is_subset_scalar, popcount_scalar,
                            and_popcount_scalar};

}  // namespace

const BitsetOps& scalar_ops() noexcept { return kScalar; }

}  // namespace tp::kernels
