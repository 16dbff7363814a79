#include "tangent_poset/bitset_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

#include <bit>

#define TP_AVX2 __attribute__((target("avx2,popcnt")))

namespace tp::kernels {
namespace {

// Tails shorter than one 256-bit lane fall through to word loops.

TP_AVX2 void or_into_avx2(std::span<Word> dst, std::span<const Word> src) {
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst.data() + i);
    const auto* s = reinterpret_cast<const __m256i*>(src.data() + i);
    _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

TP_AVX2 bool intersects_avx2(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    if (!_mm256_testz_si256(x, y)) return true;
  }
  for (; i < n; ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

TP_AVX2 bool is_subset_avx2(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    // testc(y, x) is 1 iff (~y & x) == 0
    if (!_mm256_testc_si256(y, x)) return false;
  }
  for (; i < n; ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

TP_AVX2 std::size_t popcount_avx2(std::span<const Word> a) {
  std::size_t n = 0;
  for (Word w : a) n += static_cast<std::size_t>(_mm_popcnt_u64(w));
  return n;
}

TP_AVX2 std::size_t and_popcount_avx2(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t n = a.size();
  std::size_t count = 0;
  std::size_t i = 0;
  alignas(32) Word lanes[4];
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_and_si256(x, y));
    count += static_cast<std::size_t>(_mm_popcnt_u64(lanes[0]) + _mm_popcnt_u64(lanes[1]) +
                                      _mm_popcnt_u64(lanes[2]) + _mm_popcnt_u64(lanes[3]));
  }
  for (; i < n; ++i) count += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
  return count;
}

constexpr BitsetOps kAvx2{or_into_avx2, intersects_avx2, is_subset_avx2, popcount_avx2,
                          and_popcount_avx2};

}  // namespace

const BitsetOps* avx2_ops() noexcept {
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  return supported ? &kAvx2 : nullptr;
}

}  // namespace tp::kernels

#else

namespace tp::kernels {
const BitsetOps* avx2_ops() noexcept { return nullptr; }
}  // namespace tp::kernels

#endif
