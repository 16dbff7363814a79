#pragma once
// Word-parallel kernels over dense bit rows. Every operation has a portable
// scalar reference and an AVX2 variant; the variant is chosen once at first
// use from the running CPU and can be overridden for testing.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace tp::kernels {

using Word = std::uint64_t;

enum class Backend { Scalar, Avx2 };

struct BitsetOps {
  // dst |= src
  void (*or_into)(std::span<Word> dst, std::span<const Word> src);
  // (a & b) != 0
  bool (*intersects)(std::span<const Word> a, std::span<const Word> b);
  // (a & ~b) == 0
  bool (*is_subset)(std::span<const Word> a, std::span<const Word> b);
  std::size_t (*popcount)(std::span<const Word> a);
  // popcount(a & b)
  std::size_t (*and_popcount)(std::span<const Word> a, std::span<const Word> b);
};

const BitsetOps& scalar_ops() noexcept;

/// AVX2 table, or nullptr when the binary was built without AVX2 support or
/// the CPU lacks it.
const BitsetOps* avx2_ops() noexcept;

/// Currently selected table.
const BitsetOps& ops() noexcept;

Backend active_backend() noexcept;

/// Force a backend. Requesting Avx2 on a machine without it leaves the
/// scalar table active and returns false.
bool select_backend(Backend b) noexcept;

std::string_view to_string(Backend b) noexcept;

}  // namespace tp::kernels
