#include <doctest.h>

#include <random>
#include <vector>

#include "tangent_poset/bitset_kernels.hpp"
#include "tangent_poset/generators.hpp"
#include "tangent_poset/poset.hpp"

using namespace tp;
using kernels::Word;

namespace {

std::vector<Word> random_row(std::mt19937_64& rng, std::size_t words, double density) {
  std::bernoulli_distribution bit(density);
  std::vector<Word> row(words, 0);
  for (auto& w : row)
    for (int b = 0; b < 64; ++b)
      if (bit(rng)) w |= Word{1} << b;
  return row;
}

struct BackendGuard {
  kernels::Backend saved = kernels::active_backend();
  ~BackendGuard() { kernels::select_backend(saved); }
};

}  // namespace

TEST_CASE("simd kernels agree with the scalar reference") {
  const kernels::BitsetOps* simd = kernels::avx2_ops();
  if (!simd) {
    MESSAGE("AVX2 unavailable; only the scalar table is exercised");
    return;
  }
  const kernels::BitsetOps& ref = kernels::scalar_ops();
  std::mt19937_64 rng(7);
  // Lengths around the 4-word vector width, including tails.
  for (std::size_t words : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 33u, 100u}) {
    for (double density : {0.0, 0.01, 0.2, 0.5, 1.0}) {
      for (int rep = 0; rep < 20; ++rep) {
        auto a = random_row(rng, words, density);
        auto b = random_row(rng, words, density * 0.5);
        CHECK(ref.intersects(a, b) == simd->intersects(a, b));
        CHECK(ref.is_subset(a, b) == simd->is_subset(a, b));
        CHECK(ref.is_subset(b, a) == simd->is_subset(b, a));
        CHECK(ref.popcount(a) == simd->popcount(a));
        CHECK(ref.and_popcount(a, b) == simd->and_popcount(a, b));
        auto x = a, y = a;
        ref.or_into(x, b);
        simd->or_into(y, b);
        CHECK(x == y);
      }
    }
  }
}

TEST_CASE("scalar kernels match bit-by-bit definitions") {
  std::mt19937_64 rng(11);
  const auto& k = kernels::scalar_ops();
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t words = rep % 9;
    auto a = random_row(rng, words, 0.3), b = random_row(rng, words, 0.3);
    std::size_t both = 0, ones = 0;
    bool subset = true;
    for (std::size_t i = 0; i < words * 64; ++i) {
      const bool x = a[i / 64] >> (i % 64) & 1, y = b[i / 64] >> (i % 64) & 1;
      both += x && y;
      ones += x;
      subset = subset && (!x || y);
    }
    CHECK(k.and_popcount(a, b) == both);
    CHECK(k.popcount(a) == ones);
    CHECK(k.intersects(a, b) == (both > 0));
    CHECK(k.is_subset(a, b) == subset);
  }
}

TEST_CASE("poset construction is backend independent") {
  BackendGuard guard;
  // 80 elements: rows span two words.
  const Poset p_default = gen::cube_boundary(4);
  std::vector<std::vector<Index>> stars_default;
  for (Index x = 0; x < p_default.size(); ++x) stars_default.push_back(star_indices(p_default, x));
  REQUIRE(kernels::select_backend(kernels::Backend::Scalar));
  CHECK(kernels::active_backend() == kernels::Backend::Scalar);
  const Poset p_scalar = gen::cube_boundary(4);
  CHECK(p_default == p_scalar);
  CHECK(p_default.covers() == p_scalar.covers());
  for (Index x = 0; x < p_scalar.size(); ++x) CHECK(star_indices(p_scalar, x) == stars_default[x]);
  CHECK(kernels::to_string(kernels::Backend::Avx2) == "avx2");
}
