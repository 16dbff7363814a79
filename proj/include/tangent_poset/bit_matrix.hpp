#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tangent_poset/bitset_kernels.hpp"

namespace tp {

/// Dense square bit matrix stored row-major, one padded word run per row.
class BitMatrix {
public:
  using Word = kernels::Word;

  BitMatrix() = default;
  explicit BitMatrix(std::size_t n) : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t stride() const noexcept { return stride_; }

  bool test(std::size_t r, std::size_t c) const noexcept {
    return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1u;
  }
  void set(std::size_t r, std::size_t c) noexcept { bits_[r * stride_ + c / 64] |= Word{1} << (c % 64); }
  void reset(std::size_t r, std::size_t c) noexcept {
    bits_[r * stride_ + c / 64] &= ~(Word{1} << (c % 64));
  }

  std::span<Word> row(std::size_t r) noexcept { return {bits_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const noexcept { return {bits_.data() + r * stride_, stride_}; }

  BitMatrix transposed() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> bits_;
};

/// Calls f(c) for every set column of a row, in increasing order.
template <class F>
void for_each_bit(std::span<const kernels::Word> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    kernels::Word word = row[w];
    while (word != 0) {
      const int bit = __builtin_ctzll(word);
      f(w * 64 + static_cast<std::size_t>(bit));
      word &= word - 1;
    }
  }
}

}  // namespace tp
