#include <atomic>
#include <cstdlib>
#include <string_view>

#include "tangent_poset/bitset_kernels.hpp"

namespace tp::kernels {
namespace {

const BitsetOps* initial_table() noexcept {
  // TANGENT_POSET_SIMD=scalar pins the reference kernels.
  if (const char* env = std::getenv("TANGENT_POSET_SIMD"); env && std::string_view(env) == "scalar")
    return &scalar_ops();
  if (const BitsetOps* t = avx2_ops()) return t;
  return &scalar_ops();
}

std::atomic<const BitsetOps*>& active() noexcept {
  static std::atomic<const BitsetOps*> table{initial_table()};
  return table;
}

}  // namespace

const BitsetOps& ops() noexcept { return *active().load(std::memory_order_acquire); }

Backend active_backend() noexcept {
  return active().load(std::memory_order_acquire) == &scalar_ops() ? Backend::Scalar : Backend::Avx2;
}

bool select_backend(Backend b) noexcept {
  if (b == Backend::Scalar) {
    active().store(&scalar_ops(), std::memory_order_release);
    return true;
  }
  if (const BitsetOps* t = avx2_ops()) {
    active().store(t, std::memory_order_release);
    return true;
  }
  active().store(&scalar_ops(), std::memory_order_release);
  return false;
}

std::string_view to_string(Backend b) noexcept { return b == Backend::Scalar ? "scalar" : "avx2"; }

}  // namespace tp::kernels
