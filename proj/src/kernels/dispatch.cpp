#include <atomic>
#include <cstdlib>
#include <string>

#include "nsfourier/kernels.hpp"

namespace nsfourier::kernels {

#if NSFOURIER_HAVE_AVX2
const KernelTable& avx2_table_impl();
#endif

const KernelTable* avx2_table() {
#if NSFOURIER_HAVE_AVX2
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_table_impl() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable* resolve(std::string_view name) {
  if (name == "scalar") return &scalar_table();
  if (name == "avx2") return avx2_table();
  if (name == "auto" || name.empty()) {
    const KernelTable* best = avx2_table();
    return best != nullptr ? best : &scalar_table();
  }
  return nullptr;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table = [] {
    const char* env = std::getenv("NSFOURIER_SIMD");
    const KernelTable* t = resolve(env != nullptr ? env : "auto");
    return t != nullptr ? t : resolve("auto");
  }();
  return table;
}

}  // namespace

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

bool select(std::string_view name) {
  const KernelTable* t = resolve(name);
  if (t == nullptr) return false;
  current().store(t, std::memory_order_relaxed);
  return true;
}

}  // namespace nsfourier::kernels
