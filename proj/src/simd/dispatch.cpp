#include <atomic>
#include <cstdlib>
#include <string_view>

#include "idalg/simd/kernels.hpp"

namespace idalg::simd {

namespace {

std::atomic<const KernelSet*> g_override{nullptr};

const KernelSet& detect() {
  const char* env = std::getenv("IDALG_SIMD");
  if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
  if (const KernelSet* avx2 = avx2_kernels()) return *avx2;
  return scalar_kernels();
}

}  // namespace

const KernelSet& active_kernels() {
  if (const KernelSet* forced = g_override.load(std::memory_order_acquire)) return *forced;
  static const KernelSet& detected = detect();
  return detected;
}

void override_kernels(const KernelSet* set) { g_override.store(set, std::memory_order_release); }

}  // namespace idalg::simd
