#pragma once

#include <cstddef>
#include <cstdint>

// Integer row kernels used by the dense fraction-free elimination path.
//
// Every kernel has a portable scalar reference and, where the build and CPU
// allow it, an AVX2 variant; `active_kernels()` picks one at runtime.  The
// variants must agree bit for bit on every input that satisfies the stated
// preconditions (see tests/unit/test_simd.cpp).

namespace idalg::simd {

/// Magnitude bound on kernel inputs: products of two such values and their
/// differences stay exact in int64.
inline constexpr std::int64_t kLaneLimit = std::int64_t{1} << 31;

struct KernelSet {
  const char* name;
  /// dst[k] = a * dst[k] - b * src[k].
  /// Requires |a|, |b|, |dst[k]|, |src[k]| < kLaneLimit.
  void (*scale_sub)(std::int64_t* dst, const std::int64_t* src, std::size_t len, std::int64_t a,
                    std::int64_t b);
  /// max_k |v[k]|, or 0 for an empty range.  Requires v[k] != INT64_MIN.
  std::uint64_t (*max_abs)(const std::int64_t* v, std::size_t len);
};

const KernelSet& scalar_kernels();

/// AVX2 variant, or nullptr when unavailable on this build or CPU.
const KernelSet* avx2_kernels();

/// Kernel set used by the library: AVX2 when supported, unless the
/// environment variable IDALG_SIMD=scalar is set or an override is active.
const KernelSet& active_kernels();

/// Test hook: pin the active set (nullptr restores runtime detection).
void override_kernels(const KernelSet* set);

}  // namespace idalg::simd
