// Compiled with -mavx2; only reached after a runtime CPU check.
#include "idalg/simd/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace idalg::simd {

#if defined(__AVX2__)

namespace {

// Lanes hold int64 values inside the int32 range, so _mm256_mul_epi32 (which
// multiplies the sign-extended low halves) yields the exact 64-bit product.
void scale_sub_avx2(std::int64_t* dst, const std::int64_t* src, std::size_t len, std::int64_t a,
                    std::int64_t b) {
  const __m256i va = _mm256_set1_epi64x(a);
  const __m256i vb = _mm256_set1_epi64x(b);
  std::size_t k = 0;
  for (; k + 4 <= len; k += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    __m256i r = _mm256_sub_epi64(_mm256_mul_epi32(d, va), _mm256_mul_epi32(s, vb));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), r);
  }
  for (; k < len; ++k) dst[k] = a * dst[k] - b * src[k];
}

std::uint64_t max_abs_avx2(const std::int64_t* v, std::size_t len) {
  const __m256i zero = _mm256_setzero_si256();
  __m256i best = zero;
  std::size_t k = 0;
  for (; k + 4 <= len; k += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + k));
    __m256i neg = _mm256_cmpgt_epi64(zero, x);
    __m256i ax = _mm256_sub_epi64(_mm256_xor_si256(x, neg), neg);
    __m256i gt = _mm256_cmpgt_epi64(ax, best);
    best = _mm256_blendv_epi8(best, ax, gt);
  }
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), best);
  std::uint64_t m = 0;
  for (std::int64_t lane : lanes) {
    if (static_cast<std::uint64_t>(lane) > m) m = static_cast<std::uint64_t>(lane);
  }
  for (; k < len; ++k) {
    std::uint64_t a = v[k] < 0 ? static_cast<std::uint64_t>(-v[k]) : static_cast<std::uint64_t>(v[k]);
    if (a > m) m = a;
  }
  return m;
}

}  // namespace

const KernelSet* avx2_kernels() {
  static const KernelSet set{"avx2", &scale_sub_avx2, &max_abs_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &set : nullptr;
}

#else

const KernelSet* avx2_kernels() { return nullptr; }

#endif

}  // namespace idalg::simd
