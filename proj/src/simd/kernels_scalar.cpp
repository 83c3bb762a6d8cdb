#include "idalg/simd/kernels.hpp"

namespace idalg::simd {

namespace {

void scale_sub_scalar(std::int64_t* dst, const std::int64_t* src, std::size_t len, std::int64_t a,
                      std::int64_t b) {
  for (std::size_t k = 0; k < len; ++k) dst[k] = a * dst[k] - b * src[k];
}

std::uint64_t max_abs_scalar(const std::int64_t* v, std::size_t len) {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < len; ++k) {
    std::uint64_t a = v[k] < 0 ? static_cast<std::uint64_t>(-v[k]) : static_cast<std::uint64_t>(v[k]);
    if (a > m) m = a;
  }
  return m;
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar", &scale_sub_scalar, &max_abs_scalar};
  return set;
}

}  // namespace idalg::simd
