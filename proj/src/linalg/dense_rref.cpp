#include <algorithm>
#include <numeric>

#include "idalg/linalg/subspace.hpp"
#include "idalg/simd/kernels.hpp"

namespace idalg::detail {

namespace {

constexpr std::size_t kMaxDenseCells = std::size_t{1} << 24;

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

// Divides the row by the gcd of its entries; the sign is left alone.
void remove_content(std::int64_t* row, std::size_t len) {
  std::int64_t g = 0;
  for (std::size_t k = 0; k < len && g != 1; ++k) {
    if (row[k] != 0) g = std::gcd(g, abs64(row[k]));
  }
  if (g > 1) {
    for (std::size_t k = 0; k < len; ++k) row[k] /= g;
  }
}

// Clears denominators of a real row into `out`; false if anything leaves the lane range.
bool load_row(const Vector& v, std::int64_t* out) {
  std::int64_t l = 1;
  for (const auto& e : v.entries()) {
    const Rational& x = e.value.re();
    if (!x.is_small()) return false;
    std::int64_t d = x.small_den();
    std::int64_t next = l / std::gcd(l, d);
    if (next >= simd::kLaneLimit || d >= simd::kLaneLimit) return false;
    l = next * d;
    if (l >= simd::kLaneLimit) return false;
  }
  for (const auto& e : v.entries()) {
    const Rational& x = e.value.re();
    __int128 scaled = static_cast<__int128>(x.small_num()) * (l / x.small_den());
    if (scaled >= simd::kLaneLimit || scaled <= -simd::kLaneLimit) return false;
    out[e.index] = static_cast<std::int64_t>(scaled);
  }
  return true;
}

}  // namespace

bool prefers_dense(std::span<const Vector> rows, std::size_t ambient_dim) {
  if (rows.size() < 4 || ambient_dim == 0) return false;
  if (rows.size() * ambient_dim > kMaxDenseCells) return false;
  std::size_t nnz = 0;
  for (const auto& r : rows) {
    if (!r.is_real()) return false;
    nnz += r.nnz();
  }
  return 4 * nnz > rows.size() * ambient_dim;
}

std::optional<Subspace> dense_rref(std::span<const Vector> rows, std::size_t ambient_dim) {
  const std::size_t m = rows.size();
  const std::size_t d = ambient_dim;
  if (m * d > kMaxDenseCells) return std::nullopt;
  const simd::KernelSet& kernels = simd::active_kernels();

  std::vector<std::int64_t> a(m * d, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (!rows[i].is_real() || rows[i].dim() != d) return std::nullopt;
    if (!load_row(rows[i], &a[i * d])) return std::nullopt;
    remove_content(&a[i * d], d);
  }
  auto row = [&](std::size_t i) { return &a[i * d]; };

  std::vector<std::uint32_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < m; ++c) {
    std::size_t best = m;
    for (std::size_t i = r; i < m; ++i) {
      std::int64_t x = row(i)[c];
      if (x != 0 && (best == m || abs64(x) < abs64(row(best)[c]))) best = i;
    }
    if (best == m) continue;
    if (best != r) std::swap_ranges(row(best), row(best) + d, row(r));
    const std::int64_t p = row(r)[c];
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      std::int64_t x = row(i)[c];
      if (x == 0) continue;
      std::int64_t g = std::gcd(abs64(p), abs64(x));
      kernels.scale_sub(row(i), row(r), d, p / g, x / g);
      remove_content(row(i), d);
      if (kernels.max_abs(row(i), d) >= static_cast<std::uint64_t>(simd::kLaneLimit)) return std::nullopt;
    }
    pivots.push_back(static_cast<std::uint32_t>(c));
    ++r;
  }

  std::vector<Vector> out;
  out.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::int64_t p = row(i)[pivots[i]];
    Vector v(d);
    for (std::size_t k = 0; k < d; ++k) {
      if (row(i)[k] != 0) v.push_back(static_cast<std::uint32_t>(k), GaussScalar(Rational(row(i)[k], p)));
    }
    out.push_back(std::move(v));
  }
  return make_subspace(d, std::move(out));
}

}  // namespace idalg::detail
