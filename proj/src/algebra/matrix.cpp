#include "idalg/algebra/matrix.hpp"

#include <algorithm>
#include <string>

#include "idalg/error.hpp"

namespace idalg {

namespace {

void check_same(const MatN& x, const MatN& y) {
  if (x.n() != y.n()) {
    throw Error(Errc::SizeMismatch, "matrices of size " + std::to_string(x.n()) + " and " + std::to_string(y.n()));
  }
}

}  // namespace

bool MatN::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const GaussScalar& s) { return s.is_zero(); });
}

MatN& MatN::operator+=(const MatN& rhs) {
  check_same(*this, rhs);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
  return *this;
}

MatN& MatN::operator-=(const MatN& rhs) {
  check_same(*this, rhs);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
  return *this;
}

MatN operator*(const GaussScalar& c, const MatN& x) {
  MatN out(x.n_);
  for (std::size_t k = 0; k < x.a_.size(); ++k) out.a_[k] = c * x.a_[k];
  return out;
}

MatN unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw Error(Errc::SizeMismatch, "matrix unit index out of range");
  MatN e(n);
  e(i, j) = GaussScalar(1);
  return e;
}

MatN identity(std::size_t n) {
  MatN e(n);
  for (std::size_t i = 0; i < n; ++i) e(i, i) = GaussScalar(1);
  return e;
}

GaussScalar trace(const MatN& x) {
  GaussScalar t;
  for (std::size_t i = 0; i < x.n(); ++i) t += x(i, i);
  return t;
}

MatN transpose(const MatN& x) {
  MatN out(x.n());
  for (std::size_t i = 0; i < x.n(); ++i) {
    for (std::size_t j = 0; j < x.n(); ++j) out(j, i) = x(i, j);
  }
  return out;
}

MatN mul(const MatN& x, const MatN& y) {
  check_same(x, y);
  const std::size_t n = x.n();
  MatN out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const GaussScalar& a = x(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!y(k, j).is_zero()) out(i, j) += a * y(k, j);
      }
    }
  }
  return out;
}

MatN bracket(const MatN& x, const MatN& y) { return mul(x, y) - mul(y, x); }

GaussScalar scalar_part(const MatN& x) { return trace(x) / GaussScalar(static_cast<std::int64_t>(x.n())); }

MatN traceless_part(const MatN& x) { return x - scalar_part(x) * identity(x.n()); }

Vector vectorize(const MatN& x) {
  const std::size_t n = x.n();
  Vector v(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) v.push_back(static_cast<std::uint32_t>(vec_index(n, i, j)), x(i, j));
  }
  return v;
}

MatN unvectorize(const Vector& v, std::size_t n) {
  if (v.dim() != n * n) {
    throw Error(Errc::SizeMismatch, "vector of length " + std::to_string(v.dim()) + " is not n^2 for n=" +
                                        std::to_string(n));
  }
  MatN x(n);
  for (const auto& e : v.entries()) x(e.index / n, e.index % n) = e.value;
  return x;
}

std::vector<MatN> traceless_basis(std::size_t n) {
  std::vector<MatN> out;
  out.reserve(n * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) out.push_back(unit(n, i, j));
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) out.push_back(unit(n, i, i) - unit(n, n - 1, n - 1));
  return out;
}

}  // namespace idalg
