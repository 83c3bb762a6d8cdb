#pragma once

#include <cstddef>
#include <vector>

#include "idalg/linalg/vector.hpp"

namespace idalg {

// Elements of M_n stored densely, row-major.  Indices are 0-based here; the
// JSON layer and the documentation use 1-based e_ij.
//
// Vectorization convention (part of the wire format): (i, j) -> i*n + j.
class MatN {
 public:
  MatN() = default;
  explicit MatN(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t n() const noexcept { return n_; }
  const GaussScalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  GaussScalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  bool is_zero() const;

  MatN& operator+=(const MatN& rhs);
  MatN& operator-=(const MatN& rhs);
  friend MatN operator+(MatN a, const MatN& b) { return a += b; }
  friend MatN operator-(MatN a, const MatN& b) { return a -= b; }
  friend MatN operator*(const GaussScalar& c, const MatN& x);
  friend MatN operator-(const MatN& x) { return GaussScalar(-1) * x; }
  friend bool operator==(const MatN&, const MatN&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<GaussScalar> a_;
};

inline std::size_t vec_index(std::size_t n, std::size_t i, std::size_t j) { return i * n + j; }

MatN unit(std::size_t n, std::size_t i, std::size_t j);
MatN identity(std::size_t n);
GaussScalar trace(const MatN& x);
MatN transpose(const MatN& x);
MatN mul(const MatN& x, const MatN& y);
MatN bracket(const MatN& x, const MatN& y);

/// x - (tr x / n) 1
MatN traceless_part(const MatN& x);
/// tr x / n
GaussScalar scalar_part(const MatN& x);

Vector vectorize(const MatN& x);
MatN unvectorize(const Vector& v, std::size_t n);

/// Basis of M_n^0: e_ij (i != j) in row-major order, then e_ii - e_nn.
std::vector<MatN> traceless_basis(std::size_t n);

}  // namespace idalg
