#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "idalg/algebra/matrix.hpp"
#include "idalg/linalg/subspace.hpp"

namespace idalg {

/// A linear map on M_n held as its n^2 x n^2 matrix on vectorized inputs,
/// flattened row-major into a sparse Vector of dimension n^4: entry
/// r*n^2 + c is the coefficient of output coordinate r on input coordinate c.
class OperatorN {
 public:
  OperatorN() = default;
  /// Zero operator.
  explicit OperatorN(std::size_t n) : n_(n), mat_(n * n * n * n) {}
  OperatorN(std::size_t n, Vector mat);

  /// Operator whose column for e_kl is vectorize(f(e_kl)).
  static OperatorN from_map(std::size_t n, const std::function<MatN(const MatN&)>& f);
  static OperatorN identity(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  /// n^2, the side of the matrix.
  std::size_t side() const noexcept { return n_ * n_; }
  const Vector& vec() const noexcept { return mat_; }
  bool is_zero() const noexcept { return mat_.is_zero(); }
  GaussScalar entry(std::size_t row, std::size_t col) const { return mat_.at(row * side() + col); }

  friend OperatorN operator+(const OperatorN& a, const OperatorN& b);
  friend OperatorN operator-(const OperatorN& a, const OperatorN& b);
  friend OperatorN operator*(const GaussScalar& c, const OperatorN& t);
  friend bool operator==(const OperatorN&, const OperatorN&) = default;

 private:
  std::size_t n_ = 0;
  Vector mat_;
};

/// x -> a x b
OperatorN tensor(const MatN& a, const MatN& b);
/// x -> a x - x a
OperatorN inner_deriv(const MatN& a);
/// Matrix product: apply t first, then s.
OperatorN compose(const OperatorN& s, const OperatorN& t);
OperatorN op_bracket(const OperatorN& s, const OperatorN& t);
std::size_t op_rank(const OperatorN& t);
GaussScalar op_trace(const OperatorN& t);
MatN apply(const OperatorN& t, const MatN& x);

bool in_sl(const OperatorN& t);
bool in_gl_n2m1(const OperatorN& t);
/// Skewness against the Gram matrix of (x, y) -> tr(xy):
/// M[(a,b),(c,d)] = -M[(d,c),(b,a)].
bool in_so(const OperatorN& t);
/// tr(t(x) y + x t(y)) = 0 over all basis pairs.  Slow reference form.
bool in_so_by_pairs(const OperatorN& t);

/// Linear forms on the n^4 coordinates cutting out each ambient algebra.
std::vector<Vector> sl_constraints(std::size_t n);
std::vector<Vector> gl_n2m1_constraints(std::size_t n);
std::vector<Vector> so_constraints(std::size_t n);

/// alpha on M_n^0, beta on F1.
OperatorN t_matrix(const GaussScalar& alpha, const GaussScalar& beta, std::size_t n);
/// Inverse of t_matrix(alpha, beta); singular-parameter error if alpha*beta = 0.
OperatorN t_matrix_inverse(const GaussScalar& alpha, const GaussScalar& beta, std::size_t n);

/// General inverse by elimination; singular-parameter error when t is singular.
OperatorN op_inverse(const OperatorN& t);

/// Operators as vectors of one ambient space, and back.
std::vector<Vector> as_vectors(std::span<const OperatorN> ops);
std::vector<OperatorN> as_operators(const Subspace& s, std::size_t n);

}  // namespace idalg
