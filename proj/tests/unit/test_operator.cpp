#include "doctest.h"
#include "idalg/error.hpp"
#include "test_support.hpp"

using namespace idalg;
using testing::e;

namespace {

// apply() written out as the defining double sum, independent of the flat layout.
MatN apply_by_definition(const OperatorN& t, const MatN& x) {
  const std::size_t n = t.n();
  MatN y(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) y(i, j) += t.entry(i * n + j, k * n + l) * x(k, l);
  return y;
}

}  // namespace

TEST_CASE("tensor acts as x -> a x b") {
  CHECK(apply(tensor(e(4, 1, 2), e(4, 3, 4)), e(4, 2, 3)) == e(4, 1, 4));
  CHECK(tensor(identity(3), identity(3)) == OperatorN::identity(3));
  OperatorN tr1(2);
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j) tr1 = tr1 + tensor(e(2, i, j), e(2, j, i));
  CHECK(apply(tr1, e(2, 1, 1)) == identity(2));
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    MatN a = testing::random_mat(rng, 3), b = testing::random_mat(rng, 3), x = testing::random_mat(rng, 3);
    OperatorN t = tensor(a, b);
    CHECK(apply(t, x) == mul(mul(a, x), b));
    CHECK(apply_by_definition(t, x) == apply(t, x));
  }
}

TEST_CASE("inner derivations") {
  CHECK(apply(inner_deriv(e(3, 1, 2)), e(3, 2, 1)) == e(3, 1, 1) - e(3, 2, 2));
  CHECK(inner_deriv(identity(4)).is_zero());
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10; ++k) {
    MatN a = testing::random_mat(rng, 3), b = testing::random_mat(rng, 3);
    CHECK(op_bracket(inner_deriv(a), inner_deriv(b)) == inner_deriv(bracket(a, b)));
    CHECK(in_gl_n2m1(inner_deriv(a)));
    CHECK(in_so(inner_deriv(a)));
    CHECK(in_sl(inner_deriv(a)));
  }
}

TEST_CASE("composition follows the opposite product rule") {
  CHECK(compose(tensor(e(2, 1, 2), e(2, 2, 1)), tensor(e(2, 2, 1), e(2, 1, 2))) == tensor(e(2, 1, 1), e(2, 1, 1)));
  std::mt19937_64 rng(6);
  for (int k = 0; k < 10; ++k) {
    MatN a = testing::random_mat(rng, 3), b = testing::random_mat(rng, 3);
    MatN c = testing::random_mat(rng, 3), d = testing::random_mat(rng, 3);
    CHECK(compose(tensor(a, b), tensor(c, d)) == tensor(mul(a, c), mul(d, b)));
    OperatorN s = testing::random_op(rng, 3), t = testing::random_op(rng, 3);
    MatN x = testing::random_mat(rng, 3);
    CHECK(apply(compose(s, t), x) == apply(s, apply(t, x)));
  }
}

TEST_CASE("bracket satisfies Jacobi") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 5; ++k) {
    OperatorN a = testing::random_op(rng, 3), b = testing::random_op(rng, 3), c = testing::random_op(rng, 3);
    OperatorN j = op_bracket(a, op_bracket(b, c)) + op_bracket(b, op_bracket(c, a)) + op_bracket(c, op_bracket(a, b));
    CHECK(j.is_zero());
  }
}

TEST_CASE("rank and trace") {
  CHECK(op_rank(tensor(e(3, 1, 1), e(3, 1, 1))) == 1);
  CHECK(op_rank(inner_deriv(e(2, 1, 1) - e(2, 2, 2))) == 2);
  CHECK(op_trace(OperatorN::identity(3)) == GaussScalar(9));
  CHECK_FALSE(in_sl(OperatorN::identity(3)));
  CHECK(op_rank(inner_deriv(e(5, 1, 2))) == 8);
}

TEST_CASE("skewness predicate agrees with the quantified form") {
  OperatorN r = tensor(e(4, 1, 2), e(4, 3, 4)) - tensor(e(4, 3, 4), e(4, 1, 2));
  CHECK(in_so(r));
  CHECK(in_so_by_pairs(r));
  std::mt19937_64 rng(8);
  for (int k = 0; k < 30; ++k) {
    MatN a = testing::random_mat(rng, 3), b = testing::random_mat(rng, 3);
    OperatorN t = k % 2 ? tensor(a, b) - tensor(b, a) : tensor(a, b);
    if (k % 5 == 0) t = t + inner_deriv(testing::random_mat(rng, 3));
    CHECK(in_so(t) == in_so_by_pairs(t));
  }
  CHECK_FALSE(in_so(OperatorN::identity(3)));
}

TEST_CASE("skew operators are closed under bracket") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 5; ++k) {
    MatN a = testing::random_mat(rng, 3), b = testing::random_mat(rng, 3);
    MatN c = testing::random_mat(rng, 3), d = testing::random_mat(rng, 3);
    OperatorN s = tensor(a, b) - tensor(b, a);
    OperatorN t = tensor(c, d) - tensor(d, c);
    REQUIRE(in_so(s));
    CHECK(in_so(op_bracket(s, t)));
  }
}

TEST_CASE("gl(n^2-1) predicate matches its constraint rows") {
  std::mt19937_64 rng(10);
  auto rows = gl_n2m1_constraints(3);
  for (int k = 0; k < 20; ++k) {
    OperatorN t = testing::random_op(rng, 3, 1);
    if (k % 2) t = compose(inner_deriv(testing::random_mat(rng, 3)), inner_deriv(testing::random_mat(rng, 3)));
    bool by_rows = std::all_of(rows.begin(), rows.end(), [&](const Vector& r) { return dot(r, t.vec()).is_zero(); });
    CHECK(by_rows == in_gl_n2m1(t));
  }
}

TEST_CASE("t matrices") {
  CHECK(t_matrix(GaussScalar(1), GaussScalar(1), 3) == OperatorN::identity(3));
  OperatorN t = t_matrix(GaussScalar(2), GaussScalar(3), 3);
  CHECK(apply(t, identity(3)) == GaussScalar(3) * identity(3));
  CHECK(apply(t, e(3, 1, 2)) == GaussScalar(2) * e(3, 1, 2));
  CHECK(compose(t, t_matrix_inverse(GaussScalar(2), GaussScalar(3), 3)) == OperatorN::identity(3));
  CHECK_THROWS_AS(t_matrix_inverse(GaussScalar(0), GaussScalar(3), 3), Error);
}

TEST_CASE("rank of x -> ex + xf is at least n") {
  std::mt19937_64 rng(11);
  const std::size_t n = 4;
  for (int k = 0; k < 10; ++k) {
    MatN ee = testing::random_mat(rng, n), f = testing::random_mat(rng, n);
    if (traceless_part(ee).is_zero() || traceless_part(f).is_zero()) continue;
    OperatorN t = tensor(ee, identity(n)) + tensor(identity(n), f);
    CHECK(op_rank(t) >= n);
  }
}
