#include <random>

#include "doctest.h"
#include "idalg/error.hpp"
#include "idalg/linalg/subspace.hpp"

using namespace idalg;

namespace {

Vector real_vec(std::initializer_list<std::int64_t> xs) {
  std::vector<GaussScalar> v;
  for (auto x : xs) v.emplace_back(x);
  return Vector::from_dense(v);
}

// Textbook dense elimination over mpq, used as the reference for rank and RREF.
std::vector<std::vector<mpq_class>> oracle_rref(std::vector<std::vector<mpq_class>> a) {
  std::size_t r = 0;
  const std::size_t m = a.size(), d = m ? a[0].size() : 0;
  for (std::size_t c = 0; c < d && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    mpq_class inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t k = 0; k < d; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

std::vector<Vector> random_rows(std::mt19937_64& rng, std::size_t m, std::size_t d, int range, double density) {
  std::uniform_int_distribution<int> coef(-range, range);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m; ++i) {
    Vector v(d);
    for (std::uint32_t k = 0; k < d; ++k) {
      if (u(rng) < density) v.push_back(k, GaussScalar(coef(rng)));
    }
    rows.push_back(std::move(v));
  }
  return rows;
}

std::vector<std::vector<mpq_class>> to_mpq(std::span<const Vector> rows, std::size_t d) {
  std::vector<std::vector<mpq_class>> a;
  for (const auto& r : rows) {
    std::vector<mpq_class> row(d, 0);
    for (const auto& e : r.entries()) row[e.index] = e.value.re().to_mpq();
    a.push_back(row);
  }
  return a;
}

}  // namespace

TEST_CASE("rref of dependent rows") {
  std::vector<Vector> rows{real_vec({2, 4}), real_vec({1, 2})};
  auto res = rref(rows, 2);
  CHECK(res.rank == 1);
  CHECK(res.space.basis()[0] == real_vec({1, 2}));

  std::vector<Vector> rows3{real_vec({1, 0, 1}), real_vec({0, 1, 1}), real_vec({1, 1, 2})};
  CHECK(rref(rows3, 3).rank == 2);
}

TEST_CASE("rref rejects mismatched dimension") {
  std::vector<Vector> rows{real_vec({1, 2}), real_vec({1, 2, 3})};
  CHECK_THROWS_AS(rref(rows, 2), Error);
}

TEST_CASE("intersection of coordinate planes") {
  std::vector<Vector> a{real_vec({1, 0, 0}), real_vec({0, 1, 0})};
  std::vector<Vector> b{real_vec({0, 1, 0}), real_vec({0, 0, 1})};
  Subspace sa = span_of(a, 3), sb = span_of(b, 3);
  std::vector<Vector> expect{real_vec({0, 1, 0})};
  CHECK(intersect(sa, sb) == span_of(expect, 3));
  CHECK(intersect_by_residuals(sa, sb) == intersect_by_annihilators(sa, sb));
  CHECK(sum(sa, sb).dim() == 3);
}

TEST_CASE("kernel of a rank one map") {
  std::vector<Vector> rows{real_vec({1, 1, 1})};
  Subspace k = solve_homogeneous(rows, 3);
  CHECK(k.dim() == 2);
  for (const auto& v : k.basis()) CHECK(dot(v, rows[0]).is_zero());
}

TEST_CASE("rref matches reference elimination on random input") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t m = 2 + rng() % 12, d = 2 + rng() % 12;
    double density = (trial % 3 == 0) ? 0.15 : 0.7;
    auto rows = random_rows(rng, m, d, 5, density);
    auto expect = oracle_rref(to_mpq(rows, d));
    Subspace got = rref(rows, d).space;
    REQUIRE(got.dim() == expect.size());
    for (std::size_t i = 0; i < expect.size(); ++i) {
      for (std::size_t k = 0; k < d; ++k) CHECK(got.basis()[i].at(k) == GaussScalar(Rational(expect[i][k])));
    }
    auto sparse = detail::sparse_rref(rows, d);
    CHECK(sparse == got);
    if (auto dense = detail::dense_rref(rows, d)) CHECK(*dense == got);
  }
}

TEST_CASE("dense route bails out on entry growth") {
  std::vector<Vector> rows;
  std::mt19937_64 rng(11);
  rows = random_rows(rng, 20, 20, 1 << 20, 1.0);
  auto got = rref(rows, 20);
  CHECK(got.rank == 20);
  CHECK(got.space == detail::sparse_rref(rows, 20));
}

TEST_CASE("intersection routes agree and satisfy the dimension formula") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 3 + rng() % 10;
    auto shared = random_rows(rng, rng() % 3, d, 3, 0.6);
    auto ra = random_rows(rng, rng() % d, d, 3, 0.5);
    auto rb = random_rows(rng, rng() % d, d, 3, 0.5);
    ra.insert(ra.end(), shared.begin(), shared.end());
    rb.insert(rb.end(), shared.begin(), shared.end());
    Subspace a = span_of(ra, d), b = span_of(rb, d);
    Subspace i1 = intersect_by_residuals(a, b), i2 = intersect_by_annihilators(a, b);
    CHECK(i1 == i2);
    CHECK(i1 == intersect(a, b));
    CHECK(i1.dim() + sum(a, b).dim() == a.dim() + b.dim());
    CHECK(contains(a, i1));
    CHECK(contains(b, i1));
  }
}

TEST_CASE("gaussian entries and membership") {
  GaussScalar i = GaussScalar::i();
  Vector v(2), w(2);
  v.push_back(0, GaussScalar(1));
  v.push_back(1, i);
  w.push_back(0, i);
  w.push_back(1, GaussScalar(-1));
  std::vector<Vector> rows{v, w};
  CHECK(rref(rows, 2).rank == 1);
  Subspace s = span_of(rows, 2);
  CHECK(MembershipTest(s)(w));
  CHECK_FALSE(MembershipTest(s)(Vector::unit(2, 0)));
}

TEST_CASE("solve_linear and coordinates") {
  std::vector<Vector> eq{real_vec({1, 1}), real_vec({1, -1})};
  std::vector<GaussScalar> rhs{GaussScalar(3), GaussScalar(1)};
  auto x = solve_linear(eq, rhs, 2);
  REQUIRE(x);
  CHECK(x->at(0) == GaussScalar(2));
  CHECK(x->at(1) == GaussScalar(1));
  std::vector<Vector> bad{real_vec({1, 1}), real_vec({2, 2})};
  CHECK_FALSE(solve_linear(bad, rhs, 2));
  std::vector<Vector> vs{real_vec({1, 0, 1}), real_vec({0, 1, 1})};
  auto c = coordinates(vs, real_vec({2, 3, 5}));
  REQUIRE(c);
  CHECK((*c)[0] == GaussScalar(2));
  CHECK_FALSE(coordinates(vs, real_vec({1, 1, 1})));
}

TEST_CASE("kernel solver saturates") {
  KernelSolver ks(3);
  CHECK(ks.add(real_vec({1, 0, 0})));
  CHECK_FALSE(ks.add(real_vec({2, 0, 0})));
  ks.add(real_vec({0, 1, 0}));
  CHECK(ks.kernel_dim() == 1);
  ks.add(real_vec({1, 1, 1}));
  CHECK(ks.saturated());
  CHECK(ks.kernel().dim() == 0);
}

TEST_CASE("rational arithmetic crosses the small limit") {
  Rational big(Rational::kSmallLimit - 1);
  Rational sq = big * big;
  CHECK_FALSE(sq.is_small());
  Rational back = sq / big;
  CHECK(back.is_small());
  CHECK(back == big);
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational(9, 4).sqrt() == Rational(3, 2));
  CHECK_FALSE(Rational(2).sqrt());
  auto r = GaussScalar(Rational(-4)).sqrt();
  REQUIRE(r);
  CHECK(*r == GaussScalar(0, 2));
}
