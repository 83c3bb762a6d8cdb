#include <doctest.h>

#include "idalg/algebra/catalog.hpp"
#include "idalg/algebra/classifier.hpp"
#include "idalg/algebra/closure.hpp"
#include "idalg/error.hpp"
#include "test_support.hpp"

using namespace idalg;
using testing::e;

namespace {

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an error");
  return Errc::Parse;
}

ClassLabel list(Family f, int k) {
  ClassLabel l;
  l.family = f;
  l.index = k;
  return l;
}

}  // namespace

TEST_CASE("label kinds round-trip") {
  for (const auto& l : sweep_labels()) CHECK(label_from_kind(l.kind()).family == l.family);
  CHECK(label_from_kind("LIST_II_5").index == 5);
  CHECK_THROWS_AS(label_from_kind("LIST_IV_1"), Error);
  CHECK_THROWS_AS(label_from_kind("LIST_I_7"), Error);
}

TEST_CASE("construct dimensions at n=5") {
  CHECK(construct(list(Family::LIST_III, 3), 5).dim() == 48);
  CHECK(construct(list(Family::LIST_I, 1), 5).dim() == 575);
  CHECK(construct(list(Family::LIST_II, 4), 5).dim() == 277);
  ClassLabel w;
  w.family = Family::G_PLUS_W;
  w.lambda = GaussScalar(1);
  Subspace s = construct(w, 5);
  CHECK(s.dim() == 48);
  CHECK(is_lie_closed(s, 5));
}

TEST_CASE("SO_CONJ is a conjugate of so(n^2)") {
  const Catalog& cat = Catalog::get(5);
  ClassLabel l;
  l.family = Family::SO_CONJ;
  l.t_ratio = GaussScalar(2);
  Subspace s = construct(l, 5);
  CHECK(s == conjugate(cat.ambient("so2"), t_matrix(GaussScalar(2), GaussScalar(1), 5)));
  // Conjugation by t_matrix(r, 1) and t_matrix(-r, 1) agree; only r^2 is seen.
  l.t_ratio = GaussScalar(-2);
  CHECK(construct(l, 5) == s);
  ClassLabel sq;
  sq.family = Family::SO_CONJ;
  sq.t_ratio_sq = GaussScalar(4);
  CHECK(construct(sq, 5) == s);
}

TEST_CASE("classify examples") {
  const Catalog& cat = Catalog::get(5);
  ClassLabel so = classify(cat.ambient("so2"), 5);
  CHECK(so.family == Family::SO_CONJ);
  REQUIRE(so.t_ratio);
  CHECK(*so.t_ratio == GaussScalar(1));

  ClassLabel w0 = classify(sum(cat.g(), cat.w_lambda(GaussScalar(0))), 5);
  CHECK(w0.family == Family::G_PLUS_W);
  REQUIRE(w0.lambda);
  CHECK(w0.lambda->is_zero());

  Subspace i5 = sum(sum(cat.ambient("sl2m1"), cat.module("p").space), cat.module("V8").space);
  ClassLabel l = classify(i5, 5);
  CHECK(l.family == Family::LIST_I);
  CHECK(l.index == 5);

  CHECK(classify(cat.ambient("sl2"), 5).family == Family::SL_N2);
  ClassLabel gl = classify(cat.ambient("gl2"), 5);
  CHECK(gl.family == Family::SL_N2);
  CHECK(gl.ft);
}

TEST_CASE("classify parameter recovery") {
  const Catalog& cat = Catalog::get(5);
  for (std::int64_t r : {3, -3}) {
    Subspace s = conjugate(cat.ambient("so2"), t_matrix(GaussScalar(r), GaussScalar(1), 5));
    ClassLabel l = classify(s, 5);
    REQUIRE(l.t_ratio);
    CHECK(*l.t_ratio == GaussScalar(3));
    CHECK(*l.t_ratio_sq == GaussScalar(9));
  }
  Subspace wi = sum(cat.g(), cat.w_lambda(GaussScalar(Rational(7, 2))));
  ClassLabel l = classify(wi, 5);
  REQUIRE(l.lambda);
  CHECK(*l.lambda == GaussScalar(Rational(7, 2)));
}

TEST_CASE("classify with Ft") {
  const Catalog& cat = Catalog::get(5);
  std::vector<Vector> t{t_matrix(GaussScalar(2), GaussScalar(3), 5).vec()};
  Subspace s = sum(cat.g(), span_of(t, cat.ambient_dim()));
  ClassLabel l = classify(s, 5);
  CHECK(l.family == Family::LIST_III);
  CHECK(l.index == 1);
  REQUIRE(l.ft);
  CHECK(l.ft->first == GaussScalar(1));
  CHECK(l.ft->second == GaussScalar(Rational(3, 2)));
}

TEST_CASE("classifier preconditions") {
  const Catalog& cat = Catalog::get(5);
  CHECK(error_of([&] { classify(cat.module("V5").space, 5); }) == Errc::NotContainingG);
  CHECK(error_of([&] { classify(sum(cat.g(), cat.module("V3").space), 5); }) == Errc::NotLieClosed);
  CHECK(error_of([&] { classify(Catalog::get(3).g(), 3); }) == Errc::UnsupportedN);
  ClassLabel bad;
  bad.family = Family::G_PLUS_W;
  bad.lambda = GaussScalar(Rational(-2, 5));
  CHECK_THROWS_AS(construct(bad, 5), Error);
  ClassLabel so;
  so.family = Family::SO_CONJ;
  so.t_ratio = GaussScalar(0);
  CHECK(error_of([&] { construct(so, 5); }) == Errc::InvalidParameters);
  ClassLabel ft = list(Family::LIST_III, 1);
  ft.ft = std::pair{GaussScalar(1), GaussScalar(-24)};
  CHECK(error_of([&] { construct(ft, 5); }) == Errc::InvalidParameters);
  ClassLabel wft;
  wft.family = Family::G_PLUS_W;
  wft.lambda = GaussScalar(1);
  wft.ft = std::pair{GaussScalar(1), GaussScalar(0)};
  CHECK(error_of([&] { construct(wft, 5); }) == Errc::InvalidParameters);
}

TEST_CASE("every sweep label round-trips") {
  for (const auto& l : sweep_labels()) {
    CAPTURE(l.kind());
    Subspace s = construct(l, 5);
    ClassLabel got = classify(s, 5);
    CHECK(got == canonicalize(l, 5));
    CHECK(construct(got, 5) == s);
  }
}

TEST_CASE("closures of perturbed generator sets classify") {
  std::mt19937_64 rng(31);
  const Catalog& cat = Catalog::get(5);
  std::vector<OperatorN> pool{cat.hwv("V1"), cat.hwv("V3"), cat.hwv("V8"), cat.hwv("p"), cat.hwv("q"),
                              cat.hwv("V4p"), cat.hwv("V5"), w_map(e(5, 1, 5), GaussScalar(2)),
                              t_matrix(GaussScalar(1), GaussScalar(4), 5)};
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<OperatorN> gens = as_operators(cat.g(), 5);
    gens.push_back(pool[rng() % pool.size()]);
    if (trial % 2) gens.push_back(pool[rng() % pool.size()]);
    Subspace s = lie_closure(gens, 5).closure;
    ClassLabel l;
    CHECK_NOTHROW(l = classify(s, 5));
    CHECK(construct(l, 5) == s);
  }
}
