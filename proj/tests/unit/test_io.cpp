#include <doctest.h>

#include "idalg/algebra/catalog.hpp"
#include "idalg/error.hpp"
#include "idalg/io/json.hpp"
#include "test_support.hpp"

using namespace idalg;
using io::Json;
using testing::e;

TEST_CASE("scalar text") {
  CHECK(io::parse_scalar_text("3") == GaussScalar(3));
  CHECK(io::parse_scalar_text("-1/2") == GaussScalar(Rational(-1, 2)));
  CHECK(io::parse_scalar_text("i") == GaussScalar::i());
  CHECK(io::parse_scalar_text("-i") == -GaussScalar::i());
  CHECK(io::parse_scalar_text("2/3i") == GaussScalar(Rational(0), Rational(2, 3)));
  CHECK(io::parse_scalar_text("1/2-3i") == GaussScalar(Rational(1, 2), Rational(-3)));
  CHECK(io::parse_scalar_text("-1+i") == GaussScalar(Rational(-1), Rational(1)));
  CHECK_THROWS_AS(io::parse_scalar_text("1/0x"), Error);
  CHECK_THROWS_AS(io::parse_scalar_text(""), Error);
}

TEST_CASE("scalar JSON round-trip") {
  for (const GaussScalar& s : {GaussScalar(0), GaussScalar(Rational(-7, 3)), GaussScalar::i(),
                               GaussScalar(Rational(1, 2), Rational(-5, 4))}) {
    CHECK(io::scalar_from_json(io::scalar_to_json(s)) == s);
  }
  CHECK(io::scalar_from_json(Json::parse(R"({"re":"1/2","im":"3"})")) == GaussScalar(Rational(1, 2), Rational(3)));
  CHECK(io::scalar_from_json(Json(4)) == GaussScalar(4));
  CHECK_THROWS_AS(io::scalar_from_json(Json(1.5)), Error);
}

TEST_CASE("matrix JSON") {
  std::mt19937_64 rng(2);
  MatN x = testing::random_mat(rng, 3);
  x(0, 1) = GaussScalar(Rational(1, 3), Rational(2));
  CHECK(io::matrix_from_json(io::matrix_to_json(x), 3) == x);
  CHECK(io::matrix_from_json(Json::parse(R"({"e":[1,3]})"), 3) == e(3, 1, 3));
  CHECK(io::matrix_from_json(Json::parse(R"({"sum":[{"e":[1,1]},{"scale":["-1",{"id":true}]}]})"), 2) ==
        e(2, 1, 1) - identity(2));
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"({"e":[1,4]})"), 3), Error);
  CHECK_THROWS_AS(io::matrix_from_json(Json::parse(R"([["1","2"]])"), 2), Error);
}

TEST_CASE("operator terms") {
  const std::size_t n = 3;
  CHECK(io::operator_from_json(Json::parse(R"({"tensor":[{"e":[1,2]},{"e":[2,3]}]})"), n) ==
        tensor(e(n, 1, 2), e(n, 2, 3)));
  CHECK(io::operator_from_json(Json::parse(R"({"ad":{"e":[2,1]}})"), n) == inner_deriv(e(n, 2, 1)));
  CHECK(io::operator_from_json(Json::parse(R"({"t":["2","1/3"]})"), n) ==
        t_matrix(GaussScalar(2), GaussScalar(Rational(1, 3)), n));
  CHECK(io::operator_from_json(Json::parse(R"({"scale":["i",{"identity":true}]})"), n) ==
        GaussScalar::i() * OperatorN::identity(n));
  CHECK(io::operator_from_json(Json::parse(R"({"w":[{"e":[1,2]},"1"]})"), n) == w_map(e(n, 1, 2), GaussScalar(1)));
  CHECK(io::operator_from_json(Json::parse(R"({"hwv":"V8"})"), n) == Catalog::get(n).hwv("V8"));
  OperatorN sum = io::operator_from_json(
      Json::parse(R"({"sum":[{"tensor":[{"e":[1,1]},{"id":true}]},{"scale":["-1",{"tensor":[{"id":true},{"e":[1,1]}]}]}]})"),
      n);
  CHECK(sum == inner_deriv(e(n, 1, 1)));
  CHECK_THROWS_AS(io::operator_from_json(Json::parse(R"({"frob":1})"), n), Error);
}

TEST_CASE("dense operator round-trip") {
  std::mt19937_64 rng(6);
  OperatorN t = testing::random_unit_op(rng, 2, 3);
  CHECK(io::operator_from_json(io::operator_to_json(t), 2) == t);
  CHECK(io::generators_from_json(io::operator_to_json(t), 2) == std::vector<OperatorN>{t});
}

TEST_CASE("generator lists") {
  const std::size_t n = 3;
  const Catalog& cat = Catalog::get(n);
  auto gens = io::generators_from_json(Json::parse(R"({"gens":[{"g":true},{"ad":{"e":[1,2]}}]})"), n);
  CHECK(gens.size() == 9);
  CHECK(span_of(as_vectors(gens), cat.ambient_dim()) == cat.g());
  CHECK(io::generators_from_json(Json::parse(R"([{"so_n2":true}])"), n).size() == cat.ambient("so2").dim());
  CHECK(io::generators_from_json(Json::parse(R"([{"W":"1/2"}])"), n).size() == 8);
  CHECK_THROWS_AS(io::generators_from_json(Json::parse(R"([{"g":false}])"), n), Error);
}

TEST_CASE("label JSON") {
  for (const auto& l : sweep_labels()) CHECK(io::label_from_json(io::label_to_json(l)) == l);
  Json j = io::label_to_json(label_from_kind("LIST_I_5"));
  CHECK(j.dump() == R"({"kind":"LIST_I_5"})");
  CHECK_THROWS_AS(io::label_from_json(Json::parse(R"({"lambda":"1"})")), Error);
}

TEST_CASE("polynomial JSON") {
  Json j = Json::parse(R"({"l":3,"terms":[{"perm":[1,2,3],"coeff":"1"},{"perm":[2,1,3],"coeff":"-1/2"}]})");
  MultilinearPoly f = io::poly_from_json(j);
  CHECK(f.l == 3);
  REQUIRE(f.terms.size() == 2);
  CHECK(f.terms[1].perm == std::vector<std::size_t>{1, 0, 2});
  CHECK(f.terms[1].coeff == GaussScalar(Rational(-1, 2)));
  CHECK(io::poly_to_json(f) == j);
  CHECK_THROWS_AS(io::poly_from_json(Json::parse(R"({"l":2,"terms":[{"perm":[1,1],"coeff":"1"}]})")), Error);
  CHECK_THROWS_AS(io::poly_from_json(Json::parse(R"({"l":2,"terms":[{"perm":[0,1],"coeff":"1"}]})")), Error);
}
