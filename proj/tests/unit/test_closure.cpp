#include "doctest.h"
#include "idalg/algebra/catalog.hpp"
#include "idalg/algebra/closure.hpp"
#include "test_support.hpp"

using namespace idalg;
using testing::e;

namespace {

// Closure by repeatedly adding all pairwise products until nothing changes.
Subspace naive_closure(ClosureKind kind, std::span<const OperatorN> gens, std::size_t n) {
  Subspace s = span_of(as_vectors(gens), n * n * n * n);
  for (;;) {
    auto ops = as_operators(s, n);
    std::vector<Vector> all(s.basis().begin(), s.basis().end());
    for (const auto& a : ops)
      for (const auto& b : ops) all.push_back((kind == ClosureKind::Lie ? op_bracket(a, b) : compose(a, b)).vec());
    Subspace next = span_of(all, s.ambient_dim());
    if (next == s) return s;
    s = next;
  }
}

std::vector<OperatorN> g_basis(std::size_t n) { return as_operators(Catalog::get(n).g(), n); }

}  // namespace

TEST_CASE("closure examples") {
  std::vector<OperatorN> units;
  for (std::size_t i = 1; i <= 5; ++i)
    for (std::size_t j = 1; j <= 5; ++j)
      if (i != j) units.push_back(inner_deriv(e(5, i, j)));
  CHECK(lie_closure(units, 5).closure.dim() == 24);
  CHECK(lie_closure(units, 5, {false}).closure.dim() == 24);

  std::vector<OperatorN> one{OperatorN::identity(3)};
  CHECK(assoc_closure(one, 3).closure.dim() == 1);

  CHECK(assoc_closure(g_basis(3), 3).closure.dim() == 64);
  CHECK(assoc_closure(g_basis(3), 3, {false}).closure.dim() == 64);

  std::vector<OperatorN> mult;
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j) {
      mult.push_back(tensor(e(3, i, j), identity(3)));
      mult.push_back(tensor(identity(3), e(3, i, j)));
    }
  CHECK(assoc_closure(mult, 3).closure.dim() == 81);
}

TEST_CASE("closure routes agree with the naive fixpoint") {
  std::mt19937_64 rng(21);
  const std::size_t n = 3;
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<OperatorN> gens;
    if (trial % 2 == 0) gens = g_basis(n);
    const int extra = 1 + static_cast<int>(rng() % 2);
    for (int k = 0; k < extra; ++k) gens.push_back(testing::random_unit_op(rng, n));
    for (auto kind : {ClosureKind::Lie, ClosureKind::Assoc}) {
      Subspace fast = closure(kind, gens, n).closure;
      Subspace plain = closure(kind, gens, n, {false}).closure;
      CHECK(fast == plain);
      CHECK(fast == naive_closure(kind, gens, n));
    }
  }
}

TEST_CASE("closedness predicates agree with all pairs") {
  const Catalog& c = Catalog::get(3);
  std::vector<Subspace> cases{c.g(), c.ambient("so2"), c.ambient("gl2m1"), c.ambient("sl2"),
                              sum(c.g(), c.module("V3").space), sum(c.g(), c.module("p").space),
                              sum(c.g(), c.module("V4").space), sum(c.ambient("gl2m1"), c.module("p").space),
                              c.module("V5").space, sum(c.g(), c.module("V8").space)};
  std::mt19937_64 rng(22);
  for (int k = 0; k < 4; ++k) {
    std::vector<OperatorN> ops{testing::random_op(rng, 3, 1), testing::random_op(rng, 3, 1)};
    cases.push_back(span_of(as_vectors(ops), 81));
  }
  for (const auto& s : cases) {
    CHECK(is_lie_closed(s, 3) == is_lie_closed_all_pairs(s, 3));
    CHECK(is_assoc_closed(s, 3) == is_assoc_closed_all_pairs(s, 3));
  }
}

TEST_CASE("closedness facts at n=5") {
  const Catalog& c = Catalog::get(5);
  CHECK(is_lie_closed(c.ambient("so2"), 5));
  CHECK_FALSE(is_lie_closed(sum(c.g(), c.module("V3").space), 5));
  CHECK(is_assoc_closed(sum(c.ambient("gl2m1"), c.module("p").space), 5));
  CHECK(is_lie_closed(sum(c.ambient("so2m1"), c.module("V3").space), 5));
}

TEST_CASE("closure facts at n=5") {
  const Catalog& c = Catalog::get(5);
  auto with = [&](std::vector<OperatorN> extra) {
    auto v = g_basis(5);
    v.insert(v.end(), extra.begin(), extra.end());
    return v;
  };
  CHECK(contains(lie_closure(with({c.hwv("V5")}), 5).closure, c.ambient("sl2m1")));
  CHECK(contains(lie_closure(with({c.hwv("V6")}), 5).closure, c.ambient("sl2m1")));
  CHECK(contains(lie_closure(with({c.hwv("V1")}), 5).closure, c.ambient("so2m1")));
  CHECK(contains(lie_closure(with({c.hwv("V2")}), 5).closure, c.ambient("so2m1")));
  CHECK(lie_closure(with({c.hwv("V3")}), 5).closure.dim() > 48);
  auto gpq = with(as_operators(c.module("p").space, 5));
  for (const auto& op : as_operators(c.module("q").space, 5)) gpq.push_back(op);
  CHECK(lie_closure(gpq, 5).closure == c.ambient("sl2"));
}

TEST_CASE("closure is idempotent and monotone") {
  std::mt19937_64 rng(23);
  const std::size_t n = 3;
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<OperatorN> small{testing::random_unit_op(rng, n)};
    if (trial % 2) small.push_back(inner_deriv(unit(n, rng() % n, rng() % n)));
    auto big = small;
    big.push_back(testing::random_unit_op(rng, n));
    for (auto kind : {ClosureKind::Lie, ClosureKind::Assoc}) {
      Subspace a = closure(kind, small, n).closure;
      CHECK(closure(kind, as_operators(a, n), n).closure == a);
      CHECK(contains(closure(kind, big, n).closure, a));
    }
    Subspace lie = closure(ClosureKind::Lie, small, n).closure;
    CHECK(contains(closure(ClosureKind::Assoc, as_operators(lie, n), n).closure, lie));
  }
}
