// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "idalg/algebra/catalog.hpp"
#include "idalg/algebra/classifier.hpp"
#include "idalg/algebra/closure.hpp"
#include "idalg/algebra/corollary.hpp"
#include "idalg/error.hpp"

using namespace idalg;

namespace {

constexpr std::size_t N = 5;

bool is_real(const MatN& x) {
  for (std::size_t i = 0; i < x.n(); ++i) {
    for (std::size_t j = 0; j < x.n(); ++j) {
      if (!x(i, j).is_real()) return false;
    }
  }
  return true;
}

Subspace span1(const OperatorN& t) { return span_of(std::vector<Vector>{t.vec()}, t.vec().dim()); }

std::vector<OperatorN> g_and(const Catalog& cat, std::vector<OperatorN> extra) {
  std::vector<OperatorN> gens = as_operators(cat.g(), cat.n());
  for (auto& t : extra) gens.push_back(std::move(t));
  return gens;
}

// Collects failed sub-checks of one criterion so the line can say which ones.
struct Criterion {
  std::vector<std::string> failed;
  void expect(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
};

bool dimension_ledger(Criterion& c) {
  const Catalog& cat = Catalog::get(N);
  const std::vector<std::pair<const char*, std::size_t>> table{
      {"g", 24},  {"V1", 126}, {"V2", 126}, {"V3", 24}, {"V4", 24}, {"V5", 200},
      {"V6", 75}, {"V7", 24},  {"V8", 1},   {"p", 24},  {"q", 24},  {"V4p", 24}};
  for (const auto& [name, dim] : table) {
    const GModule& m = cat.module(name);
    c.expect(m.space.dim() == dim && m.expected_dim == dim && m.certified, std::string("dim ") + name);
    c.expect(cat.is_g_stable(m.space), std::string("g-stable ") + name);
  }
  return c.failed.empty();
}

bool decompositions(Criterion& c) {
  const Catalog& cat = Catalog::get(N);
  auto mod = [&](const char* name) -> const Subspace& { return cat.module(name).space; };
  Subspace total(cat.ambient_dim());
  std::size_t dims = 0;
  for (const char* name : {"g", "V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8"}) {
    total = sum(total, mod(name));
    dims += mod(name).dim();
  }
  c.expect(total == cat.ambient("sl2") && total.dim() == 624 && dims == 624, "sl(n^2) = g + V1 + ... + V8");
  Subspace so_m1 = sum(sum(cat.g(), mod("V1")), mod("V2"));
  c.expect(so_m1 == cat.ambient("so2m1") && so_m1.dim() == 276, "so(n^2-1) = g + V1 + V2");
  Subspace so = sum(so_m1, mod("V3"));
  c.expect(so == cat.ambient("so2") && so.dim() == 300, "so(n^2) = so(n^2-1) + V3");
  Subspace sl_m1 = sum(sum(sum(so_m1, mod("V4p")), mod("V5")), mod("V6"));
  c.expect(sl_m1 == cat.ambient("sl2m1") && sl_m1.dim() == 575, "sl(n^2-1) = so(n^2-1) + V4' + V5 + V6");
  Subspace sl = sum(sum(sum(sl_m1, mod("p")), mod("q")), mod("V8"));
  c.expect(sl == cat.ambient("sl2"), "sl(n^2) = sl(n^2-1) + p + q + V8");
  Subspace pq = sum(mod("p"), mod("q"));
  c.expect(sum(pq, mod("V4")) == sum(pq, mod("V4p")), "p + q + V4 = p + q + V4'");
  return c.failed.empty();
}

bool highest_weights(Criterion& c) {
  const Catalog& cat = Catalog::get(N);
  for (const auto& name : module_names()) {
    OperatorN v = cat.hwv(name);
    bool killed = true;
    for (const auto& r : cat.raising()) killed = killed && op_bracket(r, v).is_zero();
    c.expect(!v.is_zero() && killed && cat.module(name).space.member(v.vec()), "hwv " + name);
  }
  for (const char* name : {"V1", "V2", "V5", "V6"}) {
    const GModule& m = cat.module(name);
    c.expect(cat.weight_matches(*m.hwv, m.weight), std::string("weight ") + name);
  }
  return c.failed.empty();
}

bool closure_facts(Criterion& c) {
  const Catalog& cat = Catalog::get(N);
  for (const char* v : {"V5", "V6"}) {
    Subspace s = lie_closure(g_and(cat, {cat.hwv(v)}), N).closure;
    c.expect(contains(s, cat.ambient("sl2m1")), std::string("g + ") + v + " generates sl(n^2-1)");
  }
  std::vector<OperatorN> pq = as_operators(cat.module("p").space, N);
  for (auto& t : as_operators(cat.module("q").space, N)) pq.push_back(std::move(t));
  Subspace all = lie_closure(g_and(cat, pq), N).closure;
  c.expect(all == cat.ambient("sl2") && all.dim() == 624, "g + p + q generates sl(n^2)");
  Subspace so_m1 = lie_closure(g_and(cat, {cat.hwv("V1")}), N).closure;
  c.expect(contains(so_m1, cat.ambient("so2m1")), "g + V1 generates so(n^2-1)");
  c.expect(!is_lie_closed(sum(cat.g(), cat.module("V3").space), N), "g + V3 is not Lie");
  Subspace so = sum(cat.ambient("so2m1"), cat.module("V3").space);
  c.expect(is_lie_closed(so, N) && so == cat.ambient("so2"), "so(n^2-1) + V3 = so(n^2)");
  return c.failed.empty();
}

bool w_family(Criterion& c) {
  const Catalog& cat = Catalog::get(N);
  const GaussScalar nn(static_cast<std::int64_t>(N));
  for (std::int64_t l : {0, 1, -1, 3}) {
    GaussScalar lambda(l), mu = mu_of(lambda, N);
    Subspace s = sum(cat.g(), cat.w_lambda(lambda));
    GaussScalar coef = nn * lambda * mu + GaussScalar(2) * lambda + GaussScalar(2) * mu;
    c.expect(is_lie_closed(s, N) && s.dim() == 48 && coef.is_zero(), "W(" + lambda.str() + ")");
  }
  bool rejected = false;
  try {
    (void)cat.w_lambda(GaussScalar(Rational(-2, static_cast<std::int64_t>(N))));
  } catch (const Error& err) {
    rejected = err.code() == Errc::SingularParameter;
  }
  c.expect(rejected, "lambda = -2/n rejected");
  return c.failed.empty();
}

bool classifier_round_trip(Criterion& c) {
  std::size_t plain = 0;
  for (const auto& label : sweep_labels()) {
    if (!label.lambda && !label.t_ratio && !label.ft) ++plain;
    try {
      Subspace s = construct(label, N);
      ClassLabel got = classify(s, N);
      bool same = got == canonicalize(label, N) && construct(got, N) == s;
      c.expect(same, label.kind());
    } catch (const Error& err) {
      c.expect(false, label.kind() + ": " + err.what());
    }
  }
  c.expect(plain == 19, "18 list entries plus sl(n^2) in the sweep");
  return c.failed.empty();
}

bool corollary_suite(Criterion& c) {
  const Catalog& cat = Catalog::get(N);
  Subspace t = trace_condition_space(N);
  c.expect(t == cat.g() && t.dim() == 24, "trace condition space = g");
  auto ws = kernel_witnesses(N);
  c.expect(ws.size() == 6, "witness count");
  for (const auto& w : ws) {
    c.expect(breaks_kernel(w.op, w.x, w.y) && !kernel_is_subalgebra(w.op).is_subalgebra, "witness " + w.name);
  }
  if (ws.size() == 6) {
    c.expect(cat.ambient("so2m1").member(ws[0].op.vec()), "so witness family");
    c.expect(cat.module("p").space.member(ws[1].op.vec()), "p witness family");
    c.expect(cat.module("q").space.member(ws[2].op.vec()), "q witness family");
    c.expect(cat.w_lambda(GaussScalar(1)).member(ws[3].op.vec()), "W witness family");
    c.expect(!is_real(ws[3].x) || !is_real(ws[3].y), "W witness uses Q(i)");
    Subspace g_t0 = sum(sum(cat.g(), span1(OperatorN::identity(N))), span1(trace_one(N)));
    for (std::size_t k : {4u, 5u}) {
      c.expect(g_t0.member(ws[k].op.vec()) && !cat.g().member(ws[k].op.vec()), "Ft witness family " + ws[k].name);
    }
  }
  for (const auto& f : {MultilinearPoly::monomial(2), MultilinearPoly::monomial(3)}) {
    c.expect(f_derivation_space(f, N, true) == cat.g(), "f-derivations of degree " + std::to_string(f.l));
  }
  return c.failed.empty();
}

bool density_suite(Criterion& c) {
  for (std::size_t m : {2u, 3u, 5u}) {
    CssReport r = verify_css_equivalence(m, {.certify = true, .conforming_samples = 10, .seed = 1});
    std::size_t want = (m * m - 1) * (m * m - 1);
    c.expect(r.ok() && r.css_dim == want && r.closure_dim == want, "css(" + std::to_string(m) + ")");
  }
  Subspace mult = assoc_closure(multiplication_generators(3), 3).closure;
  c.expect(mult.dim() == 81, "multiplication algebra at n=3");
  DensityReport d = density_check(3, 4, 50, 1);
  c.expect(d.instances == 50 && d.ok(), "4-point interpolation");
  return c.failed.empty();
}

bool rank_properties(Criterion& c) {
  for (std::int64_t l : {0, 1, 3}) {
    RankReport r = rank_floor_check(GaussScalar(l), N, 200, 1);
    c.expect(r.samples == 200 && r.floor == N - 2 && r.below_floor == 0 && r.min_rank >= N - 2,
             "rank floor lambda = " + std::to_string(l));
    c.expect(r.two_term_maps > 0 && r.two_term_max_rank <= 2, "two-term maps lambda = " + std::to_string(l));
  }
  return c.failed.empty();
}

// Sparse random vectors on a shared support window so pairs overlap.
Vector random_sparse(std::mt19937_64& rng, std::size_t dim, std::size_t window, std::size_t offset) {
  Accumulator acc(dim);
  for (int k = 0; k < 3; ++k) {
    auto idx = static_cast<std::uint32_t>(offset + rng() % window);
    acc.add(idx, GaussScalar(static_cast<std::int64_t>(rng() % 7) - 3));
  }
  return acc.take();
}

bool kernel_properties(Criterion& c) {
  std::mt19937_64 rng(10);
  const std::size_t dim = 625;
  std::size_t with_overlap = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t ka = 1 + rng() % 50, kb = 1 + rng() % 50, window = 40 + rng() % 200;
    std::vector<Vector> ra, rb;
    for (std::size_t k = 0; k < ka; ++k) ra.push_back(random_sparse(rng, dim, window, 0));
    for (std::size_t k = 0; k < kb; ++k) rb.push_back(random_sparse(rng, dim, window, rng() % 40));
    // Share a few combinations of A's rows so the intersection is usually nonzero.
    for (std::size_t k = 0; k < rb.size() && k < 3; ++k) rb[k] = ra[rng() % ra.size()] + ra[rng() % ra.size()];
    Subspace a = span_of(ra, dim), b = span_of(rb, dim);
    Subspace s = sum(a, b), i = intersect(a, b);
    bool ok = s.dim() + i.dim() == a.dim() + b.dim() && contains(a, i) && contains(b, i) &&
              i == intersect_by_annihilators(a, b);
    if (i.dim() > 0) ++with_overlap;
    c.expect(ok, "Grassmann trial " + std::to_string(trial));
  }
  c.expect(with_overlap > 500, "most Grassmann pairs intersect");

  std::mt19937_64 grng(20);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = trial % 2 ? 3 : 2;
    ClosureKind kind = trial % 4 < 2 ? ClosureKind::Lie : ClosureKind::Assoc;
    std::vector<OperatorN> gens;
    std::size_t count = 1 + grng() % 3;
    for (std::size_t k = 0; k < count; ++k) {
      OperatorN t(n);
      for (int term = 0; term < 2; ++term) {
        MatN x = unit(n, grng() % n, grng() % n), y = unit(n, grng() % n, grng() % n);
        t = t + GaussScalar(static_cast<std::int64_t>(grng() % 5) - 2) * tensor(x, y);
      }
      gens.push_back(t);
    }
    // Alternate sets get g added so the module route of the engine is exercised too.
    if (trial % 3 == 0) {
      for (auto& t : as_operators(Catalog::get(n).g(), n)) gens.push_back(t);
    }
    Subspace once = closure(kind, gens, n).closure;
    Subspace twice = closure(kind, as_operators(once, n), n).closure;
    Subspace plain = closure(kind, gens, n, {.use_module_structure = false}).closure;
    bool closed = kind == ClosureKind::Lie ? is_lie_closed_all_pairs(once, n) : is_assoc_closed_all_pairs(once, n);
    c.expect(once == twice && once == plain && closed, "closure trial " + std::to_string(trial));
  }
  return c.failed.empty();
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<bool(Criterion&)>>> criteria{
      {"dimension ledger (n=5)", dimension_ledger},
      {"decomposition identities (n=5)", decompositions},
      {"highest-weight certification", highest_weights},
      {"closure facts (n=5)", closure_facts},
      {"W(lambda) family", w_family},
      {"classifier round-trip", classifier_round_trip},
      {"corollary suite (n=5)", corollary_suite},
      {"density suite", density_suite},
      {"rank properties", rank_properties},
      {"kernel-level properties", kernel_properties}};
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = run(c);
    } catch (const std::exception& err) {
      c.failed.push_back(std::string("exception: ") + err.what());
    }
    ok = ok && c.failed.empty();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s (%.2fs)\n", ok ? "PASS" : "FAIL", index, name, secs);
    for (std::size_t k = 0; k < c.failed.size() && k < 10; ++k) std::printf("       failed: %s\n", c.failed[k].c_str());
    if (!ok) ++failures;
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
