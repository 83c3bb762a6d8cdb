#include "idalg/algebra/corollary.hpp"

#include <algorithm>

#include "idalg/algebra/catalog.hpp"
#include "idalg/algebra/closure.hpp"
#include "idalg/error.hpp"

namespace idalg {

namespace {

std::uint32_t op_index(std::size_t n, std::size_t out, std::size_t in) {
  return static_cast<std::uint32_t>(out * n * n + in);
}

}  // namespace

// ---- trace condition ------------------------------------------------------

Subspace trace_condition_space(std::size_t n) {
  const std::size_t n2 = n * n, amb = n2 * n2;
  KernelSolver solver(amb);
  Accumulator acc(amb);
  auto vi = [n](std::size_t i, std::size_t j) { return i * n + j; };
  // x = e_ab, y = e_cd, z = e_ef:
  //   tr(d(x) y z) = [d = e] d(e_ab)_{fc}
  //   tr(x d(y) z) = [f = a] d(e_cd)_{be}
  //   tr(x y d(z)) = [b = c] d(e_ef)_{da}
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t e = 0; e < n; ++e)
            for (std::size_t f = 0; f < n; ++f) {
              if (d == e) acc.add(op_index(n, vi(f, c), vi(a, b)), GaussScalar(1));
              if (f == a) acc.add(op_index(n, vi(b, e), vi(c, d)), GaussScalar(1));
              if (b == c) acc.add(op_index(n, vi(d, a), vi(e, f)), GaussScalar(1));
              Vector row = acc.take();
              if (!row.is_zero()) solver.add(row);
            }
  for (std::size_t r = 0; r < n2; ++r) {
    for (std::size_t i = 0; i < n; ++i) acc.add(op_index(n, r, vi(i, i)), GaussScalar(1));
    solver.add(acc.take());
  }
  return solver.kernel();
}

GaussScalar trace_condition_value(const OperatorN& d, const MatN& x, const MatN& y, const MatN& z) {
  MatN s = mul(mul(apply(d, x), y), z);
  s += mul(mul(x, apply(d, y)), z);
  s += mul(mul(x, y), apply(d, z));
  return trace(s);
}

// ---- kernels --------------------------------------------------------------

Subspace op_kernel(const OperatorN& t) {
  const std::size_t side = t.side();
  std::vector<Vector> rows(side, Vector(side));
  for (const auto& en : t.vec().entries()) {
    rows[en.index / side].push_back(static_cast<std::uint32_t>(en.index % side), en.value);
  }
  return solve_homogeneous(rows, side);
}

KernelReport kernel_is_subalgebra(const OperatorN& t) {
  KernelReport rep;
  rep.kernel = op_kernel(t);
  std::vector<MatN> basis;
  for (const auto& v : rep.kernel.basis()) basis.push_back(unvectorize(v, t.n()));
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      if (!apply(t, mul(x, y)).is_zero()) {
        rep.is_subalgebra = false;
        rep.witness = std::make_pair(x, y);
        return rep;
      }
    }
  }
  return rep;
}

bool breaks_kernel(const OperatorN& t, const MatN& x, const MatN& y) {
  return apply(t, x).is_zero() && apply(t, y).is_zero() && !apply(t, mul(x, y)).is_zero();
}

std::vector<KernelWitness> kernel_witnesses(std::size_t n, const GaussScalar& lambda) {
  if (n < 4) throw Error(Errc::UnsupportedN, "kernel witnesses use indices up to 4");
  auto e = [n](std::size_t i, std::size_t j) { return unit(n, i - 1, j - 1); };
  std::vector<KernelWitness> out;

  out.push_back({"so(n^2-1): e12(x)e34 - e34(x)e12", tensor(e(1, 2), e(3, 4)) - tensor(e(3, 4), e(1, 2)), e(2, 1),
                 e(1, 3)});
  out.push_back({"p: x -> tr(x) e12", trace_times(e(1, 2)), e(1, 2), e(2, 1)});

  OperatorN q(n);
  for (std::size_t i = 1; i <= n; ++i) q = q + tensor(e(i, 1), e(2, i));
  out.push_back({"q: sum_i e_i1 (x) e_2i", q, e(1, 3), e(3, 2)});

  MatN x = e(1, 1) - e(2, 2) + GaussScalar::i() * (e(3, 3) - e(4, 4));
  out.push_back({"W(lambda): w_e12", w_map(e(1, 2), lambda), x, x});

  // r_a : x -> [x, a] + alpha x + beta tr(x) 1
  auto r_a = [n](const MatN& a, const GaussScalar& alpha, const GaussScalar& beta) {
    return GaussScalar(-1) * inner_deriv(a) + alpha * OperatorN::identity(n) + beta * trace_one(n);
  };
  const GaussScalar alpha(2), beta(3);
  out.push_back({"g+Ft: alpha != 0, a = alpha(e11 - e33)", r_a(alpha * (e(1, 1) - e(3, 3)), alpha, beta), e(1, 2),
                 e(2, 3)});
  out.push_back({"g+Ft: alpha = 0, a = e12", r_a(e(1, 2), GaussScalar(0), GaussScalar(1)), e(3, 4), e(4, 3)});
  return out;
}

// ---- f-derivations --------------------------------------------------------

void MultilinearPoly::validate() const {
  if (l < 2) throw Error(Errc::InvalidParameters, "multilinear polynomial needs degree >= 2");
  bool nonzero = false;
  for (const auto& t : terms) {
    std::vector<std::size_t> p = t.perm;
    std::sort(p.begin(), p.end());
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[k] != k) throw Error(Errc::InvalidParameters, "term is not a permutation");
    }
    if (p.size() != l) throw Error(Errc::InvalidParameters, "term length differs from degree");
    if (!t.coeff.is_zero()) nonzero = true;
  }
  if (!nonzero) throw Error(Errc::InvalidParameters, "all coefficients are zero");
}

MatN MultilinearPoly::evaluate(const std::vector<MatN>& xs) const {
  if (xs.size() != l) throw Error(Errc::SizeMismatch, "wrong number of arguments");
  MatN sum(xs.front().n());
  for (const auto& t : terms) {
    MatN m = xs[t.perm[0]];
    for (std::size_t k = 1; k < l; ++k) m = mul(m, xs[t.perm[k]]);
    sum += t.coeff * m;
  }
  return sum;
}

MultilinearPoly MultilinearPoly::monomial(std::size_t l) {
  MultilinearPoly f;
  f.l = l;
  Term t{std::vector<std::size_t>(l), GaussScalar(1)};
  for (std::size_t k = 0; k < l; ++k) t.perm[k] = k;
  f.terms.push_back(t);
  return f;
}

MultilinearPoly MultilinearPoly::commutator() {
  return MultilinearPoly{2, {{{0, 1}, GaussScalar(1)}, {{1, 0}, GaussScalar(-1)}}};
}

MultilinearPoly MultilinearPoly::anticommutator() {
  return MultilinearPoly{2, {{{0, 1}, GaussScalar(1)}, {{1, 0}, GaussScalar(1)}}};
}

MatN f_derivation_defect(const OperatorN& d, const MultilinearPoly& f, const std::vector<MatN>& xs) {
  MatN out = apply(d, f.evaluate(xs));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<MatN> ys = xs;
    ys[i] = apply(d, xs[i]);
    out -= f.evaluate(ys);
  }
  return out;
}

namespace {

// A product of matrix units: empty (the identity), zero, or e_rc.
struct UnitProd {
  enum State : std::uint8_t { Empty, Zero, Unit } state = Empty;
  std::size_t r = 0, c = 0;
};

UnitProd times(const UnitProd& a, const UnitProd& b) {
  if (a.state == UnitProd::Empty) return b;
  if (b.state == UnitProd::Empty) return a;
  if (a.state == UnitProd::Zero || b.state == UnitProd::Zero || a.c != b.r) return {UnitProd::Zero};
  return {UnitProd::Unit, a.r, b.c};
}

// Rows of (*) for one tuple of matrix units, one per output coordinate.
class FDerivationRows {
 public:
  FDerivationRows(const MultilinearPoly& f, std::size_t n)
      : f_(f), n_(n), outs_(n * n, Accumulator(n * n * n * n)), pre_(f.l + 1), suf_(f.l + 1) {}

  template <typename Sink>
  void emit(const std::vector<std::size_t>& tuple, Sink&& sink) {
    const std::size_t n = n_, n2 = n * n, l = f_.l;
    for (const auto& term : f_.terms) {
      if (term.coeff.is_zero()) continue;
      const GaussScalar& lam = term.coeff;
      const GaussScalar neg = -lam;
      auto unit_at = [&](std::size_t k) {
        std::size_t u = tuple[term.perm[k]];
        return UnitProd{UnitProd::Unit, u / n, u % n};
      };
      pre_[0] = {};
      for (std::size_t k = 0; k < l; ++k) pre_[k + 1] = times(pre_[k], unit_at(k));
      suf_[l] = {};
      for (std::size_t k = l; k-- > 0;) suf_[k] = times(unit_at(k), suf_[k + 1]);

      // d(f(x)): coefficient of d(e_PQ)
      if (pre_[l].state == UnitProd::Unit) {
        std::size_t col = pre_[l].r * n + pre_[l].c;
        for (std::size_t o = 0; o < n2; ++o) outs_[o].add(op_index(n, o, col), lam);
      }
      // f(.., d(x_i), ..) with x_i at position k: L d(x_i) R
      for (std::size_t k = 0; k < l; ++k) {
        const UnitProd& left = pre_[k];
        const UnitProd& right = suf_[k + 1];
        if (left.state == UnitProd::Zero || right.state == UnitProd::Zero) continue;
        std::size_t in = tuple[term.perm[k]];
        if (left.state == UnitProd::Unit && right.state == UnitProd::Unit) {
          outs_[left.r * n + right.c].add(op_index(n, left.c * n + right.r, in), neg);
        } else if (left.state == UnitProd::Empty) {
          for (std::size_t a = 0; a < n; ++a) outs_[a * n + right.c].add(op_index(n, a * n + right.r, in), neg);
        } else {
          for (std::size_t b = 0; b < n; ++b) outs_[left.r * n + b].add(op_index(n, left.c * n + b, in), neg);
        }
      }
    }
    for (auto& acc : outs_) {
      Vector row = acc.take();
      if (!row.is_zero()) sink(row);
    }
  }

 private:
  const MultilinearPoly& f_;
  std::size_t n_;
  std::vector<Accumulator> outs_;
  std::vector<UnitProd> pre_, suf_;
};

bool next_tuple(std::vector<std::size_t>& t, std::size_t radix) {
  for (std::size_t k = t.size(); k-- > 0;) {
    if (++t[k] < radix) return true;
    t[k] = 0;
  }
  return false;
}

void add_unital_rows(KernelSolver& solver, std::size_t n) {
  const std::size_t n2 = n * n;
  for (std::size_t r = 0; r < n2; ++r) {
    Vector row(n2 * n2);
    for (std::size_t i = 0; i < n; ++i) row.push_back(op_index(n, r, i * n + i), GaussScalar(1));
    solver.add(row);
  }
}

}  // namespace

FDerivationReport f_derivation_report(const MultilinearPoly& f, std::size_t n, bool require_unital_kill,
                                      const FDerivationOptions& opts) {
  f.validate();
  if (f.l >= 2 * n) throw Error(Errc::HypothesisViolation, "f-derivations need degree l < 2n");
  const std::size_t n2 = n * n, amb = n2 * n2;

  FDerivationReport rep;
  std::size_t tuples = 1;
  for (std::size_t k = 0; k < f.l; ++k) tuples *= n2;
  rep.equations = tuples * n2 + (require_unital_kill ? n2 : 0);
  rep.seed = opts.seed;

  KernelSolver solver(amb);
  if (require_unital_kill) add_unital_rows(solver, n);
  FDerivationRows gen(f, n);
  auto add = [&](const Vector& row) { solver.add(row); };

  if (!opts.force_sampling && rep.equations <= opts.full_limit) {
    std::vector<std::size_t> t(f.l, 0);
    do gen.emit(t, add);
    while (next_tuple(t, n2));
    rep.space = solver.kernel();
    return rep;
  }

  rep.sampled = true;
  std::mt19937_64 rng(opts.seed);
  std::vector<std::size_t> t(f.l);
  std::size_t stable = 0, last = solver.kernel_dim();
  while (stable < 3) {
    for (std::size_t b = 0; b < opts.batch; ++b) {
      for (auto& u : t) u = static_cast<std::size_t>(rng() % n2);
      gen.emit(t, add);
      ++rep.tuples_sampled;
    }
    std::size_t now = solver.kernel_dim();
    stable = (now == last) ? stable + 1 : 0;
    last = now;
  }

  // Sweep every tuple against the sampled kernel; any violated row is added
  // and the sweep repeats until it finds nothing.
  for (;;) {
    Subspace k = solver.kernel();
    std::size_t found = 0;
    std::fill(t.begin(), t.end(), 0);
    do {
      gen.emit(t, [&](const Vector& row) {
        for (const auto& v : k.basis()) {
          if (!dot(row, v).is_zero()) {
            if (solver.add(row)) ++found;
            break;
          }
        }
      });
    } while (next_tuple(t, n2));
    rep.repairs += found;
    if (found == 0) {
      rep.space = std::move(k);
      return rep;
    }
  }
}

Subspace f_derivation_space(const MultilinearPoly& f, std::size_t n, bool require_unital_kill) {
  return f_derivation_report(f, n, require_unital_kill).space;
}

// ---- css ------------------------------------------------------------------

Subspace css_space(std::size_t n) {
  const std::size_t n2 = n * n;
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < n2; ++r) {
    Vector row(n2 * n2);
    for (std::size_t i = 0; i < n; ++i) row.push_back(op_index(n, r, i * n + i), GaussScalar(1));
    rows.push_back(std::move(row));
  }
  Accumulator acc(n2 * n2);
  for (std::size_t c = 0; c < n2; ++c) {
    for (std::size_t i = 0; i < n; ++i) acc.add(op_index(n, i * n + i, c), GaussScalar(1));
    rows.push_back(acc.take());
  }
  return solve_homogeneous(rows, n2 * n2);
}

bool certificate_valid(const TensorCertificate& c) {
  const std::size_t n = c.op.n();
  OperatorN sum(n);
  MatN ab(n), ba(n);
  for (const auto& [a, b] : c.terms) {
    sum = sum + tensor(a, b);
    ab += mul(a, b);
    ba += mul(b, a);
  }
  return sum == c.op && ab.is_zero() && ba.is_zero();
}

TensorCertificate compose_certified(const TensorCertificate& s, const TensorCertificate& t) {
  TensorCertificate out{compose(s.op, t.op), {}};
  // (a (x) b)(c (x) d) = ac (x) db; terms sharing a left factor are merged.
  for (const auto& [a, b] : s.terms) {
    for (const auto& [c, d] : t.terms) {
      MatN left = mul(a, c), right = mul(d, b);
      if (left.is_zero() || right.is_zero()) continue;
      auto it = std::find_if(out.terms.begin(), out.terms.end(), [&](const auto& p) { return p.first == left; });
      if (it == out.terms.end()) {
        out.terms.emplace_back(std::move(left), std::move(right));
      } else {
        it->second += right;
      }
    }
  }
  std::erase_if(out.terms, [](const auto& p) { return p.second.is_zero(); });
  return out;
}

TensorCertificate certified_inner_deriv(const MatN& a) {
  const std::size_t n = a.n();
  return {inner_deriv(a), {{a, identity(n)}, {-identity(n), a}}};
}

CertifiedClosure certified_assoc_closure(std::size_t n) {
  std::vector<TensorCertificate> gens;
  for (const auto& a : traceless_basis(n)) gens.push_back(certified_inner_deriv(a));

  EchelonBasis basis(n * n * n * n);
  CertifiedClosure out;
  std::vector<std::size_t> frontier;
  for (const auto& g : gens) {
    if (basis.insert(g.op.vec())) {
      frontier.push_back(out.words.size());
      out.words.push_back(g);
    }
  }
  while (!frontier.empty() && !basis.full()) {
    std::vector<std::size_t> next;
    for (std::size_t w : frontier) {
      for (const auto& g : gens) {
        TensorCertificate p = compose_certified(g, out.words[w]);
        if (basis.insert(p.op.vec())) {
          next.push_back(out.words.size());
          out.words.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  out.closure = basis.to_subspace();
  return out;
}

std::int64_t seeded_coefficient(std::mt19937_64& rng, std::int64_t range) {
  return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range;
}

namespace {

MatN random_matrix(std::mt19937_64& rng, std::size_t n, std::int64_t range) {
  MatN x(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = GaussScalar(seeded_coefficient(rng, range));
  return x;
}

MatN random_traceless_matrix(std::mt19937_64& rng, std::size_t n, std::int64_t range) {
  MatN x = random_matrix(rng, n, range);
  x(n - 1, n - 1) -= trace(x);
  return x;
}

}  // namespace

TensorCertificate random_conforming_sum(std::size_t n, std::size_t pairs, std::mt19937_64& rng) {
  const std::size_t n2 = n * n, unknowns = pairs * n2;
  for (;;) {
    std::vector<MatN> as;
    for (std::size_t k = 0; k < pairs; ++k) as.push_back(random_matrix(rng, n, 2));
    // Unknown b_k(l, j) sits at k n^2 + l n + j.
    Accumulator acc(unknowns);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < pairs; ++k)
          for (std::size_t l = 0; l < n; ++l) acc.add(static_cast<std::uint32_t>(k * n2 + l * n + j), as[k](i, l));
        rows.push_back(acc.take());
        for (std::size_t k = 0; k < pairs; ++k)
          for (std::size_t l = 0; l < n; ++l) acc.add(static_cast<std::uint32_t>(k * n2 + i * n + l), as[k](l, j));
        rows.push_back(acc.take());
      }
    }
    Subspace sol = solve_homogeneous(rows, unknowns);
    Vector b(unknowns);
    for (const auto& v : sol.basis()) b = b.axpy(GaussScalar(seeded_coefficient(rng, 2)), v);
    TensorCertificate out{OperatorN(n), {}};
    for (std::size_t k = 0; k < pairs; ++k) {
      MatN bk(n);
      for (const auto& en : b.entries()) {
        if (en.index / n2 == k) bk((en.index % n2) / n, en.index % n) = en.value;
      }
      out.op = out.op + tensor(as[k], bk);
      out.terms.emplace_back(as[k], std::move(bk));
    }
    if (!out.op.is_zero()) return out;
  }
}

bool CssReport::ok() const {
  return equal && certificates_ok.value_or(true) && conforming_in_css == conforming_samples;
}

CssReport verify_css_equivalence(std::size_t n, const CssOptions& opts) {
  CssReport rep;
  Subspace css = css_space(n);
  std::vector<OperatorN> ders;
  for (const auto& a : traceless_basis(n)) ders.push_back(inner_deriv(a));
  Subspace closure = assoc_closure(ders, n).closure;
  rep.css_dim = css.dim();
  rep.closure_dim = closure.dim();
  rep.equal = css == closure && css.dim() == (n * n - 1) * (n * n - 1);

  if (opts.certify) {
    CertifiedClosure cc = certified_assoc_closure(n);
    bool ok = cc.closure == closure;
    std::vector<Vector> spans;
    for (const auto& w : cc.words) {
      ok = ok && certificate_valid(w);
      spans.push_back(w.op.vec());
      ++rep.certificates_checked;
    }
    ok = ok && span_of(spans, closure.ambient_dim()) == closure;
    rep.certificates_ok = ok;
  }

  std::mt19937_64 rng(opts.seed);
  MembershipTest in_css(css);
  for (std::size_t s = 0; s < opts.conforming_samples; ++s) {
    TensorCertificate c = random_conforming_sum(n, 3, rng);
    ++rep.conforming_samples;
    if (certificate_valid(c) && in_css(c.op.vec())) ++rep.conforming_in_css;
  }
  return rep;
}

// ---- density --------------------------------------------------------------

DensityReport density_check(std::size_t n, std::size_t points, std::size_t instances, std::uint64_t seed) {
  const std::size_t n2 = n * n;
  Subspace css = css_space(n);
  std::vector<OperatorN> basis = as_operators(css, n);
  std::mt19937_64 rng(seed);
  DensityReport rep;
  for (std::size_t inst = 0; inst < instances; ++inst) {
    std::vector<MatN> xs, ys;
    for (;;) {
      xs.clear();
      std::vector<Vector> vx;
      for (std::size_t i = 0; i < points; ++i) {
        xs.push_back(random_traceless_matrix(rng, n, 3));
        vx.push_back(vectorize(xs.back()));
      }
      if (span_of(vx, n2).dim() == points) break;
    }
    for (std::size_t i = 0; i < points; ++i) ys.push_back(random_traceless_matrix(rng, n, 3));

    // Unknown c_j multiplies basis[j]; one equation per output coordinate of each T(x_i) = y_i.
    std::vector<std::vector<GaussScalar>> dense(points * n2, std::vector<GaussScalar>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      for (std::size_t i = 0; i < points; ++i) {
        MatN img = apply(basis[j], xs[i]);
        for (std::size_t r = 0; r < n2; ++r) dense[i * n2 + r][j] = img(r / n, r % n);
      }
    }
    std::vector<Vector> eqs;
    std::vector<GaussScalar> rhs;
    for (std::size_t i = 0; i < points; ++i) {
      for (std::size_t r = 0; r < n2; ++r) {
        eqs.push_back(Vector::from_dense(dense[i * n2 + r]));
        rhs.push_back(ys[i](r / n, r % n));
      }
    }
    ++rep.instances;
    auto c = solve_linear(eqs, rhs, basis.size());
    if (!c) continue;
    OperatorN t(n);
    for (const auto& en : c->entries()) t = t + en.value * basis[en.index];
    bool hit = css.member(t.vec());
    for (std::size_t i = 0; i < points && hit; ++i) hit = apply(t, xs[i]) == ys[i];
    if (hit) ++rep.solved;
  }
  return rep;
}

std::vector<OperatorN> multiplication_generators(std::size_t n) {
  std::vector<OperatorN> out;
  const MatN one = identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.push_back(tensor(unit(n, i, j), one));
      out.push_back(tensor(one, unit(n, i, j)));
    }
  }
  return out;
}

// ---- rank floor -----------------------------------------------------------

OperatorN two_term_trace_map(const MatN& a, const MatN& b) {
  return OperatorN::from_map(a.n(), [&](const MatN& x) { return trace(mul(x, b)) * a - trace(mul(x, a)) * b; });
}

bool RankReport::ok() const { return below_floor == 0 && basis_min_rank >= floor && two_term_max_rank <= 2; }

RankReport rank_floor_check(const GaussScalar& lambda, std::size_t n, std::size_t samples, std::uint64_t seed) {
  std::vector<OperatorN> gens;
  const std::vector<MatN> tl = traceless_basis(n);
  for (const auto& a : tl) gens.push_back(inner_deriv(a));
  for (const auto& a : tl) gens.push_back(w_map(a, lambda));

  RankReport rep;
  rep.floor = n >= 2 ? n - 2 : 0;
  rep.min_rank = n * n;
  std::mt19937_64 rng(seed);
  Accumulator acc(n * n * n * n);
  while (rep.samples < samples) {
    for (const auto& g : gens) {
      std::int64_t c = seeded_coefficient(rng, 3);
      if (c != 0) acc.add_scaled(g.vec(), GaussScalar(c));
    }
    OperatorN t(n, acc.take());
    if (t.is_zero()) continue;
    std::size_t r = op_rank(t);
    ++rep.samples;
    rep.min_rank = std::min(rep.min_rank, r);
    if (r < rep.floor) ++rep.below_floor;
  }
  rep.basis_min_rank = n * n;
  for (const auto& g : gens) rep.basis_min_rank = std::min(rep.basis_min_rank, op_rank(g));
  for (std::size_t i = 0; i < tl.size(); ++i) {
    for (std::size_t j = i + 1; j < tl.size(); ++j) {
      rep.two_term_max_rank = std::max(rep.two_term_max_rank, op_rank(two_term_trace_map(tl[i], tl[j])));
      ++rep.two_term_maps;
    }
  }
  return rep;
}

}  // namespace idalg
