#include "idalg/algebra/operator.hpp"

#include <algorithm>
#include <string>

#include "idalg/error.hpp"

namespace idalg {

namespace {

void check_same(const OperatorN& s, const OperatorN& t) {
  if (s.n() != t.n()) {
    throw Error(Errc::SizeMismatch, "operators on M_" + std::to_string(s.n()) + " and M_" + std::to_string(t.n()));
  }
}

std::uint32_t pos(std::size_t side, std::size_t r, std::size_t c) {
  return static_cast<std::uint32_t>(r * side + c);
}

}  // namespace

OperatorN::OperatorN(std::size_t n, Vector mat) : n_(n), mat_(std::move(mat)) {
  if (mat_.dim() != n * n * n * n) {
    throw Error(Errc::DimensionMismatch, "operator vector of dimension " + std::to_string(mat_.dim()) +
                                             " for n=" + std::to_string(n));
  }
}

OperatorN OperatorN::from_map(std::size_t n, const std::function<MatN(const MatN&)>& f) {
  const std::size_t side = n * n;
  std::vector<std::vector<Vector::Entry>> rows(side);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      MatN y = f(unit(n, k, l));
      const auto c = static_cast<std::uint32_t>(vec_index(n, k, l));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!y(i, j).is_zero()) rows[vec_index(n, i, j)].push_back({c, y(i, j)});
        }
      }
    }
  }
  Vector mat(side * side);
  for (std::size_t r = 0; r < side; ++r) {
    for (auto& e : rows[r]) mat.push_back(pos(side, r, e.index), std::move(e.value));
  }
  return OperatorN(n, std::move(mat));
}

OperatorN OperatorN::identity(std::size_t n) {
  const std::size_t side = n * n;
  Vector mat(side * side);
  for (std::size_t r = 0; r < side; ++r) mat.push_back(pos(side, r, r), GaussScalar(1));
  return OperatorN(n, std::move(mat));
}

OperatorN operator+(const OperatorN& a, const OperatorN& b) {
  check_same(a, b);
  return OperatorN(a.n_, a.mat_ + b.mat_);
}

OperatorN operator-(const OperatorN& a, const OperatorN& b) {
  check_same(a, b);
  return OperatorN(a.n_, a.mat_ - b.mat_);
}

OperatorN operator*(const GaussScalar& c, const OperatorN& t) { return OperatorN(t.n_, t.mat_.scaled(c)); }

OperatorN tensor(const MatN& a, const MatN& b) {
  if (a.n() != b.n()) throw Error(Errc::SizeMismatch, "tensor factors of different size");
  const std::size_t n = a.n(), side = n * n;
  // (a x b)_ij = sum_kl a_ik x_kl b_lj, so M[(ij),(kl)] = a_ik b_lj.
  Vector mat(side * side);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t l = 0; l < n; ++l) {
          if (b(l, j).is_zero()) continue;
          mat.push_back(pos(side, vec_index(n, i, j), vec_index(n, k, l)), a(i, k) * b(l, j));
        }
      }
    }
  }
  return OperatorN(n, std::move(mat));
}

OperatorN inner_deriv(const MatN& a) {
  const MatN one = identity(a.n());
  return tensor(a, one) - tensor(one, a);
}

OperatorN compose(const OperatorN& s, const OperatorN& t) {
  check_same(s, t);
  const std::size_t side = s.side();
  const auto te = t.vec().entries();
  // Row offsets of t; entries are sorted, so each row is contiguous.
  std::vector<std::uint32_t> start(side + 1, 0);
  {
    std::size_t k = 0;
    for (std::size_t r = 0; r <= side; ++r) {
      while (k < te.size() && te[k].index < r * side) ++k;
      start[r] = static_cast<std::uint32_t>(k);
    }
  }
  Vector out(side * side);
  const auto se = s.vec().entries();
  Accumulator& acc = detail::scratch(side);
  std::size_t k = 0;
  while (k < se.size()) {
    const std::size_t row = se[k].index / side;
    for (; k < se.size() && se[k].index / side == row; ++k) {
      const std::size_t mid = se[k].index % side;
      const GaussScalar& c = se[k].value;
      for (std::uint32_t q = start[mid]; q < start[mid + 1]; ++q) {
        acc.add(static_cast<std::uint32_t>(te[q].index - mid * side), c * te[q].value);
      }
    }
    Vector r = acc.take();
    for (const auto& e : r.entries()) out.push_back(pos(side, row, e.index), e.value);
  }
  return OperatorN(s.n(), std::move(out));
}

OperatorN op_bracket(const OperatorN& s, const OperatorN& t) { return compose(s, t) - compose(t, s); }

std::size_t op_rank(const OperatorN& t) {
  const std::size_t side = t.side();
  std::vector<Vector> rows;
  const auto te = t.vec().entries();
  std::size_t k = 0;
  while (k < te.size()) {
    const std::size_t row = te[k].index / side;
    Vector v(side);
    for (; k < te.size() && te[k].index / side == row; ++k) v.push_back(te[k].index % side, te[k].value);
    rows.push_back(std::move(v));
  }
  return rref(rows, side).rank;
}

GaussScalar op_trace(const OperatorN& t) {
  GaussScalar s;
  const std::size_t side = t.side();
  for (const auto& e : t.vec().entries()) {
    if (e.index / side == e.index % side) s += e.value;
  }
  return s;
}

MatN apply(const OperatorN& t, const MatN& x) {
  if (t.n() != x.n()) throw Error(Errc::SizeMismatch, "operator and matrix of different size");
  const std::size_t n = t.n(), side = t.side();
  MatN y(n);
  for (const auto& e : t.vec().entries()) {
    const std::size_t r = e.index / side, c = e.index % side;
    const GaussScalar& xc = x(c / n, c % n);
    if (!xc.is_zero()) y(r / n, r % n) += e.value * xc;
  }
  return y;
}

std::vector<Vector> sl_constraints(std::size_t n) {
  const std::size_t side = n * n;
  Vector row(side * side);
  for (std::size_t r = 0; r < side; ++r) row.push_back(pos(side, r, r), GaussScalar(1));
  return {row};
}

std::vector<Vector> gl_n2m1_constraints(std::size_t n) {
  const std::size_t side = n * n;
  std::vector<Vector> rows;
  // t(1) = 0: for each output (ij), sum_k M[(ij),(kk)] = 0.
  for (std::size_t r = 0; r < side; ++r) {
    Vector v(side * side);
    for (std::size_t k = 0; k < n; ++k) v.push_back(pos(side, r, vec_index(n, k, k)), GaussScalar(1));
    rows.push_back(std::move(v));
  }
  // tr t(e) = 0 for traceless basis e: sum_i sum_c M[(ii),c] e_c = 0.
  for (const MatN& e : traceless_basis(n)) {
    std::vector<std::pair<std::uint32_t, GaussScalar>> terms;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < side; ++c) {
        const GaussScalar& ec = e(c / n, c % n);
        if (!ec.is_zero()) terms.emplace_back(pos(side, vec_index(n, i, i), c), ec);
      }
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Vector v(side * side);
    for (auto& [p, c] : terms) v.push_back(p, std::move(c));
    rows.push_back(std::move(v));
  }
  return rows;
}

namespace {

// Partner position of M[(a,b),(c,d)] under the skewness relation.
std::uint32_t so_partner(std::size_t n, std::uint32_t p) {
  const std::size_t side = n * n;
  const std::size_t r = p / side, c = p % side;
  const std::size_t a = r / n, b = r % n, cc = c / n, d = c % n;
  return pos(side, vec_index(n, d, cc), vec_index(n, b, a));
}

}  // namespace

std::vector<Vector> so_constraints(std::size_t n) {
  const std::size_t side = n * n, total = side * side;
  std::vector<Vector> rows;
  for (std::uint32_t p = 0; p < total; ++p) {
    const std::uint32_t q = so_partner(n, p);
    if (q < p) continue;
    Vector v(total);
    v.push_back(p, GaussScalar(1));
    if (q != p) v.push_back(q, GaussScalar(1));
    rows.push_back(std::move(v));
  }
  return rows;
}

bool in_sl(const OperatorN& t) { return op_trace(t).is_zero(); }

bool in_gl_n2m1(const OperatorN& t) {
  if (!apply(t, identity(t.n())).is_zero()) return false;
  for (const MatN& e : traceless_basis(t.n())) {
    if (!trace(apply(t, e)).is_zero()) return false;
  }
  return true;
}

bool in_so(const OperatorN& t) {
  for (const auto& e : t.vec().entries()) {
    const std::uint32_t q = so_partner(t.n(), e.index);
    if (q == e.index) return false;
    if (t.vec().at(q) != -e.value) return false;
  }
  return true;
}

bool in_so_by_pairs(const OperatorN& t) {
  const std::size_t n = t.n();
  std::vector<MatN> images;
  for (std::size_t k = 0; k < n * n; ++k) images.push_back(apply(t, unit(n, k / n, k % n)));
  for (std::size_t k = 0; k < n * n; ++k) {
    const MatN x = unit(n, k / n, k % n);
    for (std::size_t l = 0; l < n * n; ++l) {
      const MatN y = unit(n, l / n, l % n);
      if (!trace(mul(images[k], y) + mul(x, images[l])).is_zero()) return false;
    }
  }
  return true;
}

OperatorN t_matrix(const GaussScalar& alpha, const GaussScalar& beta, std::size_t n) {
  const GaussScalar shift = (beta - alpha) / GaussScalar(static_cast<std::int64_t>(n));
  return OperatorN::from_map(n, [&](const MatN& x) {
    return alpha * x + (shift * trace(x)) * identity(n);
  });
}

OperatorN t_matrix_inverse(const GaussScalar& alpha, const GaussScalar& beta, std::size_t n) {
  if (alpha.is_zero() || beta.is_zero()) throw Error(Errc::SingularParameter, "t is not invertible");
  return t_matrix(alpha.inverse(), beta.inverse(), n);
}

OperatorN op_inverse(const OperatorN& t) {
  const std::size_t side = t.side();
  std::vector<Vector> rows(side, Vector(2 * side));
  for (const auto& e : t.vec().entries()) {
    rows[e.index / side].push_back(static_cast<std::uint32_t>(e.index % side), e.value);
  }
  for (std::size_t r = 0; r < side; ++r) rows[r].push_back(static_cast<std::uint32_t>(side + r), GaussScalar(1));
  Subspace reduced = rref(rows, 2 * side).space;
  if (reduced.dim() < side || reduced.pivots()[side - 1] >= side) {
    throw Error(Errc::SingularParameter, "operator is not invertible");
  }
  Vector mat(side * side);
  for (std::size_t r = 0; r < side; ++r) {
    for (const auto& e : reduced.basis()[r].entries()) {
      if (e.index >= side) mat.push_back(pos(side, r, e.index - side), e.value);
    }
  }
  return OperatorN(t.n(), std::move(mat));
}

std::vector<Vector> as_vectors(std::span<const OperatorN> ops) {
  std::vector<Vector> out;
  out.reserve(ops.size());
  for (const auto& op : ops) out.push_back(op.vec());
  return out;
}

std::vector<OperatorN> as_operators(const Subspace& s, std::size_t n) {
  std::vector<OperatorN> out;
  out.reserve(s.dim());
  for (const auto& v : s.basis()) out.emplace_back(n, v);
  return out;
}

}  // namespace idalg
