#include "idalg/linalg/subspace.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "idalg/error.hpp"

namespace idalg {

namespace detail {

Accumulator& scratch(std::size_t dim) {
  thread_local std::map<std::size_t, Accumulator> pool;
  auto it = pool.find(dim);
  if (it == pool.end()) it = pool.emplace(dim, Accumulator(dim)).first;
  return it->second;
}

Subspace make_subspace(std::size_t ambient_dim, std::vector<Vector> rows) {
  std::sort(rows.begin(), rows.end(),
            [](const Vector& a, const Vector& b) { return a.leading_index() < b.leading_index(); });
  Subspace s(ambient_dim);
  s.rows_ = std::move(rows);
  for (std::size_t r = 0; r < s.rows_.size(); ++r) {
    std::uint32_t p = s.rows_[r].leading_index();
    s.pivots_.push_back(p);
    s.pivot_row_[p] = static_cast<std::int32_t>(r);
  }
  return s;
}

}  // namespace detail

namespace {

void check_dim(const Vector& v, std::size_t ambient) {
  if (v.dim() != ambient) {
    throw Error(Errc::DimensionMismatch, "vector of dimension " + std::to_string(v.dim()) +
                                             " against ambient dimension " + std::to_string(ambient));
  }
}

// v - sum_p v[p] * row_p over pivots p in the support of v.  Valid because each
// reduced row vanishes on every other pivot column.
Vector reduce_against(const Vector& v, const std::vector<Vector>& rows,
                      const std::vector<std::int32_t>& pivot_row) {
  const Vector* single = nullptr;
  GaussScalar single_coeff;
  std::size_t hits = 0;
  for (const auto& e : v.entries()) {
    if (pivot_row[e.index] >= 0) {
      if (++hits == 1) {
        single = &rows[pivot_row[e.index]];
        single_coeff = e.value;
      } else {
        break;
      }
    }
  }
  if (hits == 0) return v;
  if (hits == 1) return v.axpy(-single_coeff, *single);
  Accumulator& acc = detail::scratch(v.dim());
  acc.add_vector(v);
  for (const auto& e : v.entries()) {
    std::int32_t r = pivot_row[e.index];
    if (r >= 0) acc.add_scaled(rows[r], -e.value);
  }
  return acc.take();
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), pivot_row_(ambient_dim, -1) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vector> rows;
  rows.reserve(ambient_dim);
  for (std::size_t k = 0; k < ambient_dim; ++k) rows.push_back(Vector::unit(ambient_dim, k));
  return detail::make_subspace(ambient_dim, std::move(rows));
}

Vector Subspace::residual(const Vector& v) const {
  check_dim(v, ambient_);
  return reduce_against(v, rows_, pivot_row_);
}

bool Subspace::member(const Vector& v) const { return residual(v).is_zero(); }

EchelonBasis::EchelonBasis(std::size_t ambient_dim) : ambient_(ambient_dim), pivot_row_(ambient_dim, -1) {}

EchelonBasis::EchelonBasis(const Subspace& start)
    : ambient_(start.ambient_), rows_(start.rows_), pivots_(start.pivots_), pivot_row_(start.pivot_row_) {}

Vector EchelonBasis::residual(const Vector& v) const {
  check_dim(v, ambient_);
  return reduce_against(v, rows_, pivot_row_);
}

std::optional<Vector> EchelonBasis::insert(const Vector& v) {
  Vector r = residual(v);
  if (r.is_zero()) return std::nullopt;
  insert_reduced(r);
  return r;
}

void EchelonBasis::insert_reduced(Vector r) {
  const std::uint32_t lead = r.leading_index();
  GaussScalar pivot = r.entries().front().value;
  if (!pivot.is_one()) r = r.scaled(pivot.inverse());
  for (auto& row : rows_) {
    GaussScalar c = row.at(lead);
    if (!c.is_zero()) row = row.axpy(-c, r);
  }
  pivot_row_[lead] = static_cast<std::int32_t>(rows_.size());
  pivots_.push_back(lead);
  rows_.push_back(std::move(r));
}

Subspace EchelonBasis::to_subspace() const { return detail::make_subspace(ambient_, rows_); }

MembershipTest::MembershipTest(const Subspace& space) : space_(&space) {
  if (2 * space.dim() > space.ambient_dim()) annihilator_ = annihilator(space);
}

bool MembershipTest::operator()(const Vector& v) const {
  if (!annihilator_) return space_->member(v);
  check_dim(v, space_->ambient_dim());
  for (const auto& row : annihilator_->basis()) {
    if (!dot(row, v).is_zero()) return false;
  }
  return true;
}

namespace detail {

Subspace sparse_rref(std::span<const Vector> rows, std::size_t ambient_dim) {
  EchelonBasis basis(ambient_dim);
  for (const auto& row : rows) {
    basis.insert(row);
    if (basis.full()) break;
  }
  return basis.to_subspace();
}

}  // namespace detail

RrefResult rref(std::span<const Vector> rows, std::size_t ambient_dim) {
  for (const auto& row : rows) check_dim(row, ambient_dim);
  if (detail::prefers_dense(rows, ambient_dim)) {
    if (auto dense = detail::dense_rref(rows, ambient_dim)) {
      std::size_t rank = dense->dim();
      return {std::move(*dense), rank};
    }
  }
  Subspace s = detail::sparse_rref(rows, ambient_dim);
  std::size_t rank = s.dim();
  return {std::move(s), rank};
}

Subspace span_of(std::span<const Vector> rows, std::size_t ambient_dim) {
  return rref(rows, ambient_dim).space;
}

namespace {

void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(Errc::DimensionMismatch, "subspaces of ambient dimension " + std::to_string(a.ambient_dim()) +
                                             " and " + std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  const Subspace& big = a.dim() >= b.dim() ? a : b;
  const Subspace& small = a.dim() >= b.dim() ? b : a;
  EchelonBasis basis(big);
  for (const auto& row : small.basis()) {
    if (basis.full()) break;
    basis.insert(row);
  }
  return basis.to_subspace();
}

bool contains(const Subspace& outer, const Subspace& inner) {
  check_same_ambient(outer, inner);
  if (inner.dim() > outer.dim()) return false;
  MembershipTest member(outer);
  return std::all_of(inner.basis().begin(), inner.basis().end(),
                     [&](const Vector& v) { return member(v); });
}

Subspace annihilator(const Subspace& s) {
  const std::size_t d = s.ambient_dim();
  std::vector<char> is_pivot(d, 0);
  for (auto p : s.pivots()) is_pivot[p] = 1;
  // For free column f the kernel vector is e_f - sum_i R[i][f] e_{p_i}.
  std::vector<std::vector<Vector::Entry>> columns(d);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const std::uint32_t p = s.pivots()[r];
    for (const auto& e : s.basis()[r].entries()) {
      if (e.index != p) columns[e.index].push_back({p, -e.value});
    }
  }
  std::vector<Vector> kernel;
  kernel.reserve(d - s.dim());
  for (std::uint32_t f = 0; f < d; ++f) {
    if (is_pivot[f]) continue;
    auto& col = columns[f];
    col.push_back({f, GaussScalar(1)});
    std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
    Vector v(d);
    for (auto& e : col) v.push_back(e.index, std::move(e.value));
    kernel.push_back(std::move(v));
  }
  return detail::sparse_rref(kernel, d);
}

Subspace intersect_by_residuals(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  const Subspace& big = a.dim() >= b.dim() ? a : b;
  const Subspace& small = a.dim() >= b.dim() ? b : a;
  const std::size_t d = a.ambient_dim();
  const std::size_t m = small.dim();
  // Rows [residual(b_j) | e_j]; any row whose left block vanishes after
  // elimination encodes a combination of the b_j lying in `big`.
  EchelonBasis aug(d + m);
  for (std::size_t j = 0; j < m; ++j) {
    Vector r = big.residual(small.basis()[j]);
    Vector row(d + m);
    for (const auto& e : r.entries()) row.push_back(e.index, e.value);
    row.push_back(static_cast<std::uint32_t>(d + j), GaussScalar(1));
    aug.insert(row);
  }
  Subspace reduced = aug.to_subspace();
  std::vector<Vector> common;
  for (const auto& row : reduced.basis()) {
    if (row.leading_index() < d) continue;
    Accumulator acc(d);
    for (const auto& e : row.entries()) acc.add_scaled(small.basis()[e.index - d], e.value);
    common.push_back(acc.take());
  }
  return detail::sparse_rref(common, d);
}

Subspace intersect_by_annihilators(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  return annihilator(sum(annihilator(a), annihilator(b)));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  const std::size_t d = a.ambient_dim();
  const std::size_t small = std::min(a.dim(), b.dim());
  const std::size_t codims = (d - a.dim()) + (d - b.dim());
  if (small == 0) return Subspace(d);
  if (codims < small) return intersect_by_annihilators(a, b);
  return intersect_by_residuals(a, b);
}

Subspace solve_homogeneous(std::span<const Vector> constraint_rows, std::size_t ambient_dim) {
  return annihilator(rref(constraint_rows, ambient_dim).space);
}

std::optional<Vector> solve_linear(std::span<const Vector> equations,
                                   std::span<const GaussScalar> rhs, std::size_t unknowns) {
  if (equations.size() != rhs.size()) throw Error(Errc::DimensionMismatch, "equation/rhs count mismatch");
  std::vector<Vector> aug;
  aug.reserve(equations.size());
  for (std::size_t i = 0; i < equations.size(); ++i) {
    check_dim(equations[i], unknowns);
    Vector row(unknowns + 1);
    for (const auto& e : equations[i].entries()) row.push_back(e.index, e.value);
    row.push_back(static_cast<std::uint32_t>(unknowns), rhs[i]);
    aug.push_back(std::move(row));
  }
  Subspace reduced = rref(aug, unknowns + 1).space;
  Vector x(unknowns);
  std::vector<std::pair<std::uint32_t, GaussScalar>> values;
  for (const auto& row : reduced.basis()) {
    std::uint32_t p = row.leading_index();
    if (p == unknowns) return std::nullopt;
    values.emplace_back(p, row.at(unknowns));
  }
  std::sort(values.begin(), values.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  for (auto& [p, val] : values) x.push_back(p, std::move(val));
  return x;
}

std::optional<std::vector<GaussScalar>> coordinates(std::span<const Vector> vectors, const Vector& target) {
  const std::size_t m = vectors.size();
  const std::size_t d = target.dim();
  std::vector<std::vector<Vector::Entry>> eq(d);
  for (std::size_t j = 0; j < m; ++j) {
    check_dim(vectors[j], d);
    for (const auto& e : vectors[j].entries()) eq[e.index].push_back({static_cast<std::uint32_t>(j), e.value});
  }
  std::vector<Vector> rows;
  std::vector<GaussScalar> rhs;
  for (std::size_t k = 0; k < d; ++k) {
    GaussScalar t = target.at(k);
    if (eq[k].empty()) {
      if (!t.is_zero()) return std::nullopt;
      continue;
    }
    Vector row(m);
    for (auto& e : eq[k]) row.push_back(e.index, std::move(e.value));
    rows.push_back(std::move(row));
    rhs.push_back(std::move(t));
  }
  auto x = solve_linear(rows, rhs, m);
  if (!x) return std::nullopt;
  return x->to_dense();
}

}  // namespace idalg
