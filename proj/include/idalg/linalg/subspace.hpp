#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "idalg/linalg/vector.hpp"

namespace idalg {

class EchelonBasis;
class Subspace;

namespace detail {
/// Wraps rows that are already fully reduced (any order) as a Subspace.
Subspace make_subspace(std::size_t ambient_dim, std::vector<Vector> rows);
/// Thread-local dense scratch space of the given dimension.  Callers must not
/// nest uses of the same dimension.
Accumulator& scratch(std::size_t dim);
}  // namespace detail

/// A subspace of Q(i)^d held as its canonical reduced row-echelon basis:
/// every row has leading entry 1, pivot columns strictly increase, and each
/// pivot column is zero in all other rows.  Canonical form makes subspace
/// equality a plain comparison of bases.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of the given ambient dimension.
  explicit Subspace(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  std::span<const Vector> basis() const noexcept { return rows_; }
  std::span<const std::uint32_t> pivots() const noexcept { return pivots_; }

  /// v minus its projection along the pivot coordinates; zero iff v is a member.
  Vector residual(const Vector& v) const;
  bool member(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  friend class EchelonBasis;
  friend Subspace detail::make_subspace(std::size_t, std::vector<Vector>);

  std::size_t ambient_ = 0;
  std::vector<Vector> rows_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::int32_t> pivot_row_;
};

/// Incrementally maintained RREF basis.  Inserting a vector reduces it against
/// the current rows and, if it is independent, back-eliminates its pivot so the
/// basis stays fully reduced after every insertion.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient_dim);
  explicit EchelonBasis(const Subspace& start);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  bool full() const noexcept { return rows_.size() == ambient_; }

  Vector residual(const Vector& v) const;
  bool member(const Vector& v) const { return residual(v).is_zero(); }

  /// Returns the (unnormalized) residual that was added, or nullopt when v
  /// already lies in the span.
  std::optional<Vector> insert(const Vector& v);

  Subspace to_subspace() const;

 private:
  void insert_reduced(Vector r);

  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::uint32_t> pivots_;
  std::vector<std::int32_t> pivot_row_;
};

/// Answers membership queries against a fixed subspace using whichever of
/// the basis or its annihilator is smaller.
class MembershipTest {
 public:
  explicit MembershipTest(const Subspace& space);
  bool operator()(const Vector& v) const;
  const Subspace& space() const noexcept { return *space_; }

 private:
  const Subspace* space_;
  std::optional<Subspace> annihilator_;
};

struct RrefResult {
  Subspace space;
  std::size_t rank;
};

/// Canonical row space of `rows`.  All rows must have ambient dimension
/// `ambient_dim`.
RrefResult rref(std::span<const Vector> rows, std::size_t ambient_dim);
Subspace span_of(std::span<const Vector> rows, std::size_t ambient_dim);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& outer, const Subspace& inner);

// The two intersection routes; `intersect` chooses between them by size.
Subspace intersect_by_residuals(const Subspace& a, const Subspace& b);
Subspace intersect_by_annihilators(const Subspace& a, const Subspace& b);

/// {x : <b, x> = 0 for all b in S} under the bilinear pairing.
Subspace annihilator(const Subspace& s);

/// Kernel of the matrix whose rows are `constraint_rows` (unknowns = ambient_dim).
Subspace solve_homogeneous(std::span<const Vector> constraint_rows, std::size_t ambient_dim);

/// A particular solution x of A x = b (rows of A given), or nullopt when the
/// system is inconsistent.  Free unknowns are set to zero.
std::optional<Vector> solve_linear(std::span<const Vector> equations,
                                   std::span<const GaussScalar> rhs, std::size_t unknowns);

/// Coefficients c with sum_j c_j * vectors[j] == target, if any.
std::optional<std::vector<GaussScalar>> coordinates(std::span<const Vector> vectors,
                                                    const Vector& target);

/// Kernel of a growing constraint set; the rank only ever increases, and
/// `saturated()` reports when the kernel has collapsed to zero.
class KernelSolver {
 public:
  explicit KernelSolver(std::size_t unknowns) : rows_(unknowns) {}

  /// True when the constraint increased the rank.
  bool add(const Vector& constraint) { return rows_.insert(constraint).has_value(); }
  std::size_t rank() const noexcept { return rows_.rank(); }
  std::size_t kernel_dim() const noexcept { return rows_.ambient_dim() - rows_.rank(); }
  bool saturated() const noexcept { return rows_.full(); }
  Subspace kernel() const { return annihilator(rows_.to_subspace()); }
  Subspace row_space() const { return rows_.to_subspace(); }

 private:
  EchelonBasis rows_;
};

namespace detail {
/// Dense fraction-free Gauss-Jordan on integer-scaled real rows, using the
/// active SIMD kernels.  Returns nullopt when the input is not real, when
/// scaled entries leave the kernel's lane range, or when intermediate values
/// outgrow it; callers then fall back to exact sparse elimination.
std::optional<Subspace> dense_rref(std::span<const Vector> rows, std::size_t ambient_dim);
/// Whether rref() would try the dense route for this input.
bool prefers_dense(std::span<const Vector> rows, std::size_t ambient_dim);
Subspace sparse_rref(std::span<const Vector> rows, std::size_t ambient_dim);
}  // namespace detail

}  // namespace idalg
