#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "idalg/algebra/operator.hpp"

namespace idalg {

// ---- trace condition ------------------------------------------------------

/// Maps d with d(1) = 0 and tr(d(x)yz + x d(y) z + x y d(z)) = 0 for all x, y, z.
Subspace trace_condition_space(std::size_t n);
/// tr(d(x)yz + x d(y) z + x y d(z)) evaluated directly.
GaussScalar trace_condition_value(const OperatorN& d, const MatN& x, const MatN& y, const MatN& z);

// ---- kernels --------------------------------------------------------------

Subspace op_kernel(const OperatorN& t);

struct KernelReport {
  Subspace kernel;
  bool is_subalgebra = true;
  /// Kernel elements whose product leaves the kernel.
  std::optional<std::pair<MatN, MatN>> witness;
};

KernelReport kernel_is_subalgebra(const OperatorN& t);
/// x, y in ker t and xy not in ker t.
bool breaks_kernel(const OperatorN& t, const MatN& x, const MatN& y);

struct KernelWitness {
  std::string name;
  OperatorN op;
  MatN x, y;
};

/// One operator per family (so(n^2-1), p, q, W(lambda), g + Ft) whose kernel
/// is not a subalgebra, with the pair exhibiting it.  g + Ft contributes
/// both the alpha != 0 and alpha = 0 cases.  Requires n >= 4.
std::vector<KernelWitness> kernel_witnesses(std::size_t n, const GaussScalar& lambda = GaussScalar(1));

// ---- f-derivations --------------------------------------------------------

/// f = sum over sigma of coeff * xi_sigma(1) ... xi_sigma(l).  Permutations
/// are 0-based here (1-based in JSON).
struct MultilinearPoly {
  struct Term {
    std::vector<std::size_t> perm;
    GaussScalar coeff;
  };
  std::size_t l = 0;
  std::vector<Term> terms;

  /// InvalidParameters unless l >= 2, every perm is a permutation of 0..l-1
  /// and some coefficient is nonzero.
  void validate() const;
  MatN evaluate(const std::vector<MatN>& xs) const;

  /// xi_1 xi_2 ... xi_l
  static MultilinearPoly monomial(std::size_t l);
  /// xi_1 xi_2 - xi_2 xi_1
  static MultilinearPoly commutator();
  /// xi_1 xi_2 + xi_2 xi_1
  static MultilinearPoly anticommutator();
};

struct FDerivationOptions {
  /// Sample tuples even when full enumeration is affordable.
  bool force_sampling = false;
  std::uint64_t seed = 1;
  std::size_t batch = 64;
  std::size_t full_limit = 1000000;
};

struct FDerivationReport {
  Subspace space;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::size_t equations = 0;
  std::size_t tuples_sampled = 0;
  /// Sampling only: constraints found by the final sweep that the sample missed.
  std::size_t repairs = 0;
};

/// Solution space of d(f(x_1..x_l)) = sum_i f(.., d(x_i), ..) over M_n,
/// with d(1) = 0 added when require_unital_kill.  HypothesisViolation when l >= 2n.
Subspace f_derivation_space(const MultilinearPoly& f, std::size_t n, bool require_unital_kill);
FDerivationReport f_derivation_report(const MultilinearPoly& f, std::size_t n, bool require_unital_kill,
                                      const FDerivationOptions& opts = {});
/// d(f(xs)) - sum_i f(.., d(x_i), ..)
MatN f_derivation_defect(const OperatorN& d, const MultilinearPoly& f, const std::vector<MatN>& xs);

// ---- css ------------------------------------------------------------------

/// {T : T(1) = 0 and tr T(x) = 0 for all x}, dimension (n^2-1)^2.
Subspace css_space(std::size_t n);

/// T = sum_k tensor(a_k, b_k).
struct TensorCertificate {
  OperatorN op;
  std::vector<std::pair<MatN, MatN>> terms;
};

/// Recomputes sum tensor(a_k, b_k) == op, sum a_k b_k == 0 and sum b_k a_k == 0.
bool certificate_valid(const TensorCertificate& c);
/// Certificate of s o t from certificates of s and t.
TensorCertificate compose_certified(const TensorCertificate& s, const TensorCertificate& t);
TensorCertificate certified_inner_deriv(const MatN& a);

/// Composition closure of the inner derivations in which every spanning word
/// carries a decomposition certificate.
struct CertifiedClosure {
  Subspace closure;
  std::vector<TensorCertificate> words;
};
CertifiedClosure certified_assoc_closure(std::size_t n);

struct CssReport {
  std::size_t css_dim = 0;
  std::size_t closure_dim = 0;
  bool equal = false;
  /// Each certified word passed certificate_valid, and the words span the closure.
  std::optional<bool> certificates_ok;
  std::size_t certificates_checked = 0;
  /// Random sums satisfying the side conditions, and how many landed in css.
  std::size_t conforming_samples = 0;
  std::size_t conforming_in_css = 0;
  bool ok() const;
};

struct CssOptions {
  bool certify = true;
  std::size_t conforming_samples = 10;
  std::uint64_t seed = 1;
};

CssReport verify_css_equivalence(std::size_t n, const CssOptions& opts = {});

/// Random nonzero sum of `pairs` tensors with both side conditions.
TensorCertificate random_conforming_sum(std::size_t n, std::size_t pairs, std::mt19937_64& rng);

// ---- density --------------------------------------------------------------

struct DensityReport {
  std::size_t instances = 0;
  std::size_t solved = 0;
  bool ok() const { return solved == instances; }
};

/// For random independent x_1..x_points and targets y_1..y_points in M_n^0,
/// finds T in css_space(n) with T(x_i) = y_i and re-checks the solution.
DensityReport density_check(std::size_t n, std::size_t points, std::size_t instances, std::uint64_t seed);

/// {x -> a x, x -> x a}: the generators of the multiplication algebra.
std::vector<OperatorN> multiplication_generators(std::size_t n);

// ---- rank floor -----------------------------------------------------------

struct RankReport {
  std::size_t floor = 0;
  std::size_t samples = 0;
  std::size_t min_rank = 0;
  std::size_t below_floor = 0;
  /// The generators g-basis and w_a (a in the M_n^0 basis) taken one at a time.
  std::size_t basis_min_rank = 0;
  std::size_t two_term_maps = 0;
  std::size_t two_term_max_rank = 0;
  bool ok() const;
};

/// x -> tr(x b) a - tr(x a) b
OperatorN two_term_trace_map(const MatN& a, const MatN& b);

/// Ranks of seeded random nonzero elements of g + W(lambda) against n - 2,
/// and of the two-term trace maps against 2.
RankReport rank_floor_check(const GaussScalar& lambda, std::size_t n, std::size_t samples, std::uint64_t seed);

/// Small-integer draws shared by the seeded checks: uniform in [-range, range].
std::int64_t seeded_coefficient(std::mt19937_64& rng, std::int64_t range);

}  // namespace idalg
