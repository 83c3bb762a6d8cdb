#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idalg/algebra/operator.hpp"

namespace idalg {

/// A g-submodule of operator space.
struct GModule {
  std::string name;
  Subspace space;
  std::size_t expected_dim = 0;
  std::optional<OperatorN> hwv;
  /// Coefficients of the tabulated highest weight on e_11..e_nn.
  std::vector<std::int64_t> weight;
  /// Result of comparing against the independent explicit-span construction,
  /// when one exists.
  std::optional<bool> explicit_match;
  /// False for n < 5, where the table is not claimed to hold.
  bool certified = true;
};

/// Names accepted by Catalog::module, in table order.
const std::vector<std::string>& module_names();
/// Ambient names accepted by Catalog::ambient (short CLI forms).
const std::vector<std::string>& ambient_names();

/// Named maps on M_n used throughout.
OperatorN trace_times(const MatN& a);   // x -> tr(x) a
OperatorN trace_against(const MatN& a); // x -> tr(xa) 1
OperatorN v_map(const MatN& a);         // a(x)1 + 1(x)a
OperatorN w_map(const MatN& a, const GaussScalar& lambda);
/// x -> x - n tr(x) 1
OperatorN v8_map(std::size_t n);
/// x -> tr(x) 1, so that T_0 = span{identity, trace_one(n)}.
OperatorN trace_one(std::size_t n);

/// -2 lambda / (n lambda + 2); singular-parameter error at lambda = -2/n.
GaussScalar mu_of(const GaussScalar& lambda, std::size_t n);

/// The traceless a with d = inner_deriv(a); NotInG if none exists.
MatN recover_inner(const OperatorN& d);
OperatorN phi1(const OperatorN& d);
OperatorN phi2(const OperatorN& d);
OperatorN phi3(const OperatorN& d);

/// Span of t s t^{-1} over a basis of s.
Subspace conjugate(const Subspace& s, const OperatorN& t);

/// Everything built from the table for one n.  Construction is lazy and
/// cached; instances are shared through Catalog::get and are safe to use from
/// several threads.
class Catalog {
 public:
  explicit Catalog(std::size_t n);
  static const Catalog& get(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t ambient_dim() const noexcept { return n_ * n_ * n_ * n_; }
  bool certified() const noexcept { return n_ >= 5; }

  const Subspace& g() const;
  /// ad e_{i,i+1} and ad e_{i+1,i}.
  const std::vector<OperatorN>& chevalley() const { return chevalley_; }
  const std::vector<OperatorN>& raising() const { return raising_; }

  /// Smallest subspace containing the seeds and stable under the Chevalley generators.
  Subspace generate_gmodule(std::span<const OperatorN> seeds) const;
  Subspace generate_gmodule(const Subspace& seeds) const;

  OperatorN hwv(std::string_view name) const;
  const GModule& module(std::string_view name) const;
  /// Name in either short (sl2) or long (sl_n2) form.
  const Subspace& ambient(std::string_view name) const;

  Subspace w_lambda(const GaussScalar& lambda) const;
  /// Explicit-span construction of a module, where the table gives one.
  std::optional<Subspace> explicit_span(std::string_view name) const;

  bool is_highest_weight(const OperatorN& v) const;
  bool is_g_stable(const Subspace& s) const;
  /// [ad h, v] for h = diag(coeffs).
  OperatorN diagonal_action(std::span<const std::int64_t> coeffs, const OperatorN& v) const;
  /// True iff v is an eigenvector of every ad(e_ii - e_{i+1,i+1}) with the
  /// eigenvalue given by the tabulated weight.
  bool weight_matches(const OperatorN& v, std::span<const std::int64_t> weight) const;

  /// Highest weight vectors of gl(n^2): the common kernel of the raising operators.
  const Subspace& highest_weight_space() const;

 private:
  std::size_t n_;
  std::vector<OperatorN> chevalley_;
  std::vector<OperatorN> raising_;

  mutable std::recursive_mutex mu_;
  mutable std::optional<Subspace> g_;
  mutable std::optional<Subspace> hgl_;
  mutable std::map<std::string, std::unique_ptr<GModule>, std::less<>> modules_;
  mutable std::map<std::string, std::unique_ptr<Subspace>, std::less<>> ambient_;
};

}  // namespace idalg
