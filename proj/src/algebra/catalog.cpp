#include "idalg/algebra/catalog.hpp"

#include <algorithm>
#include <array>

#include "idalg/error.hpp"

namespace idalg {

namespace {

GaussScalar sc(std::int64_t v) { return GaussScalar(v); }

struct Row {
  std::string_view name;
  // Weight as (index, coefficient) pairs with 1-based indices; 0 means n, -1 means n-1.
  std::vector<std::pair<int, int>> weight;
};

const std::vector<Row>& rows() {
  static const std::vector<Row> table{
      {"g", {{1, 1}, {0, -1}}},
      {"V1", {{1, 1}, {2, 1}, {0, -2}}},
      {"V2", {{1, 2}, {-1, -1}, {0, -1}}},
      {"V3", {{1, 1}, {0, -1}}},
      {"V4", {{1, 1}, {0, -1}}},
      {"V5", {{1, 2}, {0, -2}}},
      {"V6", {{1, 1}, {2, 1}, {-1, -1}, {0, -1}}},
      {"V7", {{1, 1}, {0, -1}}},
      {"V8", {}},
      {"p", {{1, 1}, {0, -1}}},
      {"q", {{1, 1}, {0, -1}}},
      {"V4p", {{1, 1}, {0, -1}}},
  };
  return table;
}

const Row& find_row(std::string_view name) {
  for (const auto& r : rows()) {
    if (r.name == name) return r;
  }
  throw Error(Errc::UnknownName, "unknown module name '" + std::string(name) + "'");
}

std::vector<std::int64_t> weight_vector(const Row& row, std::size_t n) {
  std::vector<std::int64_t> w(n, 0);
  for (auto [idx, c] : row.weight) {
    std::size_t i = idx > 0 ? static_cast<std::size_t>(idx) - 1 : (idx == 0 ? n - 1 : n - 2);
    w[i] += c;
  }
  return w;
}

std::size_t expected_dim(std::string_view name, std::size_t n) {
  const std::size_t n2 = n * n;
  if (name == "V1" || name == "V2") return (n2 - 1) * (n2 - 4) / 4;
  if (name == "V5") return n2 * (n - 1) * (n + 3) / 4;
  if (name == "V6") return n2 * (n + 1) * (n - 3) / 4;
  if (name == "V8") return 1;
  return n2 - 1;
}

std::string canonical_ambient(std::string_view name) {
  static const std::array<std::pair<std::string_view, std::string_view>, 6> aliases{{
      {"gl_n2", "gl2"}, {"sl_n2", "sl2"}, {"gl_n2m1", "gl2m1"},
      {"sl_n2m1", "sl2m1"}, {"so_n2", "so2"}, {"so_n2m1", "so2m1"},
  }};
  for (auto [longer, shorter] : aliases) {
    if (name == longer || name == shorter) return std::string(shorter);
  }
  throw Error(Errc::UnknownName, "unknown ambient algebra '" + std::string(name) + "'");
}

Subspace span_ops(std::span<const OperatorN> ops, std::size_t n) {
  return span_of(as_vectors(ops), n * n * n * n);
}

}  // namespace

const std::vector<std::string>& module_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& r : rows()) out.emplace_back(r.name);
    return out;
  }();
  return names;
}

const std::vector<std::string>& ambient_names() {
  static const std::vector<std::string> names{"gl2", "sl2", "gl2m1", "sl2m1", "so2", "so2m1"};
  return names;
}

OperatorN trace_times(const MatN& a) {
  const std::size_t n = a.n();
  return OperatorN::from_map(n, [&](const MatN& x) { return trace(x) * a; });
}

OperatorN trace_against(const MatN& a) {
  const std::size_t n = a.n();
  return OperatorN::from_map(n, [&](const MatN& x) { return trace(mul(x, a)) * identity(n); });
}

OperatorN v_map(const MatN& a) {
  const MatN one = identity(a.n());
  return tensor(a, one) + tensor(one, a);
}

GaussScalar mu_of(const GaussScalar& lambda, std::size_t n) {
  const GaussScalar denom = sc(static_cast<std::int64_t>(n)) * lambda + sc(2);
  if (denom.is_zero()) throw Error(Errc::SingularParameter, "lambda = -2/n is excluded");
  return sc(-2) * lambda / denom;
}

OperatorN w_map(const MatN& a, const GaussScalar& lambda) {
  const GaussScalar mu = mu_of(lambda, a.n());
  return v_map(a) + lambda * trace_times(a) + mu * trace_against(a);
}

OperatorN v8_map(std::size_t n) {
  return OperatorN::identity(n) - sc(static_cast<std::int64_t>(n)) * trace_one(n);
}

OperatorN trace_one(std::size_t n) {
  return OperatorN::from_map(n, [n](const MatN& x) { return trace(x) * identity(n); });
}

MatN recover_inner(const OperatorN& d) {
  const std::size_t n = d.n();
  // sum_ij [a, e_ij] e_ji = n a - tr(a) 1, which is n a for traceless a.
  MatN s(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s += mul(apply(d, unit(n, i, j)), unit(n, j, i));
  }
  MatN a = GaussScalar(Rational(1, static_cast<std::int64_t>(n))) * s;
  if (!trace(a).is_zero() || inner_deriv(a) != d) throw Error(Errc::NotInG, "operator is not an inner derivation");
  return a;
}

OperatorN phi1(const OperatorN& d) { return trace_times(recover_inner(d)); }
OperatorN phi2(const OperatorN& d) { return trace_against(recover_inner(d)); }
OperatorN phi3(const OperatorN& d) { return v_map(recover_inner(d)); }

Subspace conjugate(const Subspace& s, const OperatorN& t) {
  const std::size_t n = t.n();
  if (s.ambient_dim() != n * n * n * n) throw Error(Errc::DimensionMismatch, "subspace and operator size differ");
  const OperatorN tinv = op_inverse(t);
  std::vector<Vector> out;
  out.reserve(s.dim());
  for (const auto& v : s.basis()) out.push_back(compose(compose(t, OperatorN(n, v)), tinv).vec());
  return span_of(out, s.ambient_dim());
}

Catalog::Catalog(std::size_t n) : n_(n) {
  if (n < 2) throw Error(Errc::UnsupportedN, "n must be at least 2");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    chevalley_.push_back(inner_deriv(unit(n, i, i + 1)));
    chevalley_.push_back(inner_deriv(unit(n, i + 1, i)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) raising_.push_back(inner_deriv(unit(n, i, j)));
  }
}

const Catalog& Catalog::get(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<Catalog>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Catalog>(n);
  return *slot;
}

const Subspace& Catalog::g() const {
  std::lock_guard lock(mu_);
  if (!g_) {
    std::vector<OperatorN> ops;
    for (const auto& a : traceless_basis(n_)) ops.push_back(inner_deriv(a));
    g_ = span_ops(ops, n_);
  }
  return *g_;
}

Subspace Catalog::generate_gmodule(std::span<const OperatorN> seeds) const {
  EchelonBasis basis(ambient_dim());
  std::vector<Vector> queue;
  for (const auto& s : seeds) {
    if (auto r = basis.insert(s.vec())) queue.push_back(std::move(*r));
  }
  for (std::size_t head = 0; head < queue.size() && !basis.full(); ++head) {
    const OperatorN v(n_, queue[head]);
    for (const auto& d : chevalley_) {
      if (auto r = basis.insert(op_bracket(d, v).vec())) queue.push_back(std::move(*r));
    }
  }
  return basis.to_subspace();
}

Subspace Catalog::generate_gmodule(const Subspace& seeds) const {
  return generate_gmodule(as_operators(seeds, n_));
}

OperatorN Catalog::hwv(std::string_view name) const {
  const std::size_t n = n_;
  find_row(name);
  auto E = [n](std::size_t i, std::size_t j) { return unit(n, i - 1, j - 1); };
  const MatN one = identity(n);
  auto hw_p = [&] {
    OperatorN out(n);
    for (std::size_t i = 1; i <= n; ++i) out = out + tensor(E(1, i), E(i, n));
    return out;
  };
  auto hw_q = [&] {
    OperatorN out(n);
    for (std::size_t i = 1; i <= n; ++i) out = out + tensor(E(i, n), E(1, i));
    return out;
  };
  if (name == "g") return tensor(E(1, n), one) - tensor(one, E(1, n));
  if (name == "V1") return tensor(E(1, n), E(2, n)) - tensor(E(2, n), E(1, n));
  if (name == "V2") return tensor(E(1, n - 1), E(1, n)) - tensor(E(1, n), E(1, n - 1));
  if (name == "V3") return hw_p() - hw_q();
  if (name == "V4") return tensor(E(1, n), one) + tensor(one, E(1, n));
  if (name == "V5") return tensor(E(1, n), E(1, n));
  if (name == "V6") {
    return tensor(E(2, n - 1), E(1, n)) + tensor(E(1, n), E(2, n - 1)) - tensor(E(1, n - 1), E(2, n)) -
           tensor(E(2, n), E(1, n - 1));
  }
  if (name == "V7") return hw_p() + hw_q();
  if (name == "V8") {
    OperatorN s(n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) s = s + tensor(E(i, j), E(j, i));
    }
    return tensor(one, one) - sc(static_cast<std::int64_t>(n)) * s;
  }
  if (name == "p") return hw_p();
  if (name == "q") return hw_q();
  // V4p
  return sc(static_cast<std::int64_t>(n)) * hwv("V4") - sc(2) * (hw_p() + hw_q());
}

std::optional<Subspace> Catalog::explicit_span(std::string_view name) const {
  find_row(name);
  if (name == "V8") {
    std::vector<OperatorN> ops{v8_map(n_)};
    return span_ops(ops, n_);
  }
  std::vector<OperatorN> ops;
  const GaussScalar nn = sc(static_cast<std::int64_t>(n_));
  for (const auto& a : traceless_basis(n_)) {
    if (name == "g") ops.push_back(inner_deriv(a));
    else if (name == "p") ops.push_back(trace_times(a));
    else if (name == "q") ops.push_back(trace_against(a));
    else if (name == "V3") ops.push_back(trace_times(a) - trace_against(a));
    else if (name == "V4") ops.push_back(v_map(a));
    else if (name == "V7") ops.push_back(trace_times(a) + trace_against(a));
    else if (name == "V4p") ops.push_back(nn * v_map(a) - sc(2) * (trace_times(a) + trace_against(a)));
    else return std::nullopt;
  }
  return span_ops(ops, n_);
}

const GModule& Catalog::module(std::string_view name) const {
  const Row& row = find_row(name);
  std::lock_guard lock(mu_);
  auto it = modules_.find(name);
  if (it != modules_.end()) return *it->second;
  auto m = std::make_unique<GModule>();
  m->name = std::string(name);
  m->hwv = hwv(name);
  m->weight = weight_vector(row, n_);
  m->expected_dim = expected_dim(name, n_);
  m->certified = certified();
  std::vector<OperatorN> seeds{*m->hwv};
  m->space = generate_gmodule(seeds);
  if (auto e = explicit_span(name)) m->explicit_match = (*e == m->space);
  return *modules_.emplace(std::string(name), std::move(m)).first->second;
}

const Subspace& Catalog::ambient(std::string_view name) const {
  const std::string key = canonical_ambient(name);
  std::lock_guard lock(mu_);
  auto it = ambient_.find(key);
  if (it != ambient_.end()) return *it->second;
  Subspace s;
  if (key == "gl2") s = Subspace::full(ambient_dim());
  else if (key == "sl2") s = solve_homogeneous(sl_constraints(n_), ambient_dim());
  else if (key == "gl2m1") s = solve_homogeneous(gl_n2m1_constraints(n_), ambient_dim());
  else if (key == "so2") s = solve_homogeneous(so_constraints(n_), ambient_dim());
  else if (key == "sl2m1") s = intersect(ambient("sl2"), ambient("gl2m1"));
  else s = intersect(ambient("so2"), ambient("gl2m1"));
  return *ambient_.emplace(key, std::make_unique<Subspace>(std::move(s))).first->second;
}

Subspace Catalog::w_lambda(const GaussScalar& lambda) const {
  mu_of(lambda, n_);
  std::vector<OperatorN> ops;
  for (const auto& a : traceless_basis(n_)) ops.push_back(w_map(a, lambda));
  return span_ops(ops, n_);
}

bool Catalog::is_highest_weight(const OperatorN& v) const {
  return std::all_of(raising_.begin(), raising_.end(), [&](const OperatorN& e) { return op_bracket(e, v).is_zero(); });
}

bool Catalog::is_g_stable(const Subspace& s) const {
  MembershipTest member(s);
  for (const auto& v : s.basis()) {
    const OperatorN op(n_, v);
    for (const auto& d : chevalley_) {
      if (!member(op_bracket(d, op).vec())) return false;
    }
  }
  return true;
}

OperatorN Catalog::diagonal_action(std::span<const std::int64_t> coeffs, const OperatorN& v) const {
  MatN h(n_);
  for (std::size_t i = 0; i < n_; ++i) h(i, i) = sc(coeffs[i]);
  return op_bracket(inner_deriv(h), v);
}

bool Catalog::weight_matches(const OperatorN& v, std::span<const std::int64_t> weight) const {
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    std::vector<std::int64_t> h(n_, 0);
    h[i] = 1;
    h[i + 1] = -1;
    if (diagonal_action(h, v) != sc(weight[i] - weight[i + 1]) * v) return false;
  }
  return true;
}

const Subspace& Catalog::highest_weight_space() const {
  std::lock_guard lock(mu_);
  if (hgl_) return *hgl_;
  const std::size_t side = n_ * n_;
  std::vector<Vector> constraints;
  Accumulator acc(side * side);
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    const OperatorN& d = chevalley_[2 * i];
    std::vector<std::vector<std::pair<std::uint32_t, GaussScalar>>> by_row(side), by_col(side);
    for (const auto& e : d.vec().entries()) {
      by_row[e.index / side].emplace_back(e.index % side, e.value);
      by_col[e.index % side].emplace_back(e.index / side, e.value);
    }
    // ([D, X])_{rc} = sum_k D_rk X_kc - sum_k X_rk D_kc.
    for (std::size_t r = 0; r < side; ++r) {
      for (std::size_t c = 0; c < side; ++c) {
        if (by_row[r].empty() && by_col[c].empty()) continue;
        for (const auto& [k, v] : by_row[r]) acc.add(static_cast<std::uint32_t>(k * side + c), v);
        for (const auto& [k, v] : by_col[c]) acc.add(static_cast<std::uint32_t>(r * side + k), -v);
        Vector row = acc.take();
        if (!row.is_zero()) constraints.push_back(std::move(row));
      }
    }
  }
  hgl_ = solve_homogeneous(constraints, side * side);
  return *hgl_;
}

}  // namespace idalg
