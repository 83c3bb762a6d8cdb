#include "idalg/algebra/closure.hpp"

#include "idalg/algebra/catalog.hpp"
#include "idalg/error.hpp"

namespace idalg {

namespace {

OperatorN product(ClosureKind kind, const OperatorN& a, const OperatorN& b) {
  return kind == ClosureKind::Lie ? op_bracket(a, b) : compose(a, b);
}

void check_ambient(const Subspace& s, std::size_t n) {
  if (s.ambient_dim() != n * n * n * n) {
    throw Error(Errc::DimensionMismatch, "subspace is not in operator space for n=" + std::to_string(n));
  }
}

// Left multiplication by the generators only: for Lie algebras right-normed
// commutators span the closure, for associative algebras left words do.
ClosureReport worklist_closure(ClosureKind kind, std::span<const OperatorN> gens, std::size_t n) {
  const std::size_t dim = n * n * n * n;
  ClosureReport rep;
  const Subspace gen_span = span_of(as_vectors(gens), dim);
  const std::vector<OperatorN> left = as_operators(gen_span, n);
  EchelonBasis basis(gen_span);
  std::vector<Vector> current;
  for (const auto& v : gen_span.basis()) current.push_back(v.primitive());
  while (!current.empty() && !basis.full()) {
    ++rep.rounds;
    std::vector<Vector> next;
    for (const auto& v : current) {
      const OperatorN x(n, v);
      for (const auto& g : left) {
        ++rep.products_computed;
        if (auto r = basis.insert(product(kind, g, x).vec())) next.push_back(r->primitive());
        if (basis.full()) break;
      }
      if (basis.full()) break;
    }
    current = std::move(next);
  }
  rep.closure = basis.to_subspace();
  return rep;
}

// Makes `basis` stable under the Chevalley generators, starting from `queue`.
void stabilize(EchelonBasis& basis, std::vector<Vector> queue, const Catalog& cat, std::size_t& products) {
  for (std::size_t head = 0; head < queue.size() && !basis.full(); ++head) {
    const OperatorN v(cat.n(), queue[head]);
    for (const auto& d : cat.chevalley()) {
      ++products;
      if (auto r = basis.insert(op_bracket(d, v).vec())) queue.push_back(r->primitive());
    }
  }
}

// For a g-stable S, S is generated as a g-module by its highest weight
// vectors H, and the Jacobi (resp. Leibniz) identity shows that [H, S] ⊆ S
// (resp. H S ⊆ S) already implies closure.
ClosureReport module_closure(ClosureKind kind, const Subspace& gen_span, std::size_t n) {
  const Catalog& cat = Catalog::get(n);
  ClosureReport rep;
  EchelonBasis basis(gen_span);
  stabilize(basis, std::vector<Vector>(gen_span.basis().begin(), gen_span.basis().end()), cat,
            rep.products_computed);
  while (!basis.full()) {
    ++rep.rounds;
    const Subspace s = basis.to_subspace();
    const Subspace h = intersect(s, cat.highest_weight_space());
    std::vector<Vector> fresh;
    for (const auto& hv : h.basis()) {
      const OperatorN x(n, hv);
      for (const auto& b : s.basis()) {
        ++rep.products_computed;
        if (auto r = basis.insert(product(kind, x, OperatorN(n, b)).vec())) fresh.push_back(r->primitive());
      }
    }
    if (fresh.empty()) break;
    stabilize(basis, std::move(fresh), cat, rep.products_computed);
  }
  rep.closure = basis.to_subspace();
  return rep;
}

bool closed_by_weights(ClosureKind kind, const Subspace& s, std::size_t n) {
  const Catalog& cat = Catalog::get(n);
  const Subspace h = intersect(s, cat.highest_weight_space());
  MembershipTest member(s);
  for (const auto& hv : h.basis()) {
    const OperatorN x(n, hv);
    for (const auto& b : s.basis()) {
      if (!member(product(kind, x, OperatorN(n, b)).vec())) return false;
    }
  }
  return true;
}

bool closed_all_pairs(ClosureKind kind, const Subspace& s, std::size_t n) {
  check_ambient(s, n);
  MembershipTest member(s);
  const auto ops = as_operators(s, n);
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = kind == ClosureKind::Lie ? i + 1 : 0; j < ops.size(); ++j) {
      if (!member(product(kind, ops[i], ops[j]).vec())) return false;
    }
  }
  return true;
}

}  // namespace

ClosureReport closure(ClosureKind kind, std::span<const OperatorN> gens, std::size_t n, ClosureOptions opts) {
  for (const auto& g : gens) {
    if (g.n() != n) throw Error(Errc::SizeMismatch, "generator is not an operator on M_" + std::to_string(n));
  }
  if (opts.use_module_structure) {
    const Subspace gen_span = span_of(as_vectors(gens), n * n * n * n);
    if (contains(gen_span, Catalog::get(n).g())) return module_closure(kind, gen_span, n);
  }
  return worklist_closure(kind, gens, n);
}

ClosureReport lie_closure(std::span<const OperatorN> gens, std::size_t n, ClosureOptions opts) {
  return closure(ClosureKind::Lie, gens, n, opts);
}

ClosureReport assoc_closure(std::span<const OperatorN> gens, std::size_t n, ClosureOptions opts) {
  return closure(ClosureKind::Assoc, gens, n, opts);
}

bool is_lie_closed(const Subspace& s, std::size_t n) {
  check_ambient(s, n);
  if (Catalog::get(n).is_g_stable(s)) return closed_by_weights(ClosureKind::Lie, s, n);
  return closed_all_pairs(ClosureKind::Lie, s, n);
}

bool is_assoc_closed(const Subspace& s, std::size_t n) {
  check_ambient(s, n);
  if (Catalog::get(n).is_g_stable(s)) return closed_by_weights(ClosureKind::Assoc, s, n);
  return closed_all_pairs(ClosureKind::Assoc, s, n);
}

bool is_lie_closed_all_pairs(const Subspace& s, std::size_t n) { return closed_all_pairs(ClosureKind::Lie, s, n); }

bool is_assoc_closed_all_pairs(const Subspace& s, std::size_t n) {
  return closed_all_pairs(ClosureKind::Assoc, s, n);
}

}  // namespace idalg
