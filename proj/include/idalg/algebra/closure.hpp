#pragma once

#include <cstddef>
#include <span>

#include "idalg/algebra/operator.hpp"

namespace idalg {

struct ClosureReport {
  Subspace closure;
  std::size_t rounds = 0;
  std::size_t products_computed = 0;
};

enum class ClosureKind { Lie, Assoc };

struct ClosureOptions {
  /// When the generators span a space containing g, grow g-modules and
  /// multiply only by highest weight vectors.  Off gives the plain worklist.
  bool use_module_structure = true;
};

/// Smallest bracket-closed (resp. composition-closed, non-unital) subspace
/// containing the generators.
ClosureReport lie_closure(std::span<const OperatorN> gens, std::size_t n, ClosureOptions opts = {});
ClosureReport assoc_closure(std::span<const OperatorN> gens, std::size_t n, ClosureOptions opts = {});
ClosureReport closure(ClosureKind kind, std::span<const OperatorN> gens, std::size_t n, ClosureOptions opts = {});

bool is_lie_closed(const Subspace& s, std::size_t n);
bool is_assoc_closed(const Subspace& s, std::size_t n);

/// Reference forms: every ordered pair of basis elements.
bool is_lie_closed_all_pairs(const Subspace& s, std::size_t n);
bool is_assoc_closed_all_pairs(const Subspace& s, std::size_t n);

}  // namespace idalg
