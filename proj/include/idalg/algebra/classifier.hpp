#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idalg/algebra/operator.hpp"

namespace idalg {

enum class Family { SL_N2, LIST_I, LIST_II, LIST_III, SO_CONJ, G_PLUS_W };

/// An entry of the list of Lie subalgebras of gl(n^2) containing g.
///
/// LIST_I/II/III carry an index 1..6 selecting the summands added to
/// sl(n^2-1), so(n^2-1) or g respectively:
///   1: none, 2: p, 3: q, 4: V8, 5: p + V8, 6: q + V8.
/// ft, when present, is the (alpha, beta) of the extra direction t_matrix(alpha, beta).
struct ClassLabel {
  Family family = Family::SL_N2;
  int index = 0;
  std::optional<GaussScalar> lambda;
  /// alpha/beta for t = t_matrix(alpha, beta); only its square is determined.
  std::optional<GaussScalar> t_ratio;
  std::optional<GaussScalar> t_ratio_sq;
  std::optional<std::pair<GaussScalar, GaussScalar>> ft;

  /// "SL_N2", "LIST_II_5", "SO_CONJ", ...
  std::string kind() const;
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

/// Parses kind() strings.
ClassLabel label_from_kind(const std::string& kind);

/// Normal form used for comparison: t_ratio replaced by the canonical square
/// root of t_ratio^2 (t_ratio_sq always filled), ft scaled so its first
/// nonzero entry is 1, and ft set to (1, 1) when V8 already lies in the algebra.
ClassLabel canonicalize(const ClassLabel& label, std::size_t n);

/// The labelled algebra.  InvalidParameters for inconsistent labels.
Subspace construct(const ClassLabel& label, std::size_t n);

/// Identifies a Lie algebra S with g ⊆ S ⊆ gl(n^2).  The verdict is checked
/// by reconstructing it; a mismatch raises Unclassifiable.
ClassLabel classify(const Subspace& s, std::size_t n);

/// All labels of the round-trip sweep: the 18 list entries, SO_CONJ with
/// t_ratio in {1, 2, -3, i}, G_PLUS_W with lambda in {0, 1, -1, 3}, each
/// with and without every permitted ft in {(1,0), (0,1), (1,1), (2,3)}, plus SL_N2.
std::vector<ClassLabel> sweep_labels();

}  // namespace idalg
