#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "idalg/algebra/classifier.hpp"
#include "idalg/algebra/corollary.hpp"
#include "idalg/algebra/operator.hpp"

namespace idalg::io {

/// Insertion-ordered so emitted keys follow a fixed order.
using Json = nlohmann::ordered_json;

// Scalars: "3", "-1/2", "i", "1/2-3i", or {"re": "1/2", "im": "3"}; bare
// JSON integers are also accepted on input.
GaussScalar parse_scalar_text(std::string_view text);
GaussScalar scalar_from_json(const Json& j);
Json scalar_to_json(const GaussScalar& s);

// Matrices: an n x n array of scalars, {"e": [i, j]} (1-based), {"id": true},
// {"sum": [...]} or {"scale": [s, M]}.
MatN matrix_from_json(const Json& j, std::size_t n);
Json matrix_to_json(const MatN& m);

/// Operator terms: a dense n^2 x n^2 array, {"tensor": [A, B]}, {"ad": A},
/// {"sum": [...]}, {"scale": [s, T]}, {"t": [alpha, beta]}, {"compose": [S, T]},
/// {"identity": true}, {"trace_times": A}, {"trace_against": A}, {"v": A},
/// {"w": [A, lambda]}, {"v8": true}, {"hwv": "V5"}.
OperatorN operator_from_json(const Json& j, std::size_t n);
Json operator_to_json(const OperatorN& t);

/// A generator list: an array of entries, or {"gens": [...]}, or a single
/// entry.  Each entry is an operator term or a whole space: {"<module>": true},
/// {"<ambient>": true} or {"W": lambda}, which contributes its basis.
std::vector<OperatorN> generators_from_json(const Json& j, std::size_t n);

Json label_to_json(const ClassLabel& label);
ClassLabel label_from_json(const Json& j);

/// {"l": 3, "terms": [{"perm": [1,2,3], "coeff": "1"}, ...]}, permutations 1-based.
MultilinearPoly poly_from_json(const Json& j);
Json poly_to_json(const MultilinearPoly& f);

Json basis_to_json(const Subspace& s, std::size_t n);

}  // namespace idalg::io
