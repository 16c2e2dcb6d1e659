#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "xaax/lie_tools.hpp"
#include "xaax/matrix.hpp"
#include "xaax/solver.hpp"

namespace xaax {

// Keys are emitted in insertion order so output is stable and matches the
// documented layouts.
using Json = nlohmann::ordered_json;

/// ["re", "im"], each rational written "p/q" or "p".
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [[re, im], ...]} in row-major order.
Json matrix_to_json(const Matrix& m);
/// Throws ParseError on any structural problem.
Matrix matrix_from_json(const Json& j);

std::string dump_matrix(const Matrix& m);
Matrix parse_matrix(std::string_view text);

/// {"n", "mu", "dimension", "elements": [...], "roles": [...]}; "n" and "mu"
/// are omitted for oracle bases of arbitrary matrices.
Json basis_to_json(const SolutionBasis& basis);

/// {"dim": d, "entries": [{"i", "j", "k", "c"}, ...]} listing nonzero c(i, j, k)
/// with i < j. "c" is a "p/q" string when real, otherwise ["re", "im"].
Json structure_to_json(const StructureConstants& sc);
StructureConstants structure_from_json(const Json& j);

}  // namespace xaax
