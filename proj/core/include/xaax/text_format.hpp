#pragma once

#include <string>

#include "xaax/lie_tools.hpp"
#include "xaax/matrix.hpp"
#include "xaax/solver.hpp"

namespace xaax {

/// One bracketed line per row, entries right-aligned to a common width, e.g.
///   [  0  0 -1 ]
///   [  0  1  2 ]
///   [ -1 -1 -1 ]
std::string render_grid(const Matrix& m);

/// Each element's role label followed by its grid, separated by blank lines.
std::string render_basis(const SolutionBasis& basis);

/// "[b_i, b_j] = c b_k + ..." for every i < j with a nonzero bracket.
std::string render_structure(const StructureConstants& sc);

}  // namespace xaax
