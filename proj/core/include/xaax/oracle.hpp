#pragma once

#include <cstddef>
#include <span>

#include "xaax/matrix.hpp"
#include "xaax/solver.hpp"

namespace xaax {

/// The N^2 x N^2 matrix of the linear map X -> X A + A X^T in column-stacked
/// coordinates: system * vec(X) = vec(X A + A X^T).
struct VectorizedSystem {
  Matrix a;
  Matrix system;
};

struct OracleOptions {
  /// Largest accepted order N of A; the system is N^2 x N^2.
  std::size_t max_order = 24;
};

/// (A^T (x) I) + (I (x) A) K(N, N). Throws NonSquareInput, or SizeLimit
/// when N exceeds options.max_order.
VectorizedSystem vectorized_system(const Matrix& a, const OracleOptions& options = {});

/// Brute-force basis of {X : X A + A X^T = 0}: the exact kernel of the
/// vectorized system, devectorized in null_space order. Accepts any square
/// A, including non-canonical and inadmissible ones.
SolutionBasis oracle_basis(const Matrix& a, const OracleOptions& options = {});

/// True iff both lists span the same subspace. All matrices must share a
/// shape (ShapeMismatch otherwise).
bool span_equal(std::span<const Matrix> first, std::span<const Matrix> second);

}  // namespace xaax
