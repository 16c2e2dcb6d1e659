#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "xaax/matrix.hpp"

namespace xaax {

struct RrefResult {
  Matrix rref;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

/// Reduced row echelon form. Pivots are chosen leftmost-first, and within a
/// column the first row at or below the current one with a nonzero entry.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Kernel basis read off the free columns of rref(m), ascending. Each vector
/// is an m.cols() x 1 column with entry 1 at its free coordinate.
std::vector<Matrix> null_space(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);

/// The (mn)x(mn) permutation K with K * vec(X) = vec(X^T) for every m x n X.
Matrix commutation_matrix(std::size_t m, std::size_t n);

/// Ones on the antidiagonal.
Matrix reverse_identity(std::size_t n);

/// Throws SingularMatrix or NonSquareInput.
Matrix inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

/// Column-stacking vectorization: vec(X)[c * rows + r] = X(r, c).
Matrix vec(const Matrix& x);
/// Inverse of vec for a rows*cols column vector.
Matrix devec(const Matrix& v, std::size_t rows, std::size_t cols);

/// Matrix whose j-th column is vec(elements[j]). All elements must share a
/// shape; throws ShapeMismatch otherwise.
Matrix stack_vectorized(std::span<const Matrix> elements);

/// Dimension of the span of `elements` (as vectors).
std::size_t span_rank(std::span<const Matrix> elements);

/// For each target, its coordinates in `basis` if it lies in the span,
/// std::nullopt otherwise. `basis` must be linearly independent; a dependent
/// basis throws Error.
std::vector<std::optional<std::vector<Scalar>>> coordinates(std::span<const Matrix> basis,
                                                            std::span<const Matrix> targets);

/// Sum of coefficients[i] * elements[i]; coefficients and elements must have
/// equal length and the list must be nonempty.
Matrix linear_combination(std::span<const Scalar> coefficients, std::span<const Matrix> elements);

}  // namespace xaax
