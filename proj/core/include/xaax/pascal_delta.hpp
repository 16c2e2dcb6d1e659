#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "xaax/matrix.hpp"

namespace xaax {

/// The Pascal-triangle matrix that conjugates J_n(mu) into J_n(mu)^{-T}
/// when mu = (-1)^n.
///
/// With 1-based indices, entry (i, j) is mu^i (-mu)^(j-1) C(j-1, n-i), where
/// C(a, b) = 0 for b < 0 or b > a. Everything above the antidiagonal is zero
/// and the antidiagonal is +-1. The one exception is n = 1, where Delta_1 is
/// taken as [1] rather than the closed form's [-1].
struct DeltaMatrix {
  std::size_t n = 0;
  Matrix matrix;
  Scalar mu;
};

/// Rows 0..max_row of Pascal's triangle, built by the additive recurrence.
std::vector<std::vector<mpz_class>> pascal_triangle(std::size_t max_row);

/// Entry (i, j) of the closed form with 1-based indices, without the n = 1
/// override. Indices outside [1, n] yield 0.
Scalar delta_entry(std::size_t n, long i, long j);

DeltaMatrix delta(std::size_t n);

/// Point reflection of Delta_n through its center, which is its inverse.
Matrix delta_inverse(std::size_t n);

/// Delta_n J_n(mu) Delta_n^{-1} == J_n(mu)^{-T}.
bool check_similarity(std::size_t n);

/// (Delta_n J_n^l)^T == -Delta_n J_n^(n-l) for 0 <= l <= n; throws OutOfRange
/// for l > n.
bool check_transpose_identity(std::size_t n, std::size_t l);

/// J^T(0) Delta J(0) + mu Delta J(0) + mu J^T(0) Delta, which vanishes.
Matrix recurrence_residual(std::size_t n);

}  // namespace xaax
