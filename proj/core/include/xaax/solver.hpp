#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xaax/canonical_forms.hpp"
#include "xaax/matrix.hpp"

namespace xaax {

/// Tag describing where a basis element comes from.
struct BasisRole {
  enum class Kind { Diagonal, BParam, CParam, Kernel };
  Kind kind = Kind::Diagonal;
  std::size_t index = 0;

  /// "DIAGONAL(0)", "B_PARAM(1)", "C_PARAM(0)", "KERNEL(3)".
  std::string label() const;

  friend bool operator==(const BasisRole&, const BasisRole&) = default;
};

/// Ordered linearly independent basis of the solution space of
/// X A + A X^T = 0.
///
/// Closed-form bases carry the CanonicalSpec they were built for. Oracle
/// bases of an arbitrary A leave `spec` empty and tag every element KERNEL.
struct SolutionBasis {
  std::optional<CanonicalSpec> spec;
  std::vector<Matrix> elements;
  std::vector<BasisRole> roles;

  std::size_t dimension() const { return elements.size(); }
};

/// [J^0, J^1, ..., J^(n-1)] for J = J_n(mu): a basis of the upper-triangular
/// Toeplitz matrices, i.e. of the commutant of J_n(mu).
std::vector<Matrix> toeplitz_commutant_basis(std::size_t n, const Scalar& mu);

/// Delta_n (J^l + J^(n-1-l)) for l = 0 .. ceil(n/2)-1, J = J_n((-1)^n).
/// Spans the solutions of B J + B^T = 0.
std::vector<Matrix> b_block_basis(std::size_t n);

/// R E R for each E in b_block_basis(n), R the reversed identity.
/// Spans the solutions of C + J C^T = 0.
std::vector<Matrix> c_block_basis(std::size_t n);

/// Closed-form basis of the solution space for H_2n(mu). Elements are
/// ordered DIAGONAL(0..n-1), then B_PARAM(...), then C_PARAM(...); the last
/// two groups appear only when mu = (-1)^n.
SolutionBasis explicit_basis(const CanonicalSpec& spec);

/// n + 2*ceil(n/2) when mu = (-1)^n, otherwise n.
std::size_t dimension(const CanonicalSpec& spec);

/// sum params[i] * explicit_basis(spec).elements[i].
Matrix solution_from_params(const CanonicalSpec& spec, std::span<const Scalar> params);

/// The four n x n residuals of the block system for X = [[A, B], [C, D]]:
///   B J + B^T,  A + D^T,  D J + J A^T,  C + J C^T.
/// X solves X H + H X^T = 0 exactly when all four vanish.
struct BlockResiduals {
  Matrix b;
  Matrix ad;
  Matrix ad_jordan;
  Matrix c;

  bool all_zero() const { return b.is_zero() && ad.is_zero() && ad_jordan.is_zero() && c.is_zero(); }
};

BlockResiduals block_residuals(const CanonicalSpec& spec, const Matrix& x);

/// X H + H X^T.
Matrix equation_residual(const Matrix& x, const Matrix& a);

}  // namespace xaax
