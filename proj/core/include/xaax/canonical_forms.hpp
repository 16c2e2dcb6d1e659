#pragma once

#include <cstddef>

#include "xaax/matrix.hpp"
#include "xaax/scalar.hpp"

namespace xaax {

/// Identifies the Type-II canonical block H_2n(mu).
struct CanonicalSpec {
  std::size_t n = 1;
  Scalar mu{1};

  /// (-1)^n.
  Scalar hard_case_mu() const { return n % 2 == 0 ? Scalar(1) : Scalar(-1); }
  /// True when mu = (-1)^n, the case with nonzero off-diagonal blocks.
  bool is_hard_case() const { return mu == hard_case_mu(); }
  /// 0 != mu != (-1)^(n+1) and n >= 1.
  bool is_admissible() const;
  /// Throws InvalidCanonicalParameter naming the violated constraint.
  void validate() const;

  friend bool operator==(const CanonicalSpec&, const CanonicalSpec&) = default;
};

/// n x n upper Jordan block: mu on the diagonal, ones on the superdiagonal.
/// Any mu is accepted, including 0.
Matrix jordan_block(std::size_t n, const Scalar& mu);

/// [[0, I_n], [J_n(mu), 0]].
Matrix h_block(const CanonicalSpec& spec);

/// The cosquare H * H^{-T} of H = H_2n(mu). Block-wise this is
/// diag(J_n(mu)^{-T}, J_n(mu)): the inverse-transpose block comes first.
/// (H^{-T} * H is the other order, diag(J_n(mu), J_n(mu)^{-T}).) Every
/// solution X of X H + H X^T = 0 commutes with it.
Matrix cosquare(const CanonicalSpec& spec);

}  // namespace xaax
