#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "xaax/matrix.hpp"
#include "xaax/solver.hpp"

namespace xaax {

/// X Y - Y X. Throws ShapeMismatch unless both are square of equal order.
Matrix bracket(const Matrix& x, const Matrix& y);

/// c(i, j, k) with [b_i, b_j] = sum_k c(i, j, k) b_k.
class StructureConstants {
public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  void set(std::size_t i, std::size_t j, std::size_t k, Scalar value) {
    c_[(i * dim_ + j) * dim_ + k] = std::move(value);
  }

  /// c(i, j, k) = -c(j, i, k) and c(i, i, k) = 0.
  bool is_antisymmetric() const;
  /// Tensor form of the Jacobi identity over every (i, j, k, l).
  bool satisfies_jacobi() const;
  /// sum_k c(i, j, k) elements[k].
  Matrix expand(std::size_t i, std::size_t j, std::span<const Matrix> elements) const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<Scalar> c_;
};

/// True iff every pairwise bracket lies in the span of `elements`.
bool closure_check(std::span<const Matrix> elements);
bool closure_check(const SolutionBasis& basis);

/// Exact structure constants in the given basis order. Throws NotClosed if
/// a bracket leaves the span, Error if the elements are dependent.
StructureConstants structure_constants(std::span<const Matrix> elements);
StructureConstants structure_constants(const SolutionBasis& basis);

}  // namespace xaax
