#include "xaax/lie_tools.hpp"

#include <string>

#include "xaax/errors.hpp"
#include "xaax/linalg.hpp"

namespace xaax {

namespace {

// Brackets [b_i, b_j] for i < j, in row-major pair order.
std::vector<Matrix> upper_brackets(std::span<const Matrix> elements) {
  std::vector<Matrix> out;
  const std::size_t d = elements.size();
  out.reserve(d * (d - 1) / 2);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) out.push_back(bracket(elements[i], elements[j]));
  }
  return out;
}

}  // namespace

Matrix bracket(const Matrix& x, const Matrix& y) {
  if (!x.is_square() || x.rows() != y.rows() || x.cols() != y.cols()) {
    throw ShapeMismatch("bracket requires square matrices of equal order");
  }
  return x * y - y * x;
}

bool StructureConstants::is_antisymmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        if ((*this)(i, j, k) != -(*this)(j, i, k)) return false;
      }
    }
  }
  return true;
}

bool StructureConstants::satisfies_jacobi() const {
  // [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]] = 0, expanded in the
  // basis: sum_m c(j,k,m) c(i,m,l) + c(k,i,m) c(j,m,l) + c(i,j,m) c(k,m,l).
  const auto& c = *this;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        for (std::size_t l = 0; l < dim_; ++l) {
          Scalar sum;
          for (std::size_t m = 0; m < dim_; ++m) {
            sum.add_mul(c(j, k, m), c(i, m, l));
            sum.add_mul(c(k, i, m), c(j, m, l));
            sum.add_mul(c(i, j, m), c(k, m, l));
          }
          if (!sum.is_zero()) return false;
        }
      }
    }
  }
  return true;
}

Matrix StructureConstants::expand(std::size_t i, std::size_t j,
                                  std::span<const Matrix> elements) const {
  if (elements.size() != dim_) throw ShapeMismatch("expand: element count differs from dim");
  std::vector<Scalar> coeffs;
  coeffs.reserve(dim_);
  for (std::size_t k = 0; k < dim_; ++k) coeffs.push_back((*this)(i, j, k));
  return linear_combination(coeffs, elements);
}

bool closure_check(std::span<const Matrix> elements) {
  if (elements.size() < 2) return true;
  const std::size_t r = span_rank(elements);
  std::vector<Matrix> all(elements.begin(), elements.end());
  for (auto& b : upper_brackets(elements)) all.push_back(std::move(b));
  return span_rank(all) == r;
}

bool closure_check(const SolutionBasis& basis) { return closure_check(basis.elements); }

StructureConstants structure_constants(std::span<const Matrix> elements) {
  const std::size_t d = elements.size();
  StructureConstants sc(d);
  if (d < 2) return sc;

  const auto brackets = upper_brackets(elements);
  const auto coords = coordinates(elements, brackets);
  std::size_t pair = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j, ++pair) {
      if (!coords[pair]) {
        throw NotClosed("bracket of basis elements " + std::to_string(i) + " and " +
                        std::to_string(j) + " leaves the span");
      }
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& value = (*coords[pair])[k];
        sc.set(i, j, k, value);
        sc.set(j, i, k, -value);
      }
    }
  }
  return sc;
}

StructureConstants structure_constants(const SolutionBasis& basis) {
  return structure_constants(basis.elements);
}

}  // namespace xaax
