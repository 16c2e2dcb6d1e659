#include "xaax/canonical_forms.hpp"

#include <string>

#include "xaax/errors.hpp"
#include "xaax/linalg.hpp"

namespace xaax {

bool CanonicalSpec::is_admissible() const {
  return n >= 1 && !mu.is_zero() && mu != -hard_case_mu();
}

void CanonicalSpec::validate() const {
  if (n == 0) throw InvalidCanonicalParameter("n must be at least 1");
  if (mu.is_zero()) {
    throw InvalidCanonicalParameter("mu = 0 violates 0 != mu != (-1)^(n+1)");
  }
  if (mu == -hard_case_mu()) {
    throw InvalidCanonicalParameter("mu = " + mu.to_string() + " = (-1)^(n+1) for n = " +
                                    std::to_string(n) + " violates 0 != mu != (-1)^(n+1)");
  }
}

Matrix jordan_block(std::size_t n, const Scalar& mu) {
  if (n == 0) throw OutOfRange("jordan_block requires n >= 1");
  return Matrix::generate(n, n, [&](std::size_t r, std::size_t c) {
    if (r == c) return mu;
    return c == r + 1 ? Scalar(1) : Scalar();
  });
}

Matrix h_block(const CanonicalSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  return Matrix::from_blocks(Matrix::zeros(n, n), Matrix::identity(n), jordan_block(n, spec.mu),
                             Matrix::zeros(n, n));
}

Matrix cosquare(const CanonicalSpec& spec) {
  spec.validate();
  const Matrix j = jordan_block(spec.n, spec.mu);
  return Matrix::direct_sum(inverse(j).transpose(), j);
}

}  // namespace xaax
