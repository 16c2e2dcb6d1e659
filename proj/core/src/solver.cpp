#include "xaax/solver.hpp"

#include "xaax/errors.hpp"
#include "xaax/linalg.hpp"
#include "xaax/pascal_delta.hpp"

namespace xaax {

namespace {

std::size_t half_up(std::size_t n) { return (n + 1) / 2; }

Scalar hard_mu(std::size_t n) { return n % 2 == 0 ? Scalar(1) : Scalar(-1); }

}  // namespace

std::string BasisRole::label() const {
  const char* name = "DIAGONAL";
  switch (kind) {
    case Kind::Diagonal: name = "DIAGONAL"; break;
    case Kind::BParam: name = "B_PARAM"; break;
    case Kind::CParam: name = "C_PARAM"; break;
    case Kind::Kernel: name = "KERNEL"; break;
  }
  return std::string(name) + "(" + std::to_string(index) + ")";
}

std::vector<Matrix> toeplitz_commutant_basis(std::size_t n, const Scalar& mu) {
  const Matrix j = jordan_block(n, mu);
  std::vector<Matrix> powers;
  powers.reserve(n);
  powers.push_back(Matrix::identity(n));
  for (std::size_t l = 1; l < n; ++l) powers.push_back(powers.back() * j);
  return powers;
}

std::vector<Matrix> b_block_basis(std::size_t n) {
  const auto powers = toeplitz_commutant_basis(n, hard_mu(n));
  const Matrix d = delta(n).matrix;
  std::vector<Matrix> out;
  out.reserve(half_up(n));
  // For odd n the middle term l = (n-1)/2 is 2 J^l; the factor 2 is kept.
  for (std::size_t l = 0; l < half_up(n); ++l) out.push_back(d * (powers[l] + powers[n - 1 - l]));
  return out;
}

std::vector<Matrix> c_block_basis(std::size_t n) {
  const Matrix r = reverse_identity(n);
  std::vector<Matrix> out;
  for (const auto& b : b_block_basis(n)) out.push_back(r * b * r);
  return out;
}

SolutionBasis explicit_basis(const CanonicalSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  const Matrix zero = Matrix::zeros(n, n);

  SolutionBasis basis;
  basis.spec = spec;
  const auto powers = toeplitz_commutant_basis(n, spec.mu);
  for (std::size_t l = 0; l < n; ++l) {
    basis.elements.push_back(Matrix::direct_sum(-powers[l].transpose(), powers[l]));
    basis.roles.push_back({BasisRole::Kind::Diagonal, l});
  }
  if (spec.is_hard_case()) {
    const auto bs = b_block_basis(n);
    for (std::size_t l = 0; l < bs.size(); ++l) {
      basis.elements.push_back(Matrix::from_blocks(zero, bs[l], zero, zero));
      basis.roles.push_back({BasisRole::Kind::BParam, l});
    }
    const auto cs = c_block_basis(n);
    for (std::size_t l = 0; l < cs.size(); ++l) {
      basis.elements.push_back(Matrix::from_blocks(zero, zero, cs[l], zero));
      basis.roles.push_back({BasisRole::Kind::CParam, l});
    }
  }
  return basis;
}

std::size_t dimension(const CanonicalSpec& spec) {
  spec.validate();
  return spec.is_hard_case() ? spec.n + 2 * half_up(spec.n) : spec.n;
}

Matrix solution_from_params(const CanonicalSpec& spec, std::span<const Scalar> params) {
  const std::size_t expected = dimension(spec);
  if (params.size() != expected) {
    throw ParamCountMismatch("expected " + std::to_string(expected) + " parameters for n = " +
                             std::to_string(spec.n) + ", mu = " + spec.mu.to_string() + ", got " +
                             std::to_string(params.size()));
  }
  const SolutionBasis basis = explicit_basis(spec);
  return linear_combination(params, basis.elements);
}

BlockResiduals block_residuals(const CanonicalSpec& spec, const Matrix& x) {
  const std::size_t n = spec.n;
  if (x.rows() != 2 * n || x.cols() != 2 * n) {
    throw ShapeMismatch("block_residuals: expected a " + std::to_string(2 * n) + "x" +
                        std::to_string(2 * n) + " matrix");
  }
  const Matrix j = jordan_block(n, spec.mu);
  const Matrix a = x.block(0, 0, n, n);
  const Matrix b = x.block(0, n, n, n);
  const Matrix c = x.block(n, 0, n, n);
  const Matrix d = x.block(n, n, n, n);
  return BlockResiduals{
      b * j + b.transpose(),
      a + d.transpose(),
      d * j + j * a.transpose(),
      c + j * c.transpose(),
  };
}

Matrix equation_residual(const Matrix& x, const Matrix& a) { return x * a + a * x.transpose(); }

}  // namespace xaax
