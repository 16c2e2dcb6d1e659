#include "xaax/oracle.hpp"

#include <string>
#include <vector>

#include "xaax/errors.hpp"
#include "xaax/linalg.hpp"

namespace xaax {

VectorizedSystem vectorized_system(const Matrix& a, const OracleOptions& options) {
  if (!a.is_square()) {
    throw NonSquareInput("oracle input must be square, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
  }
  const std::size_t n = a.rows();
  if (n == 0) throw NonSquareInput("oracle input must be nonempty");
  if (n > options.max_order) {
    throw SizeLimit("oracle input order " + std::to_string(n) + " exceeds the limit of " +
                    std::to_string(options.max_order));
  }
  const Matrix id = Matrix::identity(n);
  Matrix system = kron(a.transpose(), id) + kron(id, a) * commutation_matrix(n, n);
  return VectorizedSystem{a, std::move(system)};
}

SolutionBasis oracle_basis(const Matrix& a, const OracleOptions& options) {
  const VectorizedSystem sys = vectorized_system(a, options);
  const std::size_t n = a.rows();
  SolutionBasis basis;
  std::size_t index = 0;
  for (const auto& v : null_space(sys.system)) {
    basis.elements.push_back(devec(v, n, n));
    basis.roles.push_back({BasisRole::Kind::Kernel, index++});
  }
  return basis;
}

bool span_equal(std::span<const Matrix> first, std::span<const Matrix> second) {
  std::vector<Matrix> all(first.begin(), first.end());
  all.insert(all.end(), second.begin(), second.end());
  // Checks shapes across both lists before any rank work.
  const Matrix stacked = stack_vectorized(all);
  const std::size_t r1 = span_rank(first);
  const std::size_t r2 = span_rank(second);
  if (r1 != r2) return false;
  return (all.empty() ? 0 : rank(stacked)) == r1;
}

}  // namespace xaax
