#include "xaax/pascal_delta.hpp"

#include <string>

#include "xaax/canonical_forms.hpp"
#include "xaax/errors.hpp"
#include "xaax/linalg.hpp"

namespace xaax {

namespace {

Scalar sign_mu(std::size_t n) { return n % 2 == 0 ? Scalar(1) : Scalar(-1); }

void require_order(std::size_t n) {
  if (n == 0) throw OutOfRange("Delta_n requires n >= 1");
}

}  // namespace

std::vector<std::vector<mpz_class>> pascal_triangle(std::size_t max_row) {
  std::vector<std::vector<mpz_class>> rows;
  rows.reserve(max_row + 1);
  rows.push_back({mpz_class(1)});
  for (std::size_t a = 1; a <= max_row; ++a) {
    const auto& prev = rows.back();
    std::vector<mpz_class> row(a + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t b = 1; b < a; ++b) row[b] = prev[b - 1] + prev[b];
    rows.push_back(std::move(row));
  }
  return rows;
}

Scalar delta_entry(std::size_t n, long i, long j) {
  const long size = static_cast<long>(n);
  if (i < 1 || j < 1 || i > size || j > size) return Scalar();
  const long top = j - 1;
  const long bottom = size - i;
  if (bottom > top) return Scalar();
  const auto triangle = pascal_triangle(static_cast<std::size_t>(top));
  const Scalar mu = sign_mu(n);
  const Scalar sign = mu.pow(i) * (-mu).pow(j - 1);
  return sign * Scalar(mpq_class(triangle[top][bottom]), mpq_class(0));
}

DeltaMatrix delta(std::size_t n) {
  require_order(n);
  const Scalar mu = sign_mu(n);
  // The closed form gives [-1] at n = 1; the reference table, and the n = 1
  // off-diagonal bases built from it, use [1]. Any nonzero 1x1 matrix
  // satisfies all three identities, so only the sign convention is at stake.
  if (n == 1) return DeltaMatrix{1, Matrix{{1}}, mu};
  const auto triangle = pascal_triangle(n - 1);
  // Native 0-based (r, c) maps to (i, j) = (r + 1, c + 1), so the entry is
  // mu^(r+1) (-mu)^c C(c, n-1-r).
  Matrix m = Matrix::generate(n, n, [&](std::size_t r, std::size_t c) {
    const std::size_t bottom = n - 1 - r;
    if (bottom > c) return Scalar();
    const Scalar sign = mu.pow(static_cast<long>(r + 1)) * (-mu).pow(static_cast<long>(c));
    return sign * Scalar(mpq_class(triangle[c][bottom]), mpq_class(0));
  });
  return DeltaMatrix{n, std::move(m), mu};
}

Matrix delta_inverse(std::size_t n) {
  const Matrix d = delta(n).matrix;
  return Matrix::generate(n, n,
                          [&](std::size_t r, std::size_t c) { return d(n - 1 - r, n - 1 - c); });
}

bool check_similarity(std::size_t n) {
  require_order(n);
  const Scalar mu = sign_mu(n);
  const Matrix j = jordan_block(n, mu);
  const Matrix lhs = delta(n).matrix * j * delta_inverse(n);
  return lhs == inverse(j).transpose();
}

bool check_transpose_identity(std::size_t n, std::size_t l) {
  require_order(n);
  if (l > n) {
    throw OutOfRange("power index l = " + std::to_string(l) + " outside [0, " +
                     std::to_string(n) + "]");
  }
  const Matrix j = jordan_block(n, sign_mu(n));
  const Matrix d = delta(n).matrix;
  const Matrix lhs = (d * j.pow(static_cast<unsigned>(l))).transpose();
  const Matrix rhs = -(d * j.pow(static_cast<unsigned>(n - l)));
  return lhs == rhs;
}

Matrix recurrence_residual(std::size_t n) {
  require_order(n);
  const Scalar mu = sign_mu(n);
  const Matrix nil = jordan_block(n, Scalar());
  const Matrix d = delta(n).matrix;
  return nil.transpose() * d * nil + mu * (d * nil) + mu * (nil.transpose() * d);
}

}  // namespace xaax
