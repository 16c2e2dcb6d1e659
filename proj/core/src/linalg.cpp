#include "xaax/linalg.hpp"

#include <string>
#include <utility>

#include "xaax/errors.hpp"

namespace xaax {

namespace {

// Row-major working copy for in-place elimination.
struct Workspace {
  std::size_t rows;
  std::size_t cols;
  std::vector<Scalar> a;

  explicit Workspace(const Matrix& m)
      : rows(m.rows()), cols(m.cols()), a(m.entries().begin(), m.entries().end()) {}

  Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(r1, c), at(r2, c));
  }
};

}  // namespace

RrefResult rref(const Matrix& m) {
  Workspace w(m);
  RrefResult result;
  std::size_t row = 0;
  std::vector<std::size_t> support;
  for (std::size_t col = 0; col < w.cols && row < w.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < w.rows && w.at(pivot, col).is_zero()) ++pivot;
    if (pivot == w.rows) continue;
    w.swap_rows(row, pivot);

    const Scalar inv = w.at(row, col).inverse();
    support.clear();
    for (std::size_t c = col; c < w.cols; ++c) {
      Scalar& x = w.at(row, c);
      if (x.is_zero()) continue;
      x *= inv;
      support.push_back(c);
    }

    for (std::size_t r = 0; r < w.rows; ++r) {
      if (r == row || w.at(r, col).is_zero()) continue;
      const Scalar factor = w.at(r, col);
      for (std::size_t c : support) w.at(r, c).sub_mul(factor, w.at(row, c));
    }

    result.pivot_columns.push_back(col);
    ++row;
  }
  result.rank = result.pivot_columns.size();
  result.rref = Matrix(w.rows, w.cols, std::move(w.a));
  return result;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Matrix> null_space(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivot_columns) is_pivot[p] = true;

  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivot_columns[i]] = -r.rref(i, free);
    basis.emplace_back(m.cols(), 1, std::move(v));
  }
  return basis;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return Matrix::generate(a.rows() * b.rows(), a.cols() * b.cols(),
                          [&](std::size_t r, std::size_t c) {
                            const Scalar& x = a(r / b.rows(), c / b.cols());
                            if (x.is_zero()) return Scalar();
                            return x * b(r % b.rows(), c % b.cols());
                          });
}

Matrix commutation_matrix(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw OutOfRange("commutation_matrix requires m, n >= 1");
  const std::size_t size = m * n;
  std::vector<Scalar> e(size * size);
  // vec(X) index of X(i, j) is j*m + i; vec(X^T) index of X(i, j) is i*n + j.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) e[(i * n + j) * size + (j * m + i)] = Scalar(1);
  }
  return Matrix(size, size, std::move(e));
}

Matrix reverse_identity(std::size_t n) {
  if (n == 0) throw OutOfRange("reverse_identity requires n >= 1");
  return Matrix::generate(n, n, [n](std::size_t r, std::size_t c) {
    return r + c == n - 1 ? Scalar(1) : Scalar();
  });
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw NonSquareInput("inverse of non-square matrix");
  const std::size_t n = m.rows();
  const Matrix augmented = Matrix::generate(n, 2 * n, [&](std::size_t r, std::size_t c) {
    if (c < n) return m(r, c);
    return c - n == r ? Scalar(1) : Scalar();
  });
  const RrefResult r = rref(augmented);
  if (r.rank < n || r.pivot_columns[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  return r.rref.block(0, n, n, n);
}

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw NonSquareInput("determinant of non-square matrix");
  Workspace w(m);
  const std::size_t n = w.rows;
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && w.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar();
    if (pivot != col) {
      w.swap_rows(col, pivot);
      det = -det;
    }
    const Scalar p = w.at(col, col);
    det *= p;
    const Scalar inv = p.inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (w.at(r, col).is_zero()) continue;
      const Scalar factor = w.at(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) w.at(r, c).sub_mul(factor, w.at(col, c));
    }
  }
  return det;
}

Matrix vec(const Matrix& x) {
  return Matrix::generate(x.rows() * x.cols(), 1, [&](std::size_t k, std::size_t) {
    return x(k % x.rows(), k / x.rows());
  });
}

Matrix devec(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols) {
    throw ShapeMismatch("devec: expected a " + std::to_string(rows * cols) + "x1 column");
  }
  return Matrix::generate(rows, cols,
                          [&](std::size_t r, std::size_t c) { return v(c * rows + r, 0); });
}

Matrix stack_vectorized(std::span<const Matrix> elements) {
  if (elements.empty()) return Matrix();
  const std::size_t rows = elements.front().rows();
  const std::size_t cols = elements.front().cols();
  for (const auto& e : elements) {
    if (e.rows() != rows || e.cols() != cols) {
      throw ShapeMismatch("stack_vectorized: elements differ in shape");
    }
  }
  return Matrix::generate(rows * cols, elements.size(), [&](std::size_t k, std::size_t j) {
    return elements[j](k % rows, k / rows);
  });
}

std::size_t span_rank(std::span<const Matrix> elements) {
  if (elements.empty()) return 0;
  return rank(stack_vectorized(elements));
}

std::vector<std::optional<std::vector<Scalar>>> coordinates(std::span<const Matrix> basis,
                                                            std::span<const Matrix> targets) {
  std::vector<std::optional<std::vector<Scalar>>> out;
  if (targets.empty()) return out;
  const std::size_t d = basis.size();

  std::vector<Matrix> all(basis.begin(), basis.end());
  all.insert(all.end(), targets.begin(), targets.end());
  const RrefResult r = rref(stack_vectorized(all));

  // With an independent basis the first d columns are exactly the first d pivots.
  for (std::size_t i = 0; i < d; ++i) {
    if (i >= r.rank || r.pivot_columns[i] != i) {
      throw Error("coordinates: basis elements are linearly dependent");
    }
  }

  out.reserve(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const std::size_t col = d + t;
    bool in_span = true;
    for (std::size_t row = d; row < r.rref.rows(); ++row) {
      if (!r.rref(row, col).is_zero()) {
        in_span = false;
        break;
      }
    }
    if (!in_span) {
      out.emplace_back(std::nullopt);
      continue;
    }
    std::vector<Scalar> coeffs;
    coeffs.reserve(d);
    for (std::size_t i = 0; i < d; ++i) coeffs.push_back(r.rref(i, col));
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

Matrix linear_combination(std::span<const Scalar> coefficients, std::span<const Matrix> elements) {
  if (coefficients.size() != elements.size() || elements.empty()) {
    throw ShapeMismatch("linear_combination: " + std::to_string(coefficients.size()) +
                        " coefficients for " + std::to_string(elements.size()) + " elements");
  }
  Matrix sum = Matrix::zeros(elements.front().rows(), elements.front().cols());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (coefficients[i].is_zero()) continue;
    sum = sum + coefficients[i] * elements[i];
  }
  return sum;
}

}  // namespace xaax
