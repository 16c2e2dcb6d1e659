#include "xaax/matrix.hpp"

#include <ostream>
#include <string>

#include "xaax/errors.hpp"

namespace xaax {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch(std::string(op) + ": " + shape(a) + " vs " + shape(b));
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ShapeMismatch("entry count " + std::to_string(entries_.size()) + " does not match " +
                        std::to_string(rows) + "x" + std::to_string(cols));
  }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("ragged initializer list");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::zeros(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, std::vector<Scalar>(rows * cols));
}

Matrix Matrix::identity(std::size_t n) {
  std::vector<Scalar> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Scalar(1);
  return Matrix(n, n, std::move(e));
}

Matrix Matrix::generate(std::size_t rows, std::size_t cols,
                        const std::function<Scalar(std::size_t, std::size_t)>& f) {
  std::vector<Scalar> e;
  e.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) e.push_back(f(r, c));
  }
  return Matrix(rows, cols, std::move(e));
}

Matrix Matrix::diagonal(std::span<const Scalar> diag) {
  const std::size_t n = diag.size();
  std::vector<Scalar> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return Matrix(n, n, std::move(e));
}

Matrix Matrix::from_blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
      b.cols() != d.cols()) {
    throw ShapeMismatch("from_blocks: blocks are not conformal");
  }
  const std::size_t top = a.rows();
  const std::size_t left = a.cols();
  return generate(top + c.rows(), left + b.cols(), [&](std::size_t r, std::size_t col) {
    if (r < top) return col < left ? a(r, col) : b(r, col - left);
    return col < left ? c(r - top, col) : d(r - top, col - left);
  });
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  return from_blocks(a, zeros(a.rows(), b.cols()), zeros(b.rows(), a.cols()), b);
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw OutOfRange("index (" + std::to_string(r) + "," + std::to_string(c) + ") outside " +
                     shape(*this));
  }
  return (*this)(r, c);
}

Matrix Matrix::transpose() const {
  return generate(cols_, rows_, [this](std::size_t r, std::size_t c) { return (*this)(c, r); });
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t rows,
                     std::size_t cols) const {
  if (row0 + rows > rows_ || col0 + cols > cols_) {
    throw OutOfRange("block exceeds " + shape(*this));
  }
  return generate(rows, cols,
                  [&](std::size_t r, std::size_t c) { return (*this)(row0 + r, col0 + c); });
}

bool Matrix::is_zero() const {
  for (const auto& s : entries_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::pow(unsigned exponent) const {
  if (!is_square()) throw NonSquareInput("pow of non-square " + shape(*this));
  Matrix result = identity(rows_);
  Matrix base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Matrix Matrix::operator-() const {
  std::vector<Scalar> e;
  e.reserve(entries_.size());
  for (const auto& s : entries_) e.push_back(-s);
  return Matrix(rows_, cols_, std::move(e));
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  std::vector<Scalar> e(a.entries_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries_[i];
  return Matrix(a.rows_, a.cols_, std::move(e));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "subtract");
  std::vector<Scalar> e(a.entries_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.entries_[i];
  return Matrix(a.rows_, a.cols_, std::move(e));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("multiply: " + shape(a) + " * " + shape(b));
  std::vector<Scalar> e(a.rows_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        e[i * b.cols_ + j].add_mul(aik, b(k, j));
      }
    }
  }
  return Matrix(a.rows_, b.cols_, std::move(e));
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  std::vector<Scalar> e;
  e.reserve(m.entries_.size());
  for (const auto& x : m.entries_) e.push_back(s * x);
  return Matrix(m.rows_, m.cols_, std::move(e));
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r != 0) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c != 0) os << ", ";
      os << m(r, c);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace xaax
