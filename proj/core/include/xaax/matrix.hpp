#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "xaax/scalar.hpp"

namespace xaax {

/// Dense row-major matrix over the Gaussian rationals.
///
/// Matrices are values: every operation returns a new matrix and no public
/// member mutates an existing one.
class Matrix {
public:
  Matrix() = default;
  /// Takes ownership of a row-major entry list; throws ShapeMismatch unless
  /// entries.size() == rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix zeros(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix generate(std::size_t rows, std::size_t cols,
                         const std::function<Scalar(std::size_t, std::size_t)>& f);
  /// Square matrix with `diag` on the diagonal.
  static Matrix diagonal(std::span<const Scalar> diag);
  /// [[a, b], [c, d]] for conformal blocks.
  static Matrix from_blocks(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);
  /// Block-diagonal a (+) b.
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return entries_.empty(); }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Bounds-checked access; throws OutOfRange.
  const Scalar& at(std::size_t r, std::size_t c) const;
  std::span<const Scalar> entries() const { return entries_; }
  std::span<const Scalar> row(std::size_t r) const {
    return std::span<const Scalar>(entries_).subspan(r * cols_, cols_);
  }

  Matrix transpose() const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
  bool is_zero() const;
  Matrix pow(unsigned exponent) const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace xaax
