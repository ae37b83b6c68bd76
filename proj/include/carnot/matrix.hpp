#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "carnot/rational.hpp"

namespace carnot {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  /// Rows must share a common length; an empty list gives a 0 x cols matrix.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  /// Row-major flattening; the inverse of from_flat.
  Vector flatten() const { return entries_; }
  static Matrix from_flat(const Vector& v, std::size_t rows, std::size_t cols);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& x);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);

Matrix power(const Matrix& a, unsigned exponent);

/// Stacks b under a. Column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);
/// Places b to the right of a. Row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix matrix;  ///< same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form with unit pivots.
RrefResult rref(const Matrix& m);

/// Throws SingularMatrix when a is not invertible.
Matrix inverse(const Matrix& a);

/// Incremental Gauss-Jordan elimination. The stored rows always form a
/// reduced row echelon basis of the span of everything added so far, so a
/// new row is reduced in a single pass over the pivot columns.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Adds a row to the span. Returns true when it was independent.
  bool add(Vector row);

  /// Reduces v modulo the current span in place.
  void reduce(Vector& v) const;

  /// Canonical RREF basis, sorted by pivot column.
  Matrix basis() const;
  std::vector<std::size_t> pivots() const;

  /// Basis of {x : r . x = 0 for all stored rows r}, one vector per free
  /// column, with a 1 in that column.
  std::vector<Vector> kernel_vectors() const;

 private:
  struct Row {
    std::size_t pivot;
    Vector values;
    std::vector<std::size_t> support;
  };

  static void refresh_support(Row& r);

  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<long> row_of_pivot_;
};

}  // namespace carnot
