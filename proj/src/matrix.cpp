#include "carnot/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "carnot/error.hpp"

namespace carnot {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("Matrix::from_rows: ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + r * cols);
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("Matrix::from_columns: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_flat(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionMismatch("Matrix::from_flat: wrong length");
  Matrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.entries_ = v;
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product: length mismatch");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (sgn(a(i, k)) != 0 && sgn(x[k]) != 0) y[i] += a(i, k) * x[k];
  return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix sum: shapes differ");
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= s;
  return c;
}

Matrix power(const Matrix& a, unsigned exponent) {
  if (!a.is_square()) throw DimensionMismatch("power: matrix is not square");
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
  auto rows = a.row_vectors();
  for (auto& r : b.row_vectors()) rows.push_back(std::move(r));
  return Matrix::from_rows(rows, a.cols());
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
  Matrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

// RowReducer

RowReducer::RowReducer(std::size_t cols) : cols_(cols), row_of_pivot_(cols, -1) {}

void RowReducer::refresh_support(Row& r) {
  r.support.clear();
  for (std::size_t c = r.pivot; c < r.values.size(); ++c)
    if (sgn(r.values[c]) != 0) r.support.push_back(c);
}

void RowReducer::reduce(Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("RowReducer: row length mismatch");
  Rational t;
  // Stored rows vanish on every other pivot column, so one ascending sweep
  // clears all pivot entries of v.
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0 || row_of_pivot_[c] < 0) continue;
    const Row& r = rows_[static_cast<std::size_t>(row_of_pivot_[c])];
    Rational f = v[c];
    for (std::size_t k : r.support) {
      t = f * r.values[k];
      v[k] -= t;
    }
  }
}

bool RowReducer::add(Vector row) {
  reduce(row);
  std::size_t pivot = 0;
  while (pivot < cols_ && sgn(row[pivot]) == 0) ++pivot;
  if (pivot == cols_) return false;

  Row fresh{pivot, std::move(row), {}};
  if (fresh.values[pivot] != 1) {
    Rational inv = 1 / fresh.values[pivot];
    for (std::size_t c = pivot; c < cols_; ++c)
      if (sgn(fresh.values[c]) != 0) fresh.values[c] *= inv;
  }
  refresh_support(fresh);

  Rational t;
  for (Row& r : rows_) {
    if (sgn(r.values[pivot]) == 0) continue;
    Rational f = r.values[pivot];
    for (std::size_t k : fresh.support) {
      t = f * fresh.values[k];
      r.values[k] -= t;
    }
    refresh_support(r);
  }
  row_of_pivot_[pivot] = static_cast<long>(rows_.size());
  rows_.push_back(std::move(fresh));
  return true;
}

std::vector<std::size_t> RowReducer::pivots() const {
  std::vector<std::size_t> p;
  for (std::size_t c = 0; c < cols_; ++c)
    if (row_of_pivot_[c] >= 0) p.push_back(c);
  return p;
}

Matrix RowReducer::basis() const {
  Matrix m(rows_.size(), cols_);
  std::size_t out = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (row_of_pivot_[c] < 0) continue;
    const Row& r = rows_[static_cast<std::size_t>(row_of_pivot_[c])];
    for (std::size_t k : r.support) m(out, k) = r.values[k];
    ++out;
  }
  return m;
}

std::vector<Vector> RowReducer::kernel_vectors() const {
  std::vector<Vector> out;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (row_of_pivot_[f] >= 0) continue;
    Vector x(cols_);
    x[f] = 1;
    for (const Row& r : rows_)
      if (sgn(r.values[f]) != 0) x[r.pivot] = -r.values[f];
    out.push_back(std::move(x));
  }
  return out;
}

RrefResult rref(const Matrix& m) {
  RowReducer red(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) red.add(m.row_vector(r));
  RrefResult res;
  res.rank = red.rank();
  res.pivots = red.pivots();
  res.matrix = Matrix(m.rows(), m.cols());
  Matrix b = red.basis();
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) res.matrix(r, c) = b(r, c);
  return res;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse: matrix is not square");
  const std::size_t n = a.rows();
  auto red = rref(hstack(a, Matrix::identity(n)));
  if (red.rank < n || (n > 0 && red.pivots[n - 1] != n - 1))
    throw SingularMatrix("inverse: matrix is singular");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.matrix(r, n + c);
  return inv;
}

}  // namespace carnot
