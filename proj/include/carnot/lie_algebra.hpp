#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "carnot/subspace.hpp"

namespace carnot {

/// Finite-dimensional Lie algebra over Q given by structure constants in a
/// fixed basis e_0 ... e_{n-1}. Only brackets [e_i, e_j] with i < j are
/// stored; [e_j, e_i] = -[e_i, e_j] and [e_i, e_i] = 0 are implied.
class LieAlgebra {
 public:
  /// Keys are 0-based basis index pairs. A key (j, i) with j > i is stored
  /// as (i, j) with the value negated; zero values are dropped.
  using Table = std::map<std::pair<std::size_t, std::size_t>, Vector>;

  LieAlgebra() = default;

  /// No Jacobi check. Throws DimensionMismatch on malformed tables and
  /// std::invalid_argument on [e_i, e_i] != 0 or on a pair given twice.
  static LieAlgebra raw(std::size_t dim, const Table& table, std::vector<std::string> labels = {});

  /// Like raw(), then throws NotALieAlgebra if the Jacobi identity fails.
  static LieAlgebra validated(std::size_t dim, const Table& table,
                              std::vector<std::string> labels = {});

  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Table& table() const { return table_; }
  bool is_validated() const { return validated_; }

  /// [e_i, e_j] in coordinates.
  const Vector& basis_bracket(std::size_t i, std::size_t j) const;

  /// Same table and dimension. Labels are not compared.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  Table table_;
  bool validated_ = false;
  // dense_[i * dim + j] = [e_i, e_j], shared between copies
  std::shared_ptr<const std::vector<Vector>> dense_;
};

/// Linear endomorphism of the underlying vector space, acting on column
/// vectors: u(v) = matrix * v.
struct LinearEndo {
  Matrix matrix;

  std::size_t dim() const { return matrix.rows(); }
  Vector operator()(const Vector& v) const { return matrix * v; }

  /// Row-major flattening into Q^(n^2), the coordinates used for spaces of
  /// endomorphisms.
  Vector flatten() const { return matrix.flatten(); }
  static LinearEndo from_flat(const Vector& v, std::size_t n) {
    return {Matrix::from_flat(v, n, n)};
  }

  friend bool operator==(const LinearEndo&, const LinearEndo&) = default;
};

struct JacobiViolation {
  std::size_t i, j, k;  ///< 0-based, i < j < k
  Vector residual;
};

struct SeriesReport {
  std::vector<Subspace> terms;  ///< gamma_1 = g, gamma_2 = [g, g], ...; ends with the zero space when nilpotent
  bool nilpotent = false;
  std::size_t step = 0;  ///< number of nonzero terms, meaningful when nilpotent

  std::vector<std::size_t> dims() const;
};

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y);

/// All triples i < j < k with a nonzero Jacobi sum, with exact residuals.
std::vector<JacobiViolation> jacobi_defect(const LieAlgebra& L);

/// Throws NotALieAlgebra unless L was validated or passes the Jacobi check.
void require_lie(const LieAlgebra& L);

/// span{[x, y] : x in a, y in b}
Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b);

SeriesReport lower_central_series(const LieAlgebra& L);
Subspace center(const LieAlgebra& L);
LinearEndo ad(const LieAlgebra& L, const Vector& x);
bool is_derivation(const LieAlgebra& L, const LinearEndo& u);

/// Solution space of the Leibniz identity in the n^2 flattened entries of u.
Subspace derivation_algebra(const LieAlgebra& L);

/// Streams the Leibniz equations u([e_i,e_j]) - [u e_i, e_j] - [e_i, u e_j] = 0
/// into `reducer`, whose first n^2 columns are the flattened entries of u.
/// Extra trailing columns are left zero.
void add_leibniz_equations(const LieAlgebra& L, RowReducer& reducer);

/// g + Q e_{n+1} with [e_{n+1}, x] = d(x). Throws NotADerivation.
LieAlgebra semidirect_with_derivation(const LieAlgebra& L, const LinearEndo& d);

/// Rewrites L in the basis f_a = sum_r p(r, a) e_r given by the columns of
/// p. Throws SingularMatrix.
LieAlgebra change_of_basis(const LieAlgebra& L, const Matrix& p);

/// Conjugates an endomorphism into the basis given by the columns of p:
/// returns p^-1 u p.
LinearEndo transport(const LinearEndo& u, const Matrix& p, const Matrix& p_inverse);

}  // namespace carnot
