#pragma once

#include <optional>
#include <vector>

#include "carnot/matrix.hpp"

namespace carnot {

/// A linear subspace of Q^n stored by its canonical RREF basis, so equality
/// of subspaces is entry-wise equality of bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& generators);
  static Subspace row_space(const Matrix& m);
  static Subspace full(std::size_t n);
  /// Span of the unit vectors e_first ... e_{last-1} (0-based, half open).
  static Subspace coordinate(std::size_t n, std::size_t first, std::size_t last);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coefficients of v in terms of the basis rows, or nothing if v is not in
  /// the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;

  /// Linear combination of basis rows.
  Vector combine(const Vector& coefficients) const;

  /// {w : w . v = 0 for all v in this subspace}
  Subspace annihilator() const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots);

  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {x : m x = 0}
Subspace nullspace(const Matrix& m);

/// Throws DimensionMismatch when the ambient dimensions differ.
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

bool membership(const Vector& v, const Subspace& s);

struct AffineSolution {
  Vector particular;
  Subspace homogeneous;
};

/// Full solution set of a x = b, or nothing when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b);

/// Same as solve_affine for a system already streamed into a reducer as
/// augmented rows [a_i | b_i].
std::optional<AffineSolution> solve_affine(const RowReducer& augmented);

/// Vectors of `whole` whose classes form a basis of whole / sub. Basis rows
/// of `whole` are tried in order, so the completion prefers low indices.
/// Throws DimensionMismatch unless sub is contained in whole.
std::vector<Vector> quotient_basis(const Subspace& sub, const Subspace& whole);

/// Image of s under the linear map m.
Subspace image(const Matrix& m, const Subspace& s);

}  // namespace carnot
