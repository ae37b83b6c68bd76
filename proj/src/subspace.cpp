#include "carnot/subspace.hpp"

#include "carnot/error.hpp"

namespace carnot {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch(std::string(op) + ": ambient dimensions differ (" +
                            std::to_string(a.ambient_dim()) + " vs " +
                            std::to_string(b.ambient_dim()) + ")");
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace::Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& generators) {
  RowReducer red(ambient_dim);
  for (const auto& g : generators) red.add(g);
  return Subspace(ambient_dim, red.basis(), red.pivots());
}

Subspace Subspace::row_space(const Matrix& m) { return span(m.cols(), m.row_vectors()); }

Subspace Subspace::full(std::size_t n) { return coordinate(n, 0, n); }

Subspace Subspace::coordinate(std::size_t n, std::size_t first, std::size_t last) {
  if (first > last || last > n) throw DimensionMismatch("Subspace::coordinate: bad index range");
  std::vector<Vector> gens;
  for (std::size_t i = first; i < last; ++i) gens.push_back(unit_vector(n, i));
  return span(n, gens);
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("Subspace::coordinates: length mismatch");
  Vector coeffs(dim());
  Vector residual = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    coeffs[r] = residual[pivots_[r]];
    if (sgn(coeffs[r]) == 0) continue;
    auto row = basis_.row(r);
    for (std::size_t c = pivots_[r]; c < ambient_; ++c)
      if (sgn(row[c]) != 0) residual[c] -= coeffs[r] * row[c];
  }
  if (!carnot::is_zero(residual)) return std::nullopt;
  return coeffs;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other, "Subspace::contains");
  for (std::size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_vector(r))) return false;
  return true;
}

Vector Subspace::combine(const Vector& coefficients) const {
  if (coefficients.size() != dim()) throw DimensionMismatch("Subspace::combine: wrong coefficient count");
  Vector v(ambient_);
  for (std::size_t r = 0; r < dim(); ++r) {
    if (sgn(coefficients[r]) == 0) continue;
    auto row = basis_.row(r);
    for (std::size_t c = 0; c < ambient_; ++c)
      if (sgn(row[c]) != 0) v[c] += coefficients[r] * row[c];
  }
  return v;
}

Subspace Subspace::annihilator() const { return nullspace(basis_); }

Subspace nullspace(const Matrix& m) {
  RowReducer red(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) red.add(m.row_vector(r));
  return Subspace::span(m.cols(), red.kernel_vectors());
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_sum");
  auto gens = a.basis_vectors();
  for (auto& v : b.basis_vectors()) gens.push_back(std::move(v));
  return Subspace::span(a.ambient_dim(), gens);
}

// Zassenhaus: reduce the rows (a | a) and (b | 0); rows whose left half
// vanishes carry a basis of the intersection in their right half.
Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "subspace_intersect");
  const std::size_t n = a.ambient_dim();
  RowReducer red(2 * n);
  for (const auto& v : a.basis_vectors()) {
    Vector row(2 * n);
    for (std::size_t i = 0; i < n; ++i) row[i] = row[n + i] = v[i];
    red.add(std::move(row));
  }
  for (const auto& v : b.basis_vectors()) {
    Vector row(2 * n);
    for (std::size_t i = 0; i < n; ++i) row[i] = v[i];
    red.add(std::move(row));
  }
  Matrix m = red.basis();
  std::vector<Vector> gens;
  auto piv = red.pivots();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (piv[r] < n) continue;
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = m(r, n + i);
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

bool membership(const Vector& v, const Subspace& s) {
  if (v.size() != s.ambient_dim()) throw DimensionMismatch("membership: length mismatch");
  return s.contains(v);
}

std::optional<AffineSolution> solve_affine(const RowReducer& augmented) {
  if (augmented.cols() == 0) throw DimensionMismatch("solve_affine: empty augmented system");
  const std::size_t n = augmented.cols() - 1;
  Matrix m = augmented.basis();
  auto piv = augmented.pivots();
  Vector particular(n);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (piv[r] == n) return std::nullopt;
    particular[piv[r]] = m(r, n);
    Vector lhs(n);
    for (std::size_t c = 0; c < n; ++c) lhs[c] = m(r, c);
    rows.push_back(std::move(lhs));
  }
  return AffineSolution{std::move(particular), nullspace(Matrix::from_rows(rows, n))};
}

std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve_affine: right-hand side length mismatch");
  RowReducer red(a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Vector row = a.row_vector(r);
    row.push_back(b[r]);
    red.add(std::move(row));
  }
  return solve_affine(red);
}

std::vector<Vector> quotient_basis(const Subspace& sub, const Subspace& whole) {
  require_same_ambient(sub, whole, "quotient_basis");
  if (!whole.contains(sub)) throw DimensionMismatch("quotient_basis: sub is not contained in whole");
  RowReducer red(whole.ambient_dim());
  for (const auto& v : sub.basis_vectors()) red.add(v);
  std::vector<Vector> out;
  for (const auto& v : whole.basis_vectors())
    if (red.add(v)) out.push_back(v);
  return out;
}

Subspace image(const Matrix& m, const Subspace& s) {
  std::vector<Vector> gens;
  for (const auto& v : s.basis_vectors()) gens.push_back(m * v);
  return Subspace::span(m.rows(), gens);
}

}  // namespace carnot
