#include "carnot/lie_algebra.hpp"

#include <stdexcept>

#include "carnot/error.hpp"

namespace carnot {

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i + 1));
  return out;
}

const Vector& empty_vector() {
  static const Vector v;
  return v;
}

}  // namespace

LieAlgebra LieAlgebra::raw(std::size_t dim, const Table& table, std::vector<std::string> labels) {
  if (dim == 0) throw DimensionMismatch("LieAlgebra: dimension must be positive");
  if (labels.empty()) labels = default_labels(dim);
  if (labels.size() != dim) throw DimensionMismatch("LieAlgebra: label count differs from dimension");

  LieAlgebra L;
  L.dim_ = dim;
  L.labels_ = std::move(labels);
  for (const auto& [key, value] : table) {
    auto [i, j] = key;
    if (i >= dim || j >= dim) throw DimensionMismatch("LieAlgebra: basis index out of range");
    if (value.size() != dim) throw DimensionMismatch("LieAlgebra: bracket value has wrong length");
    if (i == j) {
      if (!is_zero(value))
        throw std::invalid_argument("LieAlgebra: [e_i, e_i] must vanish");
      continue;
    }
    std::pair<std::size_t, std::size_t> k = i < j ? key : std::pair{j, i};
    Vector v = i < j ? value : -value;
    if (i > j && table.count({j, i}))
      throw std::invalid_argument("LieAlgebra: pair (" + std::to_string(k.first + 1) + ", " +
                                  std::to_string(k.second + 1) + ") given twice");
    if (!is_zero(v)) L.table_.emplace(k, std::move(v));
  }

  auto dense = std::make_shared<std::vector<Vector>>(dim * dim);
  for (const auto& [key, value] : L.table_) {
    (*dense)[key.first * dim + key.second] = value;
    (*dense)[key.second * dim + key.first] = -value;
  }
  L.dense_ = std::move(dense);
  return L;
}

LieAlgebra LieAlgebra::validated(std::size_t dim, const Table& table, std::vector<std::string> labels) {
  LieAlgebra L = raw(dim, table, std::move(labels));
  auto defects = jacobi_defect(L);
  if (!defects.empty()) {
    const auto& d = defects.front();
    throw NotALieAlgebra("Jacobi identity fails on (e" + std::to_string(d.i + 1) + ", e" +
                         std::to_string(d.j + 1) + ", e" + std::to_string(d.k + 1) + ") and " +
                         std::to_string(defects.size() - 1) + " other triple(s)");
  }
  L.validated_ = true;
  return L;
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return validated(dim, {}); }

const Vector& LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  const Vector& v = (*dense_)[i * dim_ + j];
  return v.empty() ? empty_vector() : v;
}

std::vector<std::size_t> SeriesReport::dims() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.dim());
  return out;
}

Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y) {
  const std::size_t n = L.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: vector length differs from dim");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || sgn(y[j]) == 0) continue;
      const Vector& b = L.basis_bracket(i, j);
      if (b.empty()) continue;
      axpy(x[i] * y[j], b, out);
    }
  }
  return out;
}

namespace {

// [[e_i, e_j], e_k] accumulated into out
void add_double_bracket(const LieAlgebra& L, std::size_t i, std::size_t j, std::size_t k, Vector& out) {
  const Vector& ij = L.basis_bracket(i, j);
  if (ij.empty()) return;
  for (std::size_t m = 0; m < L.dim(); ++m) {
    if (sgn(ij[m]) == 0 || m == k) continue;
    const Vector& mk = L.basis_bracket(m, k);
    if (!mk.empty()) axpy(ij[m], mk, out);
  }
}

}  // namespace

std::vector<JacobiViolation> jacobi_defect(const LieAlgebra& L) {
  std::vector<JacobiViolation> out;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r(n);
        add_double_bracket(L, i, j, k, r);
        add_double_bracket(L, j, k, i, r);
        add_double_bracket(L, k, i, j, r);
        if (!is_zero(r)) out.push_back({i, j, k, std::move(r)});
      }
  return out;
}

void require_lie(const LieAlgebra& L) {
  if (L.is_validated()) return;
  if (!jacobi_defect(L).empty()) throw NotALieAlgebra("structure constants violate the Jacobi identity");
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  std::vector<Vector> gens;
  for (const auto& x : a.basis_vectors())
    for (const auto& y : b.basis_vectors()) {
      Vector z = bracket(L, x, y);
      if (!is_zero(z)) gens.push_back(std::move(z));
    }
  return Subspace::span(L.dim(), gens);
}

SeriesReport lower_central_series(const LieAlgebra& L) {
  require_lie(L);
  SeriesReport rep;
  Subspace whole = Subspace::full(L.dim());
  rep.terms.push_back(whole);
  while (true) {
    Subspace next = bracket_span(L, whole, rep.terms.back());
    if (next.dim() == rep.terms.back().dim()) break;  // stabilized without reaching zero
    rep.terms.push_back(next);
    if (next.is_zero()) {
      rep.nilpotent = true;
      rep.step = rep.terms.size() - 1;
      break;
    }
  }
  return rep;
}

Subspace center(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  // x is central iff [e_i, x] = 0 for all i: stack the ad(e_i) matrices.
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& b = L.basis_bracket(i, j);
      if (b.empty()) continue;
      for (std::size_t k = 0; k < n; ++k) stacked(i * n + k, j) = b[k];
    }
  return nullspace(stacked);
}

LinearEndo ad(const LieAlgebra& L, const Vector& x) {
  const std::size_t n = L.dim();
  if (x.size() != n) throw DimensionMismatch("ad: vector length differs from dim");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vector col = bracket(L, x, unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return {m};
}

bool is_derivation(const LieAlgebra& L, const LinearEndo& u) {
  const std::size_t n = L.dim();
  if (u.matrix.rows() != n || u.matrix.cols() != n) return false;
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(u.matrix.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& ij = L.basis_bracket(i, j);
      Vector lhs = ij.empty() ? Vector(n) : u(ij);
      Vector rhs = bracket(L, images[i], unit_vector(n, j)) + bracket(L, unit_vector(n, i), images[j]);
      if (lhs != rhs) return false;
    }
  return true;
}

void add_leibniz_equations(const LieAlgebra& L, RowReducer& reducer) {
  const std::size_t n = L.dim();
  const std::size_t cols = reducer.cols();
  if (cols < n * n) throw DimensionMismatch("add_leibniz_equations: reducer too narrow");
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& ij = L.basis_bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector row(cols);
        // u([e_i, e_j])_k = sum_r u(k, r) c_ij^r
        if (!ij.empty())
          for (std::size_t r = 0; r < n; ++r)
            if (sgn(ij[r]) != 0) row[var(k, r)] += ij[r];
        // [u e_i, e_j]_k = sum_r u(r, i) c_rj^k
        for (std::size_t r = 0; r < n; ++r) {
          const Vector& rj = L.basis_bracket(r, j);
          if (!rj.empty() && sgn(rj[k]) != 0) row[var(r, i)] -= rj[k];
          const Vector& ir = L.basis_bracket(i, r);
          if (!ir.empty() && sgn(ir[k]) != 0) row[var(r, j)] -= ir[k];
        }
        if (!is_zero(row)) reducer.add(std::move(row));
      }
    }
}

Subspace derivation_algebra(const LieAlgebra& L) {
  require_lie(L);
  const std::size_t n = L.dim();
  RowReducer red(n * n);
  add_leibniz_equations(L, red);
  return Subspace::span(n * n, red.kernel_vectors());
}

LieAlgebra semidirect_with_derivation(const LieAlgebra& L, const LinearEndo& d) {
  if (!is_derivation(L, d)) throw NotADerivation("semidirect_with_derivation: map is not a derivation");
  const std::size_t n = L.dim();
  LieAlgebra::Table table;
  for (const auto& [key, value] : L.table()) {
    Vector v = value;
    v.push_back(0);
    table[key] = std::move(v);
  }
  for (std::size_t i = 0; i < n; ++i) {
    Vector di = d.matrix.column(i);
    if (is_zero(di)) continue;
    di.push_back(0);
    table[{i, n}] = -di;  // [e_i, e_{n+1}] = -d(e_i)
  }
  auto labels = L.labels();
  labels.push_back("e" + std::to_string(n + 1));
  return LieAlgebra::validated(n + 1, table, labels);
}

LieAlgebra change_of_basis(const LieAlgebra& L, const Matrix& p) {
  const std::size_t n = L.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionMismatch("change_of_basis: matrix shape differs from dim");
  Matrix p_inv = inverse(p);
  std::vector<Vector> f;
  for (std::size_t a = 0; a < n; ++a) f.push_back(p.column(a));
  LieAlgebra::Table table;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector v = p_inv * bracket(L, f[a], f[b]);
      if (!is_zero(v)) table[{a, b}] = std::move(v);
    }
  return L.is_validated() ? LieAlgebra::validated(n, table) : LieAlgebra::raw(n, table);
}

LinearEndo transport(const LinearEndo& u, const Matrix& p, const Matrix& p_inverse) {
  return {p_inverse * u.matrix * p};
}

}  // namespace carnot
