#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "carnot/algebra_file.hpp"

namespace carnot::testing {

Rational random_rational(Rng& rng, int magnitude) {
  std::uniform_int_distribution<int> num(-magnitude, magnitude);
  std::uniform_int_distribution<int> den(1, magnitude);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Rational random_nonzero_rational(Rng& rng, int magnitude) {
  Rational q;
  do q = random_rational(rng, magnitude);
  while (sgn(q) == 0);
  return q;
}

Vector random_vector(Rng& rng, std::size_t n, int magnitude) {
  Vector v(n);
  for (auto& x : v) x = random_rational(rng, magnitude);
  return v;
}

Matrix random_unimodular(Rng& rng, std::size_t n, int transvections) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix p(n, n);
  std::uniform_int_distribution<int> flip(0, 1);
  for (std::size_t i = 0; i < n; ++i) p(perm[i], i) = flip(rng) ? 1 : -1;
  if (n < 2) return p;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int t = 0; t < transvections; ++t) {
    std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    Rational c = coef(rng);
    // column a += c * column b
    for (std::size_t r = 0; r < n; ++r) p(r, a) += c * p(r, b);
  }
  return p;
}

Subspace random_subspace(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> count(0, n);
  std::uniform_int_distribution<int> entry(-2, 2);
  std::vector<Vector> gens(count(rng), Vector(n));
  for (auto& g : gens)
    for (auto& x : g) x = entry(rng);
  return Subspace::span(n, gens);
}

LieAlgebra random_table(Rng& rng, std::size_t n) {
  LieAlgebra::Table t;
  std::bernoulli_distribution present(0.3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (present(rng)) {
        Vector v(n);
        for (auto& x : v)
          if (present(rng)) x = random_rational(rng, 7);
        t[{i, j}] = v;
      }
  return LieAlgebra::raw(n, t);
}

LieAlgebra heisenberg3() {
  LieAlgebra::Table t;
  t[{0, 1}] = Vector{0, 0, 1};
  return LieAlgebra::validated(3, t);
}

Stratification declared_stratification(const catalog::Entry& e) {
  return verify_stratification(e.algebra, coordinate_layers(e.algebra.dim(), *e.declared_layers));
}

Subspace intersect_by_kernel(const Subspace& a, const Subspace& b) {
  const std::size_t n = a.ambient_dim();
  const std::size_t da = a.dim(), db = b.dim();
  Matrix m(n, da + db);
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t c = 0; c < n; ++c) m(c, r) = a.basis()(r, c);
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t c = 0; c < n; ++c) m(c, da + r) = -b.basis()(r, c);
  std::vector<Vector> gens;
  for (const auto& sol : nullspace(m).basis_vectors()) {
    Vector v(n);
    for (std::size_t r = 0; r < da; ++r) axpy(sol[r], a.basis_vector(r), v);
    gens.push_back(v);
  }
  return Subspace::span(n, gens);
}

Subspace layer_preserving_derivations_direct(const LieAlgebra& L, const Stratification& s) {
  const std::size_t n = L.dim();
  const std::size_t pairs = n * (n - 1) / 2;
  // Column (r, c) of the system is the Leibniz defect of the elementary map E_rc.
  Matrix leibniz(pairs * n, n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Matrix e(n, n);
      e(r, c) = 1;
      std::size_t row = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++row) {
          Vector ei = unit_vector(n, i), ej = unit_vector(n, j);
          Vector defect = e * bracket(L, ei, ej) - bracket(L, e * ei, ej) - bracket(L, ei, e * ej);
          for (std::size_t k = 0; k < n; ++k) leibniz(row * n + k, r * n + c) = defect[k];
        }
    }
  std::vector<Vector> rows = leibniz.row_vectors();
  // w^T u b = 0 for b in V_j and w annihilating V_j
  for (const auto& layer : s.layers())
    for (const auto& w : layer.annihilator().basis_vectors())
      for (const auto& b : layer.basis_vectors()) {
        Vector row(n * n);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) row[r * n + c] = w[r] * b[c];
        rows.push_back(row);
      }
  return nullspace(Matrix::from_rows(rows, n * n));
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::size_t abelian_prolongation_dim(std::size_t n, std::size_t k) { return n * binomial(n + k, k + 1); }

std::size_t contact_prolongation_dim(std::size_t m, std::size_t k) {
  const std::size_t weight = k + 2;
  const std::size_t vars = 2 * m;
  std::size_t total = 0;
  for (std::size_t zpow = 0; 2 * zpow <= weight; ++zpow) total += binomial(vars - 1 + weight - 2 * zpow, vars - 1);
  return total;
}

Subspace first_prolongation_when_g0_is_grading(const LieAlgebra& L, std::size_t d1) {
  const std::size_t n = L.dim();
  const std::size_t d2 = n - d1;
  const std::size_t unknowns = d1 + d1 * d2;
  auto c_var = [](std::size_t x) { return x; };
  auto b_var = [&](std::size_t r, std::size_t col) { return d1 + r * d2 + col; };
  std::vector<Vector> rows;

  // X, Y in V1: B([X, Y]) = c(X) Y - c(Y) X
  for (std::size_t x = 0; x < d1; ++x)
    for (std::size_t y = x + 1; y < d1; ++y) {
      Vector z = bracket(L, unit_vector(n, x), unit_vector(n, y));
      for (std::size_t r = 0; r < d1; ++r) {
        Vector row(unknowns);
        for (std::size_t col = 0; col < d2; ++col) row[b_var(r, col)] += z[d1 + col];
        if (r == y) row[c_var(x)] -= 1;
        if (r == x) row[c_var(y)] += 1;
        rows.push_back(row);
      }
    }
  // X in V1, Y in V2: 0 = 2 c(X) Y + [X, B Y]
  for (std::size_t x = 0; x < d1; ++x)
    for (std::size_t y = 0; y < d2; ++y)
      for (std::size_t k = 0; k < d2; ++k) {
        Vector row(unknowns);
        if (k == y) row[c_var(x)] += 2;
        for (std::size_t r = 0; r < d1; ++r) {
          Vector br = bracket(L, unit_vector(n, x), unit_vector(n, r));
          row[b_var(r, y)] += br[d1 + k];
        }
        rows.push_back(row);
      }
  return nullspace(Matrix::from_rows(rows, unknowns));
}

}  // namespace carnot::testing
