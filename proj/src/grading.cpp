#include "carnot/grading.hpp"

#include <stdexcept>

namespace carnot {

const char* to_string(StratificationViolation v) {
  switch (v) {
    case StratificationViolation::AmbientMismatch: return "ambient-mismatch";
    case StratificationViolation::NotDirectSum: return "not-direct-sum";
    case StratificationViolation::GenerationFails: return "generation-fails";
    case StratificationViolation::EmptyTopLayer: return "empty-top-layer";
    case StratificationViolation::DegenerateFirstLayer: return "degenerate-first-layer";
  }
  return "unknown";
}

std::vector<std::size_t> Stratification::layer_dims() const {
  std::vector<std::size_t> out;
  for (const auto& v : layers_) out.push_back(v.dim());
  return out;
}

Matrix Stratification::adapted_basis() const {
  std::vector<Vector> cols;
  for (const auto& v : layers_)
    for (auto& b : v.basis_vectors()) cols.push_back(std::move(b));
  return Matrix::from_columns(cols, ambient_dim());
}

std::vector<std::size_t> Stratification::adapted_weights() const {
  std::vector<std::size_t> w;
  for (std::size_t j = 0; j < layers_.size(); ++j) w.insert(w.end(), layers_[j].dim(), j + 1);
  return w;
}

bool Stratification::is_coordinate() const { return adapted_basis() == Matrix::identity(ambient_dim()); }

Stratification verify_stratification(const LieAlgebra& L, std::vector<Subspace> layers) {
  using V = StratificationViolation;
  require_lie(L);
  const std::size_t n = L.dim();
  for (std::size_t j = 0; j < layers.size(); ++j)
    if (layers[j].ambient_dim() != n)
      throw StratificationError(V::AmbientMismatch, j + 1,
                                "layer " + std::to_string(j + 1) + " is not a subspace of the algebra");

  std::size_t total = 0;
  Subspace sum(n);
  for (const auto& v : layers) {
    total += v.dim();
    sum = subspace_sum(sum, v);
  }
  if (layers.empty() || total != n || !sum.is_full())
    throw StratificationError(V::NotDirectSum, 0,
                              "layers do not form a direct sum decomposition (dims sum to " +
                                  std::to_string(total) + ", span has dim " + std::to_string(sum.dim()) +
                                  ", algebra has dim " + std::to_string(n) + ")");

  for (std::size_t j = 0; j < layers.size(); ++j) {
    Subspace generated = bracket_span(L, layers[j], layers.front());
    const Subspace expected = j + 1 < layers.size() ? layers[j + 1] : Subspace(n);
    if (generated != expected)
      throw StratificationError(V::GenerationFails, j + 1,
                                "[V_" + std::to_string(j + 1) + ", V_1] has dim " +
                                    std::to_string(generated.dim()) + " but must equal V_" +
                                    std::to_string(j + 2) + " of dim " + std::to_string(expected.dim()));
  }

  if (layers.back().is_zero())
    throw StratificationError(V::EmptyTopLayer, layers.size(), "top layer is zero");
  if (layers.front().dim() < 2)
    throw StratificationError(V::DegenerateFirstLayer, 1, "first layer must have dimension at least two");
  return Stratification(std::move(layers));
}

std::vector<Subspace> coordinate_layers(std::size_t n,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& ranges) {
  std::vector<Subspace> out;
  for (auto [first, last] : ranges) {
    if (first < 1 || last < first || last > n)
      throw DimensionMismatch("coordinate_layers: range " + std::to_string(first) + ".." +
                              std::to_string(last) + " outside 1.." + std::to_string(n));
    out.push_back(Subspace::coordinate(n, first - 1, last));
  }
  return out;
}

Stratification transport(const Stratification& s, const LieAlgebra& rewritten, const Matrix& p) {
  Matrix p_inv = inverse(p);
  std::vector<Subspace> layers;
  for (const auto& v : s.layers()) layers.push_back(image(p_inv, v));
  return verify_stratification(rewritten, std::move(layers));
}

namespace {

LinearEndo block_scalar(const Stratification& s, const std::vector<Rational>& per_layer) {
  Matrix p = s.adapted_basis();
  Vector diag;
  for (std::size_t j = 0; j < s.step(); ++j) diag.insert(diag.end(), s.layers()[j].dim(), per_layer[j]);
  if (s.is_coordinate()) return {Matrix::diagonal(diag)};
  return {p * Matrix::diagonal(diag) * inverse(p)};
}

}  // namespace

LinearEndo grading_derivation(const Stratification& s) {
  std::vector<Rational> w;
  for (std::size_t j = 1; j <= s.step(); ++j) w.emplace_back(static_cast<long>(j));
  return block_scalar(s, w);
}

LinearEndo dilation(const Stratification& s, const Rational& lambda) {
  if (sgn(lambda) == 0) throw std::invalid_argument("dilation: lambda must be nonzero");
  std::vector<Rational> w;
  Rational power = 1;
  for (std::size_t j = 1; j <= s.step(); ++j) {
    power *= lambda;
    w.push_back(power);
  }
  return block_scalar(s, w);
}

std::size_t homogeneous_dimension(const Stratification& s) {
  std::size_t q = 0;
  for (std::size_t j = 0; j < s.step(); ++j) q += (j + 1) * s.layers()[j].dim();
  return q;
}

bool Filtration::respects_brackets(const LieAlgebra& L) const {
  const std::size_t s = terms.size();
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      const Subspace& target = terms[std::min(i + j + 1, s - 1)];
      if (!target.contains(bracket_span(L, terms[i], terms[j]))) return false;
    }
  return true;
}

Filtration filtration_from_horizontal(const LieAlgebra& L, const Subspace& horizontal) {
  require_lie(L);
  if (horizontal.ambient_dim() != L.dim())
    throw DimensionMismatch("filtration_from_horizontal: subspace lives in the wrong space");
  Filtration f;
  f.terms.push_back(horizontal);
  while (!f.terms.back().is_full()) {
    const Subspace& last = f.terms.back();
    Subspace next = subspace_sum(last, bracket_span(L, horizontal, last));
    if (next.dim() == last.dim())
      throw NotBracketGenerating("horizontal subspace generates only a subspace of dimension " +
                                 std::to_string(last.dim()) + " of " + std::to_string(L.dim()));
    f.terms.push_back(std::move(next));
  }
  return f;
}

Nilpotentisation nilpotentisation(const LieAlgebra& L, const Subspace& horizontal) {
  Filtration f = filtration_from_horizontal(L, horizontal);
  const std::size_t n = L.dim();

  std::vector<Vector> reps;
  std::vector<std::size_t> weight;
  Subspace previous(n);
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    for (auto& v : quotient_basis(previous, f.terms[i])) {
      reps.push_back(std::move(v));
      weight.push_back(i + 1);
    }
    previous = f.terms[i];
  }
  Matrix basis = Matrix::from_columns(reps, n);
  Matrix basis_inv = inverse(basis);

  // [X + L_{i-1}, Y + L_{j-1}] = [X, Y] + L_{i+j-1}: keep only the
  // coordinates of weight exactly i + j.
  LieAlgebra::Table table;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector z = basis_inv * bracket(L, reps[a], reps[b]);
      for (std::size_t c = 0; c < n; ++c)
        if (weight[c] != weight[a] + weight[b]) z[c] = 0;
      if (!is_zero(z)) table[{a, b}] = std::move(z);
    }
  LieAlgebra gr = LieAlgebra::validated(n, table);

  std::vector<Subspace> layers;
  std::size_t start = 0;
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    std::size_t width = f.terms[i].dim() - (i ? f.terms[i - 1].dim() : 0);
    layers.push_back(Subspace::coordinate(n, start, start + width));
    start += width;
  }
  Stratification strat = verify_stratification(gr, std::move(layers));
  return {std::move(gr), std::move(basis), std::move(strat)};
}

StratifiabilityVerdict is_stratifiable(const LieAlgebra& L) {
  SeriesReport series = lower_central_series(L);
  if (!series.nilpotent) throw NotNilpotent("is_stratifiable: algebra is not nilpotent");
  const std::size_t n = L.dim();
  const std::size_t unknowns = n * n;

  // Leibniz rows, then (delta - id)(e_i) in [g, g]: w . delta e_i = w_i for
  // every w annihilating [g, g].
  RowReducer system(unknowns + 1);
  add_leibniz_equations(L, system);
  Subspace derived = series.terms.size() > 1 ? series.terms[1] : Subspace(n);
  Subspace annihilator = derived.annihilator();
  for (const auto& w : annihilator.basis_vectors())
    for (std::size_t i = 0; i < n; ++i) {
      Vector row(unknowns + 1);
      for (std::size_t r = 0; r < n; ++r) row[r * n + i] = w[r];
      row[unknowns] = w[i];
      system.add(std::move(row));
    }

  auto solution = solve_affine(system);
  StratifiabilityVerdict verdict;
  if (!solution) return verdict;
  verdict.stratifiable = true;
  LinearEndo delta = LinearEndo::from_flat(solution->particular, n);
  verdict.witness = delta;

  // The eigenvalues of delta are forced to be 1..s, one per quotient of the
  // lower central series.
  std::vector<Subspace> layers;
  for (std::size_t j = 1; j <= series.step; ++j) {
    Matrix shifted = delta.matrix - Rational(static_cast<long>(j)) * Matrix::identity(n);
    layers.push_back(nullspace(power(shifted, static_cast<unsigned>(n))));
  }
  try {
    verdict.derived_stratification = verify_stratification(L, std::move(layers));
  } catch (const StratificationError& e) {
    if (e.violation() != StratificationViolation::DegenerateFirstLayer) throw;
  }
  return verdict;
}

}  // namespace carnot
