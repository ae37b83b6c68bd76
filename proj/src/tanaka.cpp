#include "carnot/tanaka.hpp"

namespace carnot {

const char* to_string(Finiteness f) { return f == Finiteness::Finite ? "finite" : "unknown"; }

Prolongation::Prolongation(const LieAlgebra& L, const Stratification& s)
    : basis_(s.adapted_basis()), basis_inverse_(inverse(basis_)) {
  graded_ = s.is_coordinate() ? L : change_of_basis(L, basis_);
  std::size_t offset = 0;
  for (std::size_t d : s.layer_dims()) {
    layer_dims_.push_back(d);
    layer_offsets_.push_back(offset);
    offset += d;
  }
  extend();
}

bool Prolongation::vanished() const {
  for (const auto& c : components_)
    if (c.is_zero()) return true;
  return false;
}

std::size_t Prolongation::dim(std::size_t k) const {
  if (k < components_.size()) return components_[k].dim();
  if (vanished()) return 0;
  throw NotComputed("prolongation component g_" + std::to_string(k) + " has not been computed");
}

const Subspace& Prolongation::component(std::size_t k) const {
  if (k >= components_.size())
    throw NotComputed("prolongation component g_" + std::to_string(k) + " has not been computed");
  return components_[k];
}

const GradedHomSpace& Prolongation::hom_space(std::size_t k) const {
  if (k >= homs_.size())
    throw NotComputed("hom space of degree " + std::to_string(k) + " has not been built");
  return homs_[k];
}

std::size_t Prolongation::target_dim(int degree) const {
  if (degree < 0) {
    auto l = static_cast<std::size_t>(-degree);
    return l <= step() ? layer_dim(l) : 0;
  }
  return dim(static_cast<std::size_t>(degree));
}

// [f_a, f_b] for f_a in V_l1, f_b in V_l2, in local coordinates of V_{l1+l2}.
Vector Prolongation::layer_bracket(std::size_t l1, std::size_t a, std::size_t l2, std::size_t b) const {
  const std::size_t l = l1 + l2;
  if (l > step()) return {};
  const Vector& full = graded_.basis_bracket(layer_offsets_[l1 - 1] + a, layer_offsets_[l2 - 1] + b);
  Vector out(layer_dim(l));
  if (full.empty()) return out;
  std::copy_n(full.begin() + static_cast<long>(layer_offsets_[l - 1]), out.size(), out.begin());
  return out;
}

GradedHomSpace Prolongation::make_hom_space(std::size_t k) const {
  GradedHomSpace hom;
  hom.degree = k;
  for (std::size_t l = 1; l <= step(); ++l) {
    HomBlock b;
    b.layer = l;
    b.target_degree = static_cast<int>(k) - static_cast<int>(l);
    b.rows = target_dim(b.target_degree);
    b.cols = layer_dim(l);
    b.offset = hom.size;
    hom.size += b.rows * b.cols;
    hom.blocks.push_back(b);
  }
  return hom;
}

// Leibniz rule u([X, Y]) = [u(X), Y] + [X, u(Y)] on homogeneous basis pairs.
Subspace Prolongation::solve_degree(const GradedHomSpace& hom) const {
  const int k = static_cast<int>(hom.degree);
  RowReducer system(hom.size);

  // Image of the basis vector `a` of g_{deg} (deg < 0: of V_{-deg}) under
  // bracketing with the basis vector `y` of V_l, placed on the right.
  auto bracket_with_layer = [&](int deg, std::size_t a, std::size_t l, std::size_t y) -> Vector {
    if (deg < 0) return layer_bracket(static_cast<std::size_t>(-deg), a, l, y);
    const Subspace& comp = components_[static_cast<std::size_t>(deg)];
    const HomBlock& blk = homs_[static_cast<std::size_t>(deg)].block(l);
    Vector out(blk.rows);
    auto row = comp.basis().row(a);
    for (std::size_t t = 0; t < blk.rows; ++t) out[t] = row[blk.index(t, y)];
    return out;
  };

  for (std::size_t i = 1; i <= step(); ++i)
    for (std::size_t j = i; j <= step(); ++j) {
      const int r = k - static_cast<int>(i + j);
      const std::size_t out_dim = target_dim(r);
      if (out_dim == 0) continue;
      const HomBlock& bi = hom.block(i);
      const HomBlock& bj = hom.block(j);
      for (std::size_t x = 0; x < layer_dim(i); ++x)
        for (std::size_t y = (i == j ? x + 1 : 0); y < layer_dim(j); ++y) {
          std::vector<Vector> rows(out_dim, Vector(hom.size));

          // u([X, Y])
          if (i + j <= step()) {
            Vector z = layer_bracket(i, x, j, y);
            const HomBlock& b = hom.block(i + j);
            for (std::size_t c = 0; c < z.size(); ++c) {
              if (sgn(z[c]) == 0) continue;
              for (std::size_t t = 0; t < out_dim; ++t) rows[t][b.index(t, c)] += z[c];
            }
          }
          // - [u(X), Y]
          for (std::size_t a = 0; a < bi.rows; ++a) {
            Vector img = bracket_with_layer(bi.target_degree, a, j, y);
            for (std::size_t t = 0; t < img.size(); ++t)
              if (sgn(img[t]) != 0) rows[t][bi.index(a, x)] -= img[t];
          }
          // - [X, u(Y)] = + [u(Y), X]
          for (std::size_t a = 0; a < bj.rows; ++a) {
            Vector img = bracket_with_layer(bj.target_degree, a, i, x);
            for (std::size_t t = 0; t < img.size(); ++t)
              if (sgn(img[t]) != 0) rows[t][bj.index(a, y)] += img[t];
          }

          for (auto& row : rows)
            if (!is_zero(row)) system.add(std::move(row));
        }
    }
  return Subspace::span(hom.size, system.kernel_vectors());
}

const Subspace& Prolongation::extend() {
  const std::size_t k = components_.size();
  homs_.push_back(make_hom_space(k));
  components_.push_back(solve_degree(homs_.back()));
  return components_.back();
}

GradedElement Prolongation::basis_element(std::size_t k, std::size_t t) const {
  GradedElement e{static_cast<int>(k), Vector(dim(k))};
  e.coords.at(t) = 1;
  return e;
}

GradedElement Prolongation::zero(int degree) const { return {degree, Vector(target_dim(degree))}; }

Vector Prolongation::as_hom(const GradedElement& u) const {
  if (u.degree < 0) throw std::invalid_argument("as_hom: element of negative degree");
  return component(static_cast<std::size_t>(u.degree)).combine(u.coords);
}

std::optional<GradedElement> Prolongation::from_hom(std::size_t k, const Vector& hom) const {
  auto c = component(k).coordinates(hom);
  if (!c) return std::nullopt;
  return GradedElement{static_cast<int>(k), std::move(*c)};
}

namespace {

GradedElement negate(GradedElement e) {
  for (auto& c : e.coords) c = -c;
  return e;
}

}  // namespace

GradedElement Prolongation::bracket(const GradedElement& a, const GradedElement& b) const {
  const int degree = a.degree + b.degree;

  if (a.degree < 0 && b.degree < 0) {
    GradedElement out = zero(degree);
    if (out.coords.empty()) return out;
    const auto l1 = static_cast<std::size_t>(-a.degree);
    const auto l2 = static_cast<std::size_t>(-b.degree);
    for (std::size_t x = 0; x < a.coords.size(); ++x) {
      if (sgn(a.coords[x]) == 0) continue;
      for (std::size_t y = 0; y < b.coords.size(); ++y) {
        if (sgn(b.coords[y]) == 0) continue;
        axpy(a.coords[x] * b.coords[y], layer_bracket(l1, x, l2, y), out.coords);
      }
    }
    return out;
  }

  if (a.degree >= 0 && b.degree < 0) {
    GradedElement out = zero(degree);
    const auto k = static_cast<std::size_t>(a.degree);
    if (out.coords.empty() || dim(k) == 0) return out;
    const HomBlock& blk = hom_space(k).block(static_cast<std::size_t>(-b.degree));
    Vector hom = as_hom(a);
    for (std::size_t t = 0; t < blk.rows; ++t)
      for (std::size_t y = 0; y < blk.cols; ++y)
        if (sgn(b.coords[y]) != 0) out.coords[t] += hom[blk.index(t, y)] * b.coords[y];
    return out;
  }

  if (a.degree < 0) return negate(bracket(b, a));

  GradedElement out = zero(degree);
  if (out.coords.empty()) return out;
  const auto k = static_cast<std::size_t>(a.degree);
  const auto m = static_cast<std::size_t>(b.degree);
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (sgn(a.coords[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coords.size(); ++j)
      if (sgn(b.coords[j]) != 0) axpy(a.coords[i] * b.coords[j], basis_pair_bracket(k, i, m, j), out.coords);
  }
  return out;
}

// [u, v](X) = [u, [v, X]] - [v, [u, X]] on basis elements, memoized.
Vector Prolongation::basis_pair_bracket(std::size_t k, std::size_t a, std::size_t m, std::size_t b) const {
  if (k > m || (k == m && a > b)) return -basis_pair_bracket(m, b, k, a);
  const std::array<std::size_t, 4> key{k, a, m, b};
  {
    std::lock_guard lock(cache_.mutex);
    if (auto it = cache_.entries.find(key); it != cache_.entries.end()) return it->second;
  }
  const std::size_t degree = k + m;
  Vector result(dim(degree));
  if (!(k == m && a == b) && !result.empty()) {
    const GradedElement u = basis_element(k, a), v = basis_element(m, b);
    const GradedHomSpace& hom = hom_space(degree);
    Vector tuple(hom.size);
    for (std::size_t l = 1; l <= step(); ++l) {
      const HomBlock& blk = hom.block(l);
      for (std::size_t y = 0; y < blk.cols; ++y) {
        GradedElement x{-static_cast<int>(l), unit_vector(layer_dim(l), y)};
        GradedElement lhs = bracket(u, bracket(v, x));
        GradedElement rhs = bracket(v, bracket(u, x));
        for (std::size_t t = 0; t < blk.rows; ++t) tuple[blk.index(t, y)] = lhs.coords[t] - rhs.coords[t];
      }
    }
    auto out = from_hom(degree, tuple);
    if (!out)
      throw Error("prolongation bracket of degrees " + std::to_string(k) + " and " + std::to_string(m) +
                  " left g_" + std::to_string(degree));
    result = std::move(out->coords);
  }
  std::lock_guard lock(cache_.mutex);
  return cache_.entries.emplace(key, std::move(result)).first->second;
}

LinearEndo Prolongation::degree_zero_endo(const GradedElement& u) const {
  if (u.degree != 0) throw std::invalid_argument("degree_zero_endo: element is not of degree 0");
  Vector hom = as_hom(u);
  const std::size_t n = graded_.dim();
  Matrix m(n, n);
  for (const HomBlock& blk : homs_[0].blocks) {
    const std::size_t off = layer_offsets_[blk.layer - 1];
    for (std::size_t t = 0; t < blk.rows; ++t)
      for (std::size_t c = 0; c < blk.cols; ++c) m(off + t, off + c) = hom[blk.index(t, c)];
  }
  if (basis_ == Matrix::identity(n)) return {m};
  return {basis_ * m * basis_inverse_};
}

Subspace degree_zero_derivations(const LieAlgebra& L, const Stratification& s) {
  Prolongation p(L, s);
  std::vector<Vector> gens;
  for (std::size_t t = 0; t < p.dim(0); ++t) gens.push_back(p.degree_zero_endo(p.basis_element(0, t)).flatten());
  return Subspace::span(L.dim() * L.dim(), gens);
}

ProlongationResult prolong(const LieAlgebra& L, const Stratification& s, std::size_t k_max) {
  ProlongationResult res{{}, Finiteness::Unknown, Prolongation(L, s)};
  res.dims.push_back(res.tower.dim(0));
  while (res.dims.back() != 0 && res.tower.computed() <= k_max)
    res.dims.push_back(res.tower.extend().dim());
  if (res.dims.back() == 0) res.finite = Finiteness::Finite;
  return res;
}

GradedElement prolongation_bracket(const ProlongationResult& p, const GradedElement& u, const GradedElement& v) {
  return p.tower.bracket(u, v);
}

RigidityVerdict ultrarigidity_check(const LieAlgebra& L, const Stratification& s) {
  Prolongation p(L, s);
  RigidityVerdict v;
  v.g0_dim = p.dim(0);
  v.infinitesimally_ultrarigid = v.g0_dim == 1;
  std::vector<Vector> gens;
  for (std::size_t t = 0; t < p.dim(0); ++t) gens.push_back(p.degree_zero_endo(p.basis_element(0, t)).flatten());
  v.g0 = Subspace::span(L.dim() * L.dim(), gens);
  if (v.infinitesimally_ultrarigid && !L.table().empty()) v.lemma_prodim1_confirmed = p.extend().is_zero();
  return v;
}

}  // namespace carnot
