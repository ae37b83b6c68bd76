#include "carnot/report.hpp"

#include "carnot/catalog.hpp"

namespace carnot {

Subject subject_from_catalog(std::string_view name) {
  auto e = catalog::get(name);
  return {e.name, e.algebra, e.declared_layers};
}

Subject subject_from_text(std::string name, std::string_view text) {
  auto f = parse_algebra(text);
  return {std::move(name), std::move(f.algebra), std::move(f.layers)};
}

ResolvedGrading resolve_grading(const Subject& s) {
  if (s.declared_layers)
    return {verify_stratification(s.algebra, coordinate_layers(s.algebra.dim(), *s.declared_layers)), "declared"};
  if (!lower_central_series(s.algebra).nilpotent) return {std::nullopt, "none"};
  auto verdict = is_stratifiable(s.algebra);
  if (verdict.derived_stratification) return {std::move(verdict.derived_stratification), "derived"};
  return {std::nullopt, "none"};
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Vector& v) {
  Json arr = Json::array();
  for (const auto& q : v) arr.push_back(to_string(q));
  return arr;
}

Json sparse_json(const Matrix& m) {
  Json arr = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) arr.push_back(Json::array({r + 1, c + 1, to_string(m(r, c))}));
  return arr;
}

Json jacobi_json(const LieAlgebra& L) {
  auto defects = jacobi_defect(L);
  Json j;
  j["ok"] = defects.empty();
  Json list = Json::array();
  for (const auto& d : defects) {
    Json item;
    item["triple"] = Json::array({d.i + 1, d.j + 1, d.k + 1});
    item["residual"] = to_json(d.residual);
    list.push_back(std::move(item));
  }
  j["violations"] = std::move(list);
  return j;
}

Json series_json(const LieAlgebra& L) {
  auto rep = lower_central_series(L);
  Json j;
  j["dims"] = rep.dims();
  j["nilpotent"] = rep.nilpotent;
  j["step"] = rep.nilpotent ? Json(rep.step) : Json(nullptr);
  j["center_dim"] = center(L).dim();
  return j;
}

Json stratifiable_json(const StratifiabilityVerdict& v) {
  Json j;
  j["verdict"] = v.stratifiable;
  j["witness"] = v.witness ? sparse_json(v.witness->matrix) : Json(nullptr);
  return j;
}

Json stratification_json(const Stratification& s, const std::string& source) {
  Json j;
  j["source"] = source;
  j["step"] = s.step();
  j["layer_dims"] = s.layer_dims();
  Json layers = Json::array();
  for (const auto& v : s.layers()) {
    Json basis = Json::array();
    for (const auto& b : v.basis_vectors()) basis.push_back(to_json(b));
    layers.push_back(std::move(basis));
  }
  j["layers"] = std::move(layers);
  j["homogeneous_dimension"] = homogeneous_dimension(s);
  return j;
}

Json g0_json(const Subspace& g0, std::size_t n) {
  Json j;
  j["dim"] = g0.dim();
  Json basis = Json::array();
  for (const auto& b : g0.basis_vectors()) basis.push_back(sparse_json(Matrix::from_flat(b, n, n)));
  j["basis"] = std::move(basis);
  return j;
}

Json prolongation_json(const ProlongationResult& p, std::size_t k_max) {
  Json j;
  j["dims"] = p.dims;
  j["finite"] = to_string(p.finite);
  j["cap"] = k_max;
  return j;
}

Json rigidity_json(const RigidityVerdict& v) {
  Json j;
  j["g0_dim"] = v.g0_dim;
  j["infinitesimally_ultrarigid"] = v.infinitesimally_ultrarigid;
  j["g1_zero"] = v.lemma_prodim1_confirmed ? Json(*v.lemma_prodim1_confirmed) : Json(nullptr);
  return j;
}

Json full_report(const Subject& s, std::size_t k_max) {
  const LieAlgebra& L = s.algebra;
  Json r;
  r["name"] = s.name;
  r["dim"] = L.dim();
  r["brackets"] = L.table().size();
  r["jacobi"] = jacobi_json(L);
  if (!r["jacobi"]["ok"].get<bool>()) return r;

  r["series"] = series_json(L);
  if (!r["series"]["nilpotent"].get<bool>()) return r;

  auto verdict = is_stratifiable(L);
  r["stratifiable"] = stratifiable_json(verdict);

  std::optional<Stratification> strat;
  std::string source = "none";
  if (s.declared_layers) {
    try {
      strat = verify_stratification(L, coordinate_layers(L.dim(), *s.declared_layers));
      source = "declared";
    } catch (const StratificationError& e) {
      r["declared_layers_error"] = e.what();
    }
  }
  if (!strat && verdict.derived_stratification) {
    strat = verdict.derived_stratification;
    source = "derived";
  }
  if (!strat) {
    r["stratification"] = nullptr;
    return r;
  }
  r["stratification"] = stratification_json(*strat, source);

  auto prol = prolong(L, *strat, k_max);
  std::vector<Vector> g0_gens;
  for (std::size_t t = 0; t < prol.dims.front(); ++t)
    g0_gens.push_back(prol.tower.degree_zero_endo(prol.tower.basis_element(0, t)).flatten());
  r["g0"] = g0_json(Subspace::span(L.dim() * L.dim(), g0_gens), L.dim());
  r["prolongation"] = prolongation_json(prol, k_max);
  r["rigidity"] = rigidity_json(ultrarigidity_check(L, *strat));
  return r;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace carnot
