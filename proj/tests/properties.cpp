#include <functional>
#include <sstream>

#include "carnot/algebra_file.hpp"
#include "support.hpp"

namespace carnot::testing {

namespace {

struct Subjects {
  catalog::Entry example1 = catalog::get("example1_16");
  catalog::Entry example2 = catalog::get("example2_17");
  catalog::Entry heis = catalog::get("heisenberg_3");
  Stratification s1 = declared_stratification(example1);
  Stratification s2 = declared_stratification(example2);
  Stratification sh = declared_stratification(heis);
};

using Case = std::function<std::string(Rng&, std::size_t)>;

PropertyOutcome run(const std::string& name, std::size_t cases, std::uint64_t seed, const Case& body) {
  PropertyOutcome out{name, 0, 0, {}};
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    std::string failure;
    try {
      failure = body(rng, i);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    ++out.cases;
    if (!failure.empty()) {
      if (out.failures++ == 0) out.first_failure = "case " + std::to_string(i) + ": " + failure;
    }
  }
  return out;
}

}  // namespace

std::vector<PropertyOutcome> run_property_suites(std::size_t cases, std::uint64_t seed) {
  const Subjects sub;
  std::vector<PropertyOutcome> out;

  auto pick = [&](std::size_t i) -> std::pair<const LieAlgebra&, const Stratification&> {
    if (i % 2 == 0) return {sub.example1.algebra, sub.s1};
    return {sub.heis.algebra, sub.sh};
  };

  out.push_back(run("dilation group law", cases, seed + 1, [&](Rng& rng, std::size_t i) -> std::string {
    const Stratification& s = i % 2 ? sub.s2 : sub.s1;
    Rational a = random_nonzero_rational(rng), b = random_nonzero_rational(rng);
    if (dilation(s, a).matrix * dilation(s, b).matrix != dilation(s, a * b).matrix)
      return "delta_" + to_string(a) + " delta_" + to_string(b) + " != delta_" + to_string(a * b);
    return {};
  }));

  out.push_back(run("dilation is an automorphism", cases, seed + 2, [&](Rng& rng, std::size_t i) -> std::string {
    const LieAlgebra& L = i % 3 == 0 ? sub.example1.algebra : i % 3 == 1 ? sub.example2.algebra : sub.heis.algebra;
    const Stratification& s = i % 3 == 0 ? sub.s1 : i % 3 == 1 ? sub.s2 : sub.sh;
    Rational lambda = random_nonzero_rational(rng);
    LinearEndo d = dilation(s, lambda);
    for (const auto& [key, value] : L.table()) {
      Vector ei = unit_vector(L.dim(), key.first), ej = unit_vector(L.dim(), key.second);
      if (d(value) != bracket(L, d(ei), d(ej)))
        return "fails on pair (" + std::to_string(key.first + 1) + ", " + std::to_string(key.second + 1) + ")";
    }
    return {};
  }));

  out.push_back(run("grading derivation lies in g0 after change of basis", cases, seed + 3,
                    [&](Rng& rng, std::size_t i) -> std::string {
                      auto [L, s] = pick(i);
                      Matrix p = random_unimodular(rng, L.dim());
                      LieAlgebra L2 = change_of_basis(L, p);
                      Stratification s2 = transport(s, L2, p);
                      LinearEndo D = grading_derivation(s2);
                      if (!is_derivation(L2, D)) return "D is not a derivation";
                      auto verdict = ultrarigidity_check(L2, s2);
                      if (!verdict.g0.contains(D.flatten())) return "D not in g0";
                      if (verdict.g0_dim != (i % 2 == 0 ? 1u : 4u)) return "g0 dim changed";
                      return {};
                    }));

  out.push_back(run("lower central series invariant under change of basis", cases, seed + 4,
                    [&](Rng& rng, std::size_t i) -> std::string {
                      auto [L, s] = pick(i);
                      LieAlgebra L2 = change_of_basis(L, random_unimodular(rng, L.dim()));
                      if (lower_central_series(L2).dims() != lower_central_series(L).dims()) return "dims differ";
                      return {};
                    }));

  out.push_back(run("derivation algebra dim invariant under change of basis", cases, seed + 5,
                    [&](Rng& rng, std::size_t i) -> std::string {
                      auto [L, s] = pick(i);
                      LieAlgebra L2 = change_of_basis(L, random_unimodular(rng, L.dim()));
                      Subspace der = derivation_algebra(L2);
                      if (der.dim() != (i % 2 == 0 ? 61u : 6u)) return "dim " + std::to_string(der.dim());
                      for (const auto& b : der.basis_vectors())
                        if (!is_derivation(L2, LinearEndo::from_flat(b, L2.dim()))) return "basis element not a derivation";
                      return {};
                    }));

  out.push_back(run("stratifiability invariant under change of basis", cases, seed + 6,
                    [&](Rng& rng, std::size_t i) -> std::string {
                      auto [L, s] = pick(i);
                      LieAlgebra L2 = change_of_basis(L, random_unimodular(rng, L.dim()));
                      auto v = is_stratifiable(L2);
                      if (!v.stratifiable || !v.witness || !v.derived_stratification) return "not stratifiable";
                      if (!is_derivation(L2, *v.witness)) return "witness is not a derivation";
                      Subspace gamma2 = lower_central_series(L2).terms[1];
                      Matrix shifted = v.witness->matrix - Matrix::identity(L2.dim());
                      for (std::size_t c = 0; c < L2.dim(); ++c)
                        if (!gamma2.contains(shifted.column(c))) return "witness - id leaves [g, g]";
                      if (v.derived_stratification->layer_dims() != s.layer_dims()) return "layer dims differ";
                      return {};
                    }));

  out.push_back(run("subspace dimension formula", cases, seed + 7, [&](Rng& rng, std::size_t) -> std::string {
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    std::size_t n = dim(rng);
    Subspace a = random_subspace(rng, n), b = random_subspace(rng, n);
    Subspace sum = subspace_sum(a, b), cap = subspace_intersect(a, b);
    if (sum.dim() + cap.dim() != a.dim() + b.dim()) return "dim(a+b) + dim(a^b) != dim a + dim b";
    if (cap != intersect_by_kernel(a, b)) return "intersection disagrees with kernel oracle";
    if (!sum.contains(a) || !sum.contains(b) || !a.contains(cap) || !b.contains(cap)) return "containment";
    return {};
  }));

  out.push_back(run("parse/emit round trip", cases, seed + 8, [&](Rng& rng, std::size_t i) -> std::string {
    static const std::vector<std::string> names = {"example1_16", "example2_17", "deformed_h_16", "heisenberg_3",
                                                   "heisenberg_2n1(2)", "abelian(3)", "free_step2_rank3"};
    LieAlgebra L;
    std::optional<LayerRanges> layers;
    if (i < names.size()) {
      auto e = catalog::get(names[i]);
      L = e.algebra;
      layers = e.declared_layers;
    } else {
      std::uniform_int_distribution<std::size_t> dim(1, 9);
      L = random_table(rng, dim(rng));
      if (L.dim() >= 2) layers = LayerRanges{{1, L.dim() / 2}, {L.dim() / 2 + 1, L.dim()}};
    }
    std::string text = emit_algebra(L, layers, "round trip");
    AlgebraFile back = parse_algebra(text);
    if (!(back.algebra == L)) return "table differs after round trip";
    if (back.layers != layers) return "layers differ after round trip";
    if (emit_algebra(back.algebra, back.layers, "round trip") != text) return "emit not stable";
    return {};
  }));

  out.push_back(run("bracket antisymmetry", cases, seed + 9, [&](Rng& rng, std::size_t i) -> std::string {
    const LieAlgebra& L = i % 2 ? sub.example2.algebra : sub.example1.algebra;
    Vector x = random_vector(rng, L.dim()), y = random_vector(rng, L.dim());
    if (bracket(L, x, y) != -bracket(L, y, x)) return "[x,y] != -[y,x]";
    if (!is_zero(bracket(L, x, x))) return "[x,x] != 0";
    return {};
  }));

  return out;
}

}  // namespace carnot::testing
