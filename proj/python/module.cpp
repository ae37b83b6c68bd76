#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "carnot/algebra_file.hpp"
#include "carnot/catalog.hpp"
#include "carnot/report.hpp"
#include "carnot/tanaka.hpp"

namespace py = pybind11;
using namespace carnot;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

py::list fractions(const Vector& v) {
  py::list out;
  for (const auto& q : v) out.append(fraction(q));
  return out;
}

Vector to_vector(const py::sequence& seq) {
  Vector v;
  v.reserve(seq.size());
  for (const auto& item : seq) v.push_back(parse_rational(py::str(item).cast<std::string>()));
  return v;
}

Stratification grading_for(const LieAlgebra& L, const std::optional<LayerRanges>& layers) {
  if (layers) return verify_stratification(L, coordinate_layers(L.dim(), *layers));
  auto verdict = is_stratifiable(L);
  if (!verdict.derived_stratification) throw Error("algebra admits no stratification with dim V1 >= 2");
  return *verdict.derived_stratification;
}

py::dict brackets(const LieAlgebra& L) {
  py::dict out;
  for (const auto& [key, value] : L.table()) out[py::make_tuple(key.first + 1, key.second + 1)] = fractions(value);
  return out;
}

}  // namespace

PYBIND11_MODULE(_carnot, m) {
  m.doc() = "Exact computations on nilpotent Lie algebras: stratifications, derivations and Tanaka prolongations.";

  // Translators run most recent first, so the base class goes first.
  auto base = py::register_exception<Error>(m, "CarnotError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<UnknownCatalogEntry>(m, "UnknownCatalogEntry", base.ptr());

  py::class_<LieAlgebra>(m, "LieAlgebra")
      .def_static(
          "parse", [](const std::string& text) { return parse_algebra(text).algebra; }, py::arg("text"),
          "Parse an algebra file; the table is not checked for the Jacobi identity.")
      .def_static(
          "from_catalog", [](const std::string& name) { return catalog::get(name).algebra; }, py::arg("name"))
      .def_static(
          "abelian", [](std::size_t n) { return LieAlgebra::abelian(n); }, py::arg("dim"))
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def("brackets", &brackets, "Nonzero [e_i, e_j] for i < j, keyed by 1-based index pairs.")
      .def(
          "bracket",
          [](const LieAlgebra& L, const py::sequence& x, const py::sequence& y) {
            return fractions(bracket(L, to_vector(x), to_vector(y)));
          },
          py::arg("x"), py::arg("y"))
      .def(
          "emit",
          [](const LieAlgebra& L, std::optional<LayerRanges> layers) { return emit_algebra(L, layers); },
          py::arg("layers") = py::none())
      .def("__eq__", [](const LieAlgebra& a, const LieAlgebra& b) { return a == b; })
      .def("__repr__", [](const LieAlgebra& L) {
        return "<LieAlgebra dim=" + std::to_string(L.dim()) + " brackets=" + std::to_string(L.table().size()) + ">";
      });

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& l : catalog::list()) names.push_back(l.name);
    return names;
  });
  m.def(
      "declared_layers", [](const std::string& name) { return catalog::get(name).declared_layers; },
      py::arg("name"));

  m.def(
      "jacobi_violations",
      [](const LieAlgebra& L) {
        py::list out;
        for (const auto& v : jacobi_defect(L)) out.append(py::make_tuple(v.i + 1, v.j + 1, v.k + 1, fractions(v.residual)));
        return out;
      },
      py::arg("algebra"), "Basis triples (1-based) with a nonzero Jacobi residual.");

  m.def(
      "lower_central_series", [](const LieAlgebra& L) { return lower_central_series(L).dims(); }, py::arg("algebra"),
      "Dimensions of g, [g, g], ... down to the first repeated term.");
  m.def(
      "center_dim", [](const LieAlgebra& L) { return center(L).dim(); }, py::arg("algebra"));
  m.def(
      "derivation_dim", [](const LieAlgebra& L) { return derivation_algebra(L).dim(); }, py::arg("algebra"));

  m.def(
      "is_stratifiable",
      [](const LieAlgebra& L) {
        auto v = is_stratifiable(L);
        py::dict out;
        out["stratifiable"] = v.stratifiable;
        out["layer_dims"] = v.derived_stratification ? py::cast(v.derived_stratification->layer_dims()) : py::none();
        return out;
      },
      py::arg("algebra"));

  m.def(
      "homogeneous_dimension",
      [](const LieAlgebra& L, std::optional<LayerRanges> layers) { return homogeneous_dimension(grading_for(L, layers)); },
      py::arg("algebra"), py::arg("layers") = py::none());

  m.def(
      "g0_dim",
      [](const LieAlgebra& L, std::optional<LayerRanges> layers) {
        return degree_zero_derivations(L, grading_for(L, layers)).dim();
      },
      py::arg("algebra"), py::arg("layers") = py::none(), "Dimension of the strata-preserving derivations.");

  m.def(
      "prolong",
      [](const LieAlgebra& L, std::optional<LayerRanges> layers, std::size_t k_max) {
        auto p = prolong(L, grading_for(L, layers), k_max);
        py::dict out;
        out["dims"] = p.dims;
        out["finite"] = p.finite == Finiteness::Finite;
        return out;
      },
      py::arg("algebra"), py::arg("layers") = py::none(), py::arg("k_max") = 6,
      "Dimensions of g_0, g_1, ... up to the first zero or k_max.");

  m.def(
      "ultrarigidity",
      [](const LieAlgebra& L, std::optional<LayerRanges> layers) {
        auto v = ultrarigidity_check(L, grading_for(L, layers));
        py::dict out;
        out["g0_dim"] = v.g0_dim;
        out["ultrarigid"] = v.infinitesimally_ultrarigid;
        out["g1_zero"] = v.lemma_prodim1_confirmed ? py::cast(*v.lemma_prodim1_confirmed) : py::none();
        return out;
      },
      py::arg("algebra"), py::arg("layers") = py::none());

  m.def(
      "nilpotentisation",
      [](const LieAlgebra& L, std::size_t first, std::size_t last) {
        if (first < 1 || first > last || last > L.dim()) throw py::value_error("horizontal range out of bounds");
        return nilpotentisation(L, Subspace::coordinate(L.dim(), first - 1, last)).algebra;
      },
      py::arg("algebra"), py::arg("first"), py::arg("last"),
      "Associated graded algebra of the filtration generated by span(e_first .. e_last).");

  m.def(
      "report", [](const std::string& name, std::size_t k_max) { return render(full_report(subject_from_catalog(name), k_max)); },
      py::arg("name"), py::arg("k_max") = 6, "JSON report for a catalog entry.");
}
