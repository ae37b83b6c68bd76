#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "carnot/algebra_file.hpp"
#include "carnot/grading.hpp"
#include "carnot/tanaka.hpp"

namespace carnot {

using Json = nlohmann::ordered_json;

/// An algebra under study together with the layers its source declares.
struct Subject {
  std::string name;
  LieAlgebra algebra;
  std::optional<LayerRanges> declared_layers;
};

Subject subject_from_catalog(std::string_view name);
Subject subject_from_text(std::string name, std::string_view text);

/// The grading used by the layer-dependent commands.
struct ResolvedGrading {
  std::optional<Stratification> stratification;
  std::string source;  ///< "declared", "derived" or "none"
};

/// Declared layers are validated (StratificationError on failure). Without
/// declared layers a nilpotent algebra is tested for stratifiability and the
/// derived stratification is used.
ResolvedGrading resolve_grading(const Subject& s);

Json to_json(const Rational& q);
Json to_json(const Vector& v);
/// Nonzero entries as [row, col, value] triples, 1-based.
Json sparse_json(const Matrix& m);

Json jacobi_json(const LieAlgebra& L);
Json series_json(const LieAlgebra& L);
Json stratifiable_json(const StratifiabilityVerdict& v);
Json stratification_json(const Stratification& s, const std::string& source);
Json g0_json(const Subspace& g0, std::size_t n);
Json prolongation_json(const ProlongationResult& p, std::size_t k_max);
Json rigidity_json(const RigidityVerdict& v);

/// Every section that applies to the subject.
Json full_report(const Subject& s, std::size_t k_max = 6);

/// Canonical serialization: two-space indentation and a trailing newline.
std::string render(const Json& j);

}  // namespace carnot
