#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "carnot/error.hpp"
#include "carnot/lie_algebra.hpp"

namespace carnot {

enum class StratificationViolation {
  AmbientMismatch,       ///< a layer lives in the wrong space
  NotDirectSum,          ///< layers do not sum directly to the whole algebra
  GenerationFails,       ///< [V_j, V_1] != V_{j+1} for some j
  EmptyTopLayer,         ///< V_s = 0
  DegenerateFirstLayer,  ///< dim V_1 < 2
};

const char* to_string(StratificationViolation v);

class StratificationError : public Error {
 public:
  StratificationError(StratificationViolation violation, std::size_t layer, const std::string& what)
      : Error(what), violation_(violation), layer_(layer) {}

  StratificationViolation violation() const { return violation_; }
  /// 1-based index of the offending layer (0 when not layer specific).
  std::size_t layer() const { return layer_; }

 private:
  StratificationViolation violation_;
  std::size_t layer_;
};

/// A validated decomposition g = V_1 + ... + V_s with [V_j, V_1] = V_{j+1}.
/// Only verify_stratification creates one.
class Stratification {
 public:
  const std::vector<Subspace>& layers() const { return layers_; }
  const Subspace& layer(std::size_t j) const { return layers_.at(j - 1); }  ///< 1-based
  std::size_t step() const { return layers_.size(); }
  std::size_t ambient_dim() const { return layers_.front().ambient_dim(); }
  std::vector<std::size_t> layer_dims() const;

  /// Columns are the basis vectors of V_1, then V_2, ... in order.
  Matrix adapted_basis() const;
  /// Weight (layer index) of each column of adapted_basis().
  std::vector<std::size_t> adapted_weights() const;

  /// True when every layer is spanned by consecutive unit vectors starting
  /// from e_1, so the adapted basis is the identity.
  bool is_coordinate() const;

  friend bool operator==(const Stratification&, const Stratification&) = default;

 private:
  friend Stratification verify_stratification(const LieAlgebra&, std::vector<Subspace>);
  explicit Stratification(std::vector<Subspace> layers) : layers_(std::move(layers)) {}
  std::vector<Subspace> layers_;
};

/// Throws StratificationError naming the first failed condition, checked in
/// the order: ambient, direct sum, generation, top layer, first layer.
Stratification verify_stratification(const LieAlgebra& L, std::vector<Subspace> layers);

/// Layers spanned by 1-based inclusive index ranges, e.g. {{1,10},{11,16}}.
std::vector<Subspace> coordinate_layers(std::size_t n,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& ranges);

/// The layers of s carried into the basis given by the columns of p,
/// validated against the rewritten algebra.
Stratification transport(const Stratification& s, const LieAlgebra& rewritten, const Matrix& p);

/// D = j * id on V_j.
LinearEndo grading_derivation(const Stratification& s);

/// delta_lambda = lambda^j * id on V_j. Throws std::invalid_argument for lambda = 0.
LinearEndo dilation(const Stratification& s, const Rational& lambda);

/// Q = sum_j j dim V_j
std::size_t homogeneous_dimension(const Stratification& s);

struct Filtration {
  std::vector<Subspace> terms;  ///< L_1 = h, L_{i+1} = L_i + [h, L_i], last term is the whole space

  /// [L_i, L_j] contained in L_{i+j} (indices capped at the last term).
  bool respects_brackets(const LieAlgebra& L) const;
};

/// Throws NotBracketGenerating when the recursion stalls below full dimension.
Filtration filtration_from_horizontal(const LieAlgebra& L, const Subspace& horizontal);

struct Nilpotentisation {
  LieAlgebra algebra;             ///< gr(g), in the adapted basis
  Matrix adapted_basis;           ///< columns: representatives, grouped by filtration level
  Stratification stratification;  ///< coordinate layers of algebra
};

/// Associated graded algebra of the filtration generated by `horizontal`.
Nilpotentisation nilpotentisation(const LieAlgebra& L, const Subspace& horizontal);

struct StratifiabilityVerdict {
  bool stratifiable = false;
  /// A derivation delta with (delta - id)(g) contained in [g, g].
  std::optional<LinearEndo> witness;
  /// Generalized eigenspaces of the witness for eigenvalues 1..s. Absent
  /// when the only candidate has dim V_1 < 2.
  std::optional<Stratification> derived_stratification;
};

/// Decides whether a nilpotent algebra admits a stratification by solving
/// the affine system for delta. Throws NotNilpotent.
StratifiabilityVerdict is_stratifiable(const LieAlgebra& L);

}  // namespace carnot
