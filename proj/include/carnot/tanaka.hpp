#pragma once

#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "carnot/grading.hpp"

namespace carnot {

/// The block of a graded hom element acting on one layer: a matrix of shape
/// rows x cols (target dim x dim V_layer), stored row-major at `offset`.
struct HomBlock {
  std::size_t layer = 0;  ///< l, the source is V_l = g_{-l}
  int target_degree = 0;  ///< k - l: a layer of g when negative, else a prolongation component
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t offset = 0;

  std::size_t index(std::size_t row, std::size_t col) const { return offset + row * cols + col; }
};

/// Coordinates for degree k elements u = (u_1, ..., u_s), u_l : g_{-l} -> g_{k-l}.
struct GradedHomSpace {
  std::size_t degree = 0;
  std::vector<HomBlock> blocks;  ///< blocks[l - 1] acts on V_l
  std::size_t size = 0;

  const HomBlock& block(std::size_t layer) const { return blocks.at(layer - 1); }
};

/// Homogeneous element of g + Prol(g). Negative degree -l: coordinates in the
/// adapted basis of V_l. Degree k >= 0: coefficients on the basis of g_k.
struct GradedElement {
  int degree = 0;
  Vector coords;

  friend bool operator==(const GradedElement&, const GradedElement&) = default;
};

/// The graded pieces g_0, g_1, ... of the Tanaka prolongation, computed one
/// degree at a time. All work happens in the basis adapted to the
/// stratification, where every layer is a block of coordinates.
class Prolongation {
 public:
  /// Computes g_0.
  Prolongation(const LieAlgebra& L, const Stratification& s);

  const LieAlgebra& graded_algebra() const { return graded_; }
  const Matrix& adapted_basis() const { return basis_; }
  std::size_t step() const { return layer_dims_.size(); }
  std::size_t layer_dim(std::size_t l) const { return layer_dims_.at(l - 1); }

  /// Number of computed components g_0 ... g_{computed()-1}.
  std::size_t computed() const { return components_.size(); }
  /// True once some computed component is zero; all later ones are then zero.
  bool vanished() const;

  /// dim g_k. Components past a zero one report 0; otherwise throws
  /// NotComputed for k >= computed().
  std::size_t dim(std::size_t k) const;
  const Subspace& component(std::size_t k) const;
  const GradedHomSpace& hom_space(std::size_t k) const;

  /// Computes the next component, regardless of whether an earlier one vanished.
  const Subspace& extend();

  GradedElement basis_element(std::size_t k, std::size_t t) const;
  GradedElement zero(int degree) const;

  /// The flattened map tuple of a degree k >= 0 element.
  Vector as_hom(const GradedElement& u) const;
  /// Inverse of as_hom, or nothing when the tuple is not in g_k.
  std::optional<GradedElement> from_hom(std::size_t k, const Vector& hom) const;

  /// Bracket of g + Prol(g): the Lie bracket on g, [u, X] = u(X), and
  /// [u, v](X) = [u, [v, X]] - [v, [u, X]] for nonnegative degrees. Throws
  /// NotComputed when the result degree has not been computed yet.
  GradedElement bracket(const GradedElement& a, const GradedElement& b) const;

  /// A degree-0 element as an endomorphism in the original basis.
  LinearEndo degree_zero_endo(const GradedElement& u) const;

 private:
  std::size_t target_dim(int degree) const;
  Vector layer_bracket(std::size_t l1, std::size_t a, std::size_t l2, std::size_t b) const;
  GradedHomSpace make_hom_space(std::size_t k) const;
  Subspace solve_degree(const GradedHomSpace& hom) const;
  Vector basis_pair_bracket(std::size_t k, std::size_t a, std::size_t m, std::size_t b) const;

  // Brackets of basis elements of nonnegative degree, filled on demand.
  // Copies start empty.
  struct BracketCache {
    BracketCache() = default;
    BracketCache(const BracketCache&) {}
    BracketCache& operator=(const BracketCache&) {
      std::lock_guard lock(mutex);
      entries.clear();
      return *this;
    }
    std::mutex mutex;
    std::map<std::array<std::size_t, 4>, Vector> entries;
  };

  LieAlgebra graded_;
  Matrix basis_;
  Matrix basis_inverse_;
  std::vector<std::size_t> layer_dims_;
  std::vector<std::size_t> layer_offsets_;
  std::vector<GradedHomSpace> homs_;
  std::vector<Subspace> components_;
  mutable BracketCache cache_;
};

enum class Finiteness { Finite, Unknown };

const char* to_string(Finiteness f);

struct ProlongationResult {
  std::vector<std::size_t> dims;  ///< dim g_0, dim g_1, ..., ending at the first zero or at the cap
  Finiteness finite = Finiteness::Unknown;
  Prolongation tower;

  /// Witness basis of g_k in hom coordinates.
  const Subspace& basis(std::size_t k) const { return tower.component(k); }
};

/// Layer-preserving derivations, as flattened n x n matrices in the
/// original basis.
Subspace degree_zero_derivations(const LieAlgebra& L, const Stratification& s);

/// g_0 ... g_{k_max}, stopping at the first zero component.
ProlongationResult prolong(const LieAlgebra& L, const Stratification& s, std::size_t k_max = 6);

GradedElement prolongation_bracket(const ProlongationResult& p, const GradedElement& u, const GradedElement& v);

struct RigidityVerdict {
  std::size_t g0_dim = 0;
  bool infinitesimally_ultrarigid = false;
  /// Whether g_1 = 0; computed only for nonabelian algebras with dim g_0 = 1.
  std::optional<bool> lemma_prodim1_confirmed;
  Subspace g0;  ///< as in degree_zero_derivations
};

RigidityVerdict ultrarigidity_check(const LieAlgebra& L, const Stratification& s);

}  // namespace carnot
