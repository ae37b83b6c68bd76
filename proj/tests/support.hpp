#pragma once

// Shared generators and independent oracles for the test suites. Nothing
// here calls into the code path it is used to check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "carnot/catalog.hpp"
#include "carnot/grading.hpp"
#include "carnot/tanaka.hpp"

namespace carnot::testing {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, int magnitude = 5);
Rational random_nonzero_rational(Rng& rng, int magnitude = 5);
Vector random_vector(Rng& rng, std::size_t n, int magnitude = 5);

/// Random permutation composed with a handful of integer transvections, so
/// det = +-1 and the inverse is integral.
Matrix random_unimodular(Rng& rng, std::size_t n, int transvections = 6);

/// Random subspace of Q^n of random dimension, from integer generators.
Subspace random_subspace(Rng& rng, std::size_t n);

/// Random (not necessarily Lie) table with rational coefficients.
LieAlgebra random_table(Rng& rng, std::size_t n);

LieAlgebra heisenberg3();
Stratification declared_stratification(const catalog::Entry& e);

/// Intersection via the kernel of [A^T | -B^T]: solutions (a, b) give A^T a.
Subspace intersect_by_kernel(const Subspace& a, const Subspace& b);

/// Derivations preserving each layer, computed in the original basis by
/// adding u(V_j) in V_j constraints to the full Leibniz system.
Subspace layer_preserving_derivations_direct(const LieAlgebra& L, const Stratification& s);

/// dim g_k for a step-1 algebra of dimension n: homogeneous polynomial
/// vector fields of degree k + 1 in n variables, n * C(n + k, k + 1).
std::size_t abelian_prolongation_dim(std::size_t n, std::size_t k);

/// dim g_k of the contact grading of the Heisenberg algebra of dimension
/// 2m + 1: polynomials of weighted degree k + 2 in 2m variables of weight 1
/// and one of weight 2 (the contact generating functions).
std::size_t contact_prolongation_dim(std::size_t m, std::size_t k);

/// g_1 of a 2-step stratified algebra with g_0 = span(D), written directly
/// in the unknowns u(X) = c(X) D on V_1 and u|V_2 = B : V_2 -> V_1.
Subspace first_prolongation_when_g0_is_grading(const LieAlgebra& L, std::size_t dim_v1);

struct PropertyOutcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

/// Randomized property suites, each running `cases` cases from `seed`.
std::vector<PropertyOutcome> run_property_suites(std::size_t cases, std::uint64_t seed);

}  // namespace carnot::testing
