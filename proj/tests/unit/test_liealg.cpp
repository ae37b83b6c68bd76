#include "doctest.h"

#include "carnot/catalog.hpp"
#include "carnot/lie_algebra.hpp"
#include "support.hpp"

using namespace carnot;

namespace {

Vector e(std::size_t n, std::size_t oneBased) { return unit_vector(n, oneBased - 1); }

}  // namespace

TEST_CASE("raw table normalizes the pair order") {
  LieAlgebra L = LieAlgebra::raw(3, {{{1, 0}, e(3, 3)}});
  CHECK(L.basis_bracket(0, 1) == -e(3, 3));
  CHECK(bracket(L, e(3, 2), e(3, 1)) == e(3, 3));
  CHECK(L.basis_bracket(0, 2).empty());
  CHECK_THROWS_AS(LieAlgebra::raw(2, {{{1, 1}, e(2, 1)}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra::raw(3, {{{0, 1}, e(3, 3)}, {{1, 0}, e(3, 3)}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra::raw(2, {{{0, 1}, e(3, 3)}}), DimensionMismatch);
}

TEST_CASE("example 1 bracket of e9 and e10") {
  auto L = catalog::get("example1_16").algebra;
  CHECK(bracket(L, e(16, 9), e(16, 10)) == -e(16, 12));
  CHECK(bracket(L, e(16, 10), e(16, 9)) == e(16, 12));
  CHECK(L.table().size() == 26);
}

TEST_CASE("jacobi defect localizes the failing triple") {
  CHECK(jacobi_defect(catalog::get("example1_16").algebra).empty());
  // [e1, e2] = e3, [e1, e3] = e1, [e2, e3] = e2
  LieAlgebra::Table table{{{0, 1}, e(3, 3)}, {{0, 2}, e(3, 1)}, {{1, 2}, e(3, 2)}};
  auto bad = LieAlgebra::raw(3, table);
  auto defect = jacobi_defect(bad);
  REQUIRE(defect.size() == 1);
  CHECK(defect[0].i == 0);
  CHECK(defect[0].j == 1);
  CHECK(defect[0].k == 2);
  CHECK(defect[0].residual == Rational(-2) * e(3, 3));
  CHECK_THROWS_AS(LieAlgebra::validated(3, table), NotALieAlgebra);
  CHECK_THROWS_AS(require_lie(bad), NotALieAlgebra);
}

TEST_CASE("a sign typo in a 4-step table breaks the Jacobi identity") {
  // [e1, e2] = e3, [e1, e3] = e4, [e2, e3] = e5, [e1, e5] = e6, [e2, e4] = e6
  LieAlgebra::Table table{{{0, 1}, e(6, 3)}, {{0, 2}, e(6, 4)}, {{1, 2}, e(6, 5)}, {{0, 4}, e(6, 6)}, {{1, 3}, e(6, 6)}};
  CHECK(jacobi_defect(LieAlgebra::raw(6, table)).empty());
  table[{1, 3}] = -e(6, 6);
  auto defect = jacobi_defect(LieAlgebra::raw(6, table));
  REQUIRE(defect.size() == 1);
  CHECK(defect[0].i == 0);
  CHECK(defect[0].j == 1);
  CHECK(defect[0].k == 2);
  CHECK(defect[0].residual == Rational(-2) * e(6, 6));
}

TEST_CASE("lower central series of the catalog algebras") {
  CHECK(lower_central_series(catalog::get("example1_16").algebra).dims() == std::vector<std::size_t>{16, 6, 0});
  CHECK(lower_central_series(catalog::get("example2_17").algebra).dims() == std::vector<std::size_t>{17, 7, 1, 0});
  CHECK(lower_central_series(catalog::get("deformed_h_16").algebra).dims() == std::vector<std::size_t>{16, 6, 1, 0});
  auto h = lower_central_series(testing::heisenberg3());
  CHECK(h.nilpotent);
  CHECK(h.step == 2);
  auto ab = lower_central_series(LieAlgebra::abelian(3));
  CHECK(ab.step == 1);
}

TEST_CASE("a non-nilpotent algebra is reported as such") {
  // [e1, e2] = e2
  auto L = LieAlgebra::validated(2, {{{0, 1}, e(2, 2)}});
  auto s = lower_central_series(L);
  CHECK_FALSE(s.nilpotent);
}

TEST_CASE("centers") {
  CHECK(center(catalog::get("example1_16").algebra).dim() == 6);
  CHECK(center(catalog::get("example2_17").algebra).dim() == 6);
  CHECK(center(testing::heisenberg3()) == Subspace::coordinate(3, 2, 3));
  CHECK(center(LieAlgebra::abelian(4)).dim() == 4);
}

TEST_CASE("ad e1 on example 1 has five nonzero columns") {
  auto L = catalog::get("example1_16").algebra;
  LinearEndo a = ad(L, e(16, 1));
  std::size_t nonzero = 0;
  for (std::size_t c = 0; c < 16; ++c) nonzero += !is_zero(a.matrix.column(c));
  CHECK(nonzero == 5);
  CHECK(is_derivation(L, a));
}

TEST_CASE("derivation algebras") {
  CHECK(derivation_algebra(testing::heisenberg3()).dim() == 6);
  CHECK(derivation_algebra(LieAlgebra::abelian(3)).dim() == 9);
  auto entry = catalog::get("example1_16");
  auto L = entry.algebra;
  Subspace der = derivation_algebra(L);
  CHECK(der.dim() == 61);
  auto s = testing::declared_stratification(entry);
  CHECK(der.contains(grading_derivation(s).flatten()));
  for (std::size_t i = 1; i <= 16; ++i) CHECK(der.contains(ad(L, e(16, i)).flatten()));
}

TEST_CASE("is_derivation rejects the identity on a nonabelian algebra") {
  auto h = testing::heisenberg3();
  CHECK_FALSE(is_derivation(h, LinearEndo{Matrix::identity(3)}));
  CHECK(is_derivation(LieAlgebra::abelian(3), LinearEndo{Matrix::identity(3)}));
}

TEST_CASE("semidirect product with the grading derivation") {
  auto h = testing::heisenberg3();
  Matrix d = Matrix::diagonal({1, 1, 2});
  auto td = semidirect_with_derivation(h, LinearEndo{d});
  CHECK(td.dim() == 4);
  CHECK(jacobi_defect(td).empty());
  CHECK(bracket(td, e(4, 4), e(4, 3)) == Rational(2) * e(4, 3));
  CHECK(bracket(td, e(4, 4), e(4, 1)) == e(4, 1));
  CHECK_THROWS_AS(semidirect_with_derivation(h, LinearEndo{Matrix::identity(3)}), NotADerivation);
}

TEST_CASE("change of basis by a swap") {
  auto h = testing::heisenberg3();
  Matrix p(3, 3);
  p(0, 1) = 1;
  p(1, 0) = 1;
  p(2, 2) = 1;
  auto swapped = change_of_basis(h, p);
  CHECK(bracket(swapped, e(3, 1), e(3, 2)) == -e(3, 3));
  CHECK(change_of_basis(swapped, p) == h);
  CHECK_THROWS_AS(change_of_basis(h, Matrix(3, 3)), SingularMatrix);
}

TEST_CASE("bracket span") {
  auto L = catalog::get("example1_16").algebra;
  Subspace v1 = Subspace::coordinate(16, 0, 10);
  CHECK(bracket_span(L, v1, v1) == Subspace::coordinate(16, 10, 16));
}
