#include "doctest.h"

#include "carnot/catalog.hpp"
#include "carnot/grading.hpp"
#include "support.hpp"

using namespace carnot;

namespace {

StratificationViolation violation_of(const LieAlgebra& L, std::vector<Subspace> layers) {
  try {
    verify_stratification(L, std::move(layers));
  } catch (const StratificationError& e) {
    return e.violation();
  }
  FAIL("expected a StratificationError");
  return StratificationViolation::AmbientMismatch;
}

}  // namespace

TEST_CASE("declared layers of the catalog examples verify") {
  auto s1 = testing::declared_stratification(catalog::get("example1_16"));
  CHECK(s1.step() == 2);
  CHECK(s1.layer_dims() == std::vector<std::size_t>{10, 6});
  CHECK(s1.is_coordinate());
  CHECK(homogeneous_dimension(s1) == 22);

  auto s2 = testing::declared_stratification(catalog::get("example2_17"));
  CHECK(s2.layer_dims() == std::vector<std::size_t>{10, 6, 1});
  CHECK(homogeneous_dimension(s2) == 25);

  auto sh = testing::declared_stratification(catalog::get("heisenberg_3"));
  CHECK(homogeneous_dimension(sh) == 4);
}

TEST_CASE("verify_stratification names the failed condition") {
  auto h = testing::heisenberg3();
  CHECK(violation_of(h, {Subspace::coordinate(4, 0, 2), Subspace::coordinate(4, 2, 4)}) ==
        StratificationViolation::AmbientMismatch);
  CHECK(violation_of(h, {Subspace::coordinate(3, 0, 2), Subspace::coordinate(3, 1, 3)}) ==
        StratificationViolation::NotDirectSum);
  CHECK(violation_of(h, {Subspace::coordinate(3, 0, 1), Subspace::coordinate(3, 1, 3)}) ==
        StratificationViolation::GenerationFails);
  CHECK(violation_of(LieAlgebra::abelian(2), {Subspace::full(2), Subspace(2)}) ==
        StratificationViolation::EmptyTopLayer);
  CHECK(violation_of(LieAlgebra::abelian(1), {Subspace::full(1)}) == StratificationViolation::DegenerateFirstLayer);

  auto L = catalog::get("example1_16").algebra;
  CHECK(violation_of(L, coordinate_layers(16, {{1, 9}, {10, 16}})) == StratificationViolation::GenerationFails);
}

TEST_CASE("a layer that only generates part of the next one fails generation") {
  auto L = catalog::get("example2_17").algebra;
  CHECK(violation_of(L, coordinate_layers(17, {{1, 10}, {11, 17}})) == StratificationViolation::GenerationFails);
}

TEST_CASE("grading derivation and dilations") {
  auto s = testing::declared_stratification(catalog::get("example2_17"));
  auto L = catalog::get("example2_17").algebra;
  LinearEndo D = grading_derivation(s);
  CHECK(is_derivation(L, D));
  CHECK(D.matrix(0, 0) == 1);
  CHECK(D.matrix(10, 10) == 2);
  CHECK(D.matrix(16, 16) == 3);
  LinearEndo half = dilation(s, Rational(1, 2));
  CHECK(half.matrix(16, 16) == Rational(1, 8));
  CHECK(dilation(s, 1).matrix == Matrix::identity(17));
  CHECK_THROWS_AS(dilation(s, 0), std::invalid_argument);
}

TEST_CASE("filtration from the first ten coordinates") {
  auto L = catalog::get("deformed_h_16").algebra;
  auto f = filtration_from_horizontal(L, Subspace::coordinate(16, 0, 10));
  REQUIRE(f.terms.size() == 2);
  CHECK(f.terms[0].dim() == 10);
  CHECK(f.terms[1].dim() == 16);
  CHECK(f.respects_brackets(L));
  CHECK_THROWS_AS(filtration_from_horizontal(L, Subspace::coordinate(16, 0, 3)), NotBracketGenerating);
}

TEST_CASE("filtration of the Heisenberg algebra from a line stalls") {
  CHECK_THROWS_AS(filtration_from_horizontal(testing::heisenberg3(), Subspace::coordinate(3, 0, 1)),
                  NotBracketGenerating);
}

TEST_CASE("nilpotentisation of the deformed algebra is example 1") {
  auto deformed = catalog::get("deformed_h_16").algebra;
  auto n = nilpotentisation(deformed, Subspace::coordinate(16, 0, 10));
  CHECK(n.algebra == catalog::get("example1_16").algebra);
  CHECK(n.stratification.layer_dims() == std::vector<std::size_t>{10, 6});
  CHECK(n.adapted_basis == Matrix::identity(16));
}

TEST_CASE("nilpotentisation of a stratified algebra is idempotent") {
  auto L = catalog::get("example1_16").algebra;
  auto n = nilpotentisation(L, Subspace::coordinate(16, 0, 10));
  CHECK(n.algebra == L);
  auto h = testing::heisenberg3();
  CHECK(nilpotentisation(h, Subspace::coordinate(3, 0, 2)).algebra == h);
}

TEST_CASE("stratifiability verdicts") {
  auto entry = catalog::get("example1_16");
  auto v = is_stratifiable(entry.algebra);
  CHECK(v.stratifiable);
  REQUIRE(v.witness);
  REQUIRE(v.derived_stratification);
  CHECK(v.derived_stratification->layer_dims() == std::vector<std::size_t>{10, 6});
  CHECK(is_derivation(entry.algebra, *v.witness));

  auto ex2 = is_stratifiable(catalog::get("example2_17").algebra);
  CHECK(ex2.stratifiable);
  REQUIRE(ex2.derived_stratification);
  CHECK(ex2.derived_stratification->layer_dims() == std::vector<std::size_t>{10, 6, 1});

  auto deformed = is_stratifiable(catalog::get("deformed_h_16").algebra);
  CHECK_FALSE(deformed.stratifiable);
  CHECK_FALSE(deformed.witness);

  auto line = is_stratifiable(LieAlgebra::abelian(1));
  CHECK(line.stratifiable);
  CHECK_FALSE(line.derived_stratification);

  CHECK_THROWS_AS(is_stratifiable(LieAlgebra::validated(2, {{{0, 1}, unit_vector(2, 1)}})), NotNilpotent);
}

TEST_CASE("derived stratification agrees with every declared grading in the catalog") {
  for (const auto& listing : catalog::list()) {
    auto entry = catalog::get(listing.name);
    if (!entry.declared_layers) continue;
    CAPTURE(listing.name);
    auto declared = testing::declared_stratification(entry);
    auto v = is_stratifiable(entry.algebra);
    REQUIRE(v.derived_stratification);
    CHECK(v.derived_stratification->layer_dims() == declared.layer_dims());
    CHECK(v.derived_stratification->layer(declared.step()) == declared.layer(declared.step()));
  }
}

TEST_CASE("transport of a stratification along a change of basis") {
  testing::Rng rng(5);
  auto entry = catalog::get("example1_16");
  auto s = testing::declared_stratification(entry);
  Matrix p = testing::random_unimodular(rng, 16);
  auto L2 = change_of_basis(entry.algebra, p);
  auto s2 = transport(s, L2, p);
  CHECK(s2.layer_dims() == s.layer_dims());
  CHECK(is_derivation(L2, grading_derivation(s2)));
  CHECK(homogeneous_dimension(s2) == 22);
}
