#include <doctest.h>

#include <stdexcept>

#include <random>

#include "helpers.hpp"
#include "topofilt/complex.hpp"

using namespace topofilt;
using namespace testutil;

TEST_CASE("boundary matrix of a filled square") {
  CellComplex K = filled_square();
  FieldMatrix d2 = boundary_matrix(K, 2);
  REQUIRE(d2.rows == 4);
  REQUIRE(d2.cols == 1);
  for (std::size_t i = 0; i < 4; ++i) CHECK(d2.at(i, 0) == 1);

  CHECK(multiply(boundary_matrix(K, 1), d2).is_zero());
  CHECK(boundary_matrix(K, 3).cols == 0);
  CHECK(boundary_matrix(K, 0).rows == 0);
}

TEST_CASE("boundary squared vanishes over odd primes too") {
  CellComplex K = filled_square(5);
  CHECK(multiply(boundary_matrix(K, 1), boundary_matrix(K, 2)).is_zero());
}

TEST_CASE("complex validation") {
  CHECK(validate(CellComplex{}).empty());
  CHECK(validate(filled_square()).empty());

  // A 2-cell listing only three of its four edges breaks del-del = 0.
  CellComplex bad;
  CellComplex good = filled_square();
  for (const auto& c : good.cells(0)) bad.add_cell(c);
  for (const auto& c : good.cells(1)) bad.add_cell(c);
  Cell sq = good.cells(2)[0];
  sq.faces.pop_back();
  bad.add_cell(sq);
  auto violations = validate(bad);
  REQUIRE_FALSE(violations.empty());
  bool named = false;
  for (const auto& v : violations)
    if (v.find(sq.id) != std::string::npos) named = true;
  CHECK(named);
}

TEST_CASE("add_cell rejects malformed input") {
  CellComplex K;
  CHECK_THROWS_AS(K.add_cell({"e", 1, {{"missing", 1}}}), std::invalid_argument);
  K.add_cell({"v", 0, {}});
  CHECK_THROWS_AS(K.add_cell({"v", 0, {}}), std::invalid_argument);
}

TEST_CASE("inclusion chain maps") {
  Filtration F;
  CellComplex K1;
  K1.add_cell({"a", 0, {}});
  CellComplex K2 = K1;
  K2.add_cell({"b", 0, {}});
  F.steps = {K1, K2};

  FieldMatrix self = inclusion_chain_map(F, 1, 1, 0);
  CHECK(self == FieldMatrix::identity(1, 2));
  FieldMatrix up = inclusion_chain_map(F, 1, 2, 0);
  REQUIRE(up.rows == 2);
  REQUIRE(up.cols == 1);
  CHECK(up.at(0, 0) == 1);
  CHECK(up.at(1, 0) == 0);

  Filtration G;
  G.steps = {circle4(), filled_square()};
  CHECK(inclusion_chain_map(G, 1, 2, 1) == FieldMatrix::identity(4, 2));

  CHECK_THROWS_AS((void)inclusion_chain_map(G, 2, 1, 0), std::invalid_argument);
}

TEST_CASE("chain-level functoriality on random filtrations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Filtration F = random_filtration(rng, 4, 6);
    REQUIRE(validate(F).empty());
    std::size_t s = F.step_count();
    for (std::size_t n = 1; n <= s; ++n)
      for (std::size_t k = n; k <= s; ++k)
        for (std::size_t m = k; m <= s; ++m)
          for (int d = 0; d <= max_top_dim(F); ++d)
            CHECK(inclusion_chain_map(F, n, m, d) ==
                  multiply(inclusion_chain_map(F, k, m, d),
                           inclusion_chain_map(F, n, k, d)));
  }
}

TEST_CASE("filtration validation catches broken nesting") {
  CellComplex K1;
  K1.add_cell({"a", 0, {}});
  CellComplex K2;
  K2.add_cell({"b", 0, {}});
  Filtration F;
  F.steps = {K1, K2};
  CHECK_FALSE(validate(F).empty());

  Filtration G;
  G.steps = {K1, K1};
  G.param_values = {2.0, 1.0};
  CHECK_FALSE(validate(G).empty());
  G.param_values = {1.0, 2.0};
  CHECK(validate(G).empty());
}
