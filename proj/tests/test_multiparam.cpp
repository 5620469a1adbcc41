#include <doctest.h>

#include <stdexcept>

#include <map>
#include <random>

#include "helpers.hpp"
#include "topofilt/groups.hpp"
#include "topofilt/multiparam.hpp"

using namespace topofilt;
using namespace testutil;

namespace {

Bifiltration row_constant(const Filtration& F, std::size_t s2) {
  Bifiltration BF;
  BF.s1 = F.step_count();
  BF.s2 = s2;
  for (std::size_t n = 0; n < BF.s1; ++n)
    for (std::size_t m = 0; m < s2; ++m) BF.grid.push_back(F.steps[n]);
  return BF;
}

std::map<int, std::size_t> slot_ranks_at(const BifiltrationHomology& bh,
                                         std::size_t n, std::size_t m) {
  std::map<int, std::size_t> out;
  for (const auto& [key, space] : bh.slots) {
    auto [kn, km, d] = key;
    if (kn == n && km == m) out[d] += space.dim();
  }
  return out;
}

}  // namespace

TEST_CASE("constant grid concentrates everything in the far corner") {
  Bifiltration BF = row_constant(constant_filtration(circle4(), 2), 2);
  REQUIRE(validate(BF).empty());
  BifiltrationHomology bh = bifiltration_homology(BF);

  for (const auto& [key, space] : bh.slots) {
    auto [n, m, d] = key;
    if (n == 2 && m == 2)
      continue;
    else
      CHECK(space.dim() == 0);
  }
  CHECK(slot_ranks_at(bh, 2, 2)[0] == 1);
  CHECK(slot_ranks_at(bh, 2, 2)[1] == 1);
  CHECK(bh.total_rank.at(0) == 1);
  CHECK(bh.total_rank.at(1) == 1);
}

TEST_CASE("row-constant grids reduce to one parameter") {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 25; ++trial) {
    Filtration F = random_filtration(rng, 4, 6);
    std::size_t s2 = 1 + trial % 3;
    Bifiltration BF = row_constant(F, s2);
    REQUIRE(validate(BF).empty());
    BifiltrationHomology bh = bifiltration_homology(BF);
    FiltrationHomology fh = filtration_homology(F);

    // Identity columns push every slot group to the last column.
    for (const auto& [key, space] : bh.slots) {
      auto [n, m, d] = key;
      if (m != s2) CHECK(space.dim() == 0);
    }
    for (std::size_t n = 1; n <= fh.steps; ++n) {
      auto ranks = slot_ranks_at(bh, n, s2);
      for (int d = 0; d <= fh.max_dim; ++d) {
        std::size_t expect = 0;
        for (const auto& g : fh.generators)
          if (g.dim == d && g.slot == n) ++expect;
        CHECK((ranks.count(d) ? ranks[d] : 0) == expect);
      }
    }

    // Corner pairs: the second coordinate saturates the column count.
    for (const auto& [key, space] : bh.slots) {
      auto [n, m, d] = key;
      for (const auto& x : space.basis) {
        auto [cp, cq] = bipersistence_region(bh, n, m, d, x);
        CHECK(cq == s2 + 1 - m);
      }
    }

    // (p, q)-persistent ranks with q saturated equal the 1-parameter H^p.
    for (std::size_t p = 1; p <= fh.steps + 1; ++p) {
      BipersistentRanks br = persistent_group_of_bifiltration(bh, p, s2);
      PersistentGroupReport rep = persistent_group_of_filtration(fh, p);
      for (int d = 0; d <= fh.max_dim; ++d) {
        std::size_t got = br.rank_persistent.count(d) ? br.rank_persistent.at(d) : 0;
        CHECK(got == rep.rank_persistent.at(d));
      }
    }
  }
}

TEST_CASE("persistent bifiltration ranks: edge cases and monotonicity") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 15; ++trial) {
    Filtration F = random_filtration(rng, 3, 6);
    Bifiltration BF = row_constant(F, 2);
    BifiltrationHomology bh = bifiltration_homology(BF);

    BipersistentRanks all = persistent_group_of_bifiltration(bh, 1, 1);
    for (const auto& [d, r] : all.rank_persistent) CHECK(r == bh.total_rank.at(d));
    for (const auto& [d, r] : all.rank_noise) CHECK(r == 0);

    BipersistentRanks none =
        persistent_group_of_bifiltration(bh, BF.s1 + 1, BF.s2 + 1);
    for (const auto& [d, r] : none.rank_persistent) CHECK(r == 0);

    for (std::size_t p = 1; p <= BF.s1; ++p)
      for (std::size_t q = 1; q <= BF.s2; ++q) {
        auto here = persistent_group_of_bifiltration(bh, p, q);
        auto right = persistent_group_of_bifiltration(bh, p + 1, q);
        auto up = persistent_group_of_bifiltration(bh, p, q + 1);
        for (const auto& [d, r] : here.rank_persistent) {
          CHECK(right.rank_persistent.at(d) <= r);
          CHECK(up.rank_persistent.at(d) <= r);
        }
      }
  }
}

TEST_CASE("corner pairs on a genuinely two-parameter grid") {
  // 2 x 2 grid: a circle appears at (1,1), gets filled rightward at (2,*).
  CellComplex circle = circle4();
  CellComplex disk = filled_square();
  Bifiltration BF;
  BF.s1 = BF.s2 = 2;
  BF.grid = {circle, circle, disk, disk};
  REQUIRE(validate(BF).empty());
  BifiltrationHomology bh = bifiltration_homology(BF);

  // The 1-class at (1,1) dies moving right (filled) and survives upward
  // until the appended zero.
  auto key = std::make_tuple<std::size_t, std::size_t, int>(1, 2, 1);
  REQUIRE(bh.slots.count(key));
  const Subspace& slot = bh.slots.at(key);
  REQUIRE(slot.dim() == 1);
  auto [p, q] = bipersistence_region(bh, 1, 2, 1, slot.basis[0]);
  CHECK(p == 1);
  CHECK(q == 1);

  CHECK_THROWS_AS((void)bipersistence_region(bh, 1, 2, 1, {0}),
                  std::invalid_argument);
}

TEST_CASE("bifiltration validation") {
  CellComplex a;
  a.add_cell({"x", 0, {}});
  CellComplex b;
  b.add_cell({"y", 0, {}});
  Bifiltration bad;
  bad.s1 = bad.s2 = 2;
  bad.grid = {a, a, b, b};  // upward step drops x
  CHECK_FALSE(validate(bad).empty());
}
