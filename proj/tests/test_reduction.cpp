#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>
#include <random>

#include "helpers.hpp"
#include "topofilt/groups.hpp"
#include "topofilt/reduction.hpp"

using namespace topofilt;
using namespace testutil;

namespace {

std::vector<IndexInterval> slot_intervals(const FiltrationHomology& fh) {
  std::vector<IndexInterval> out;
  for (const auto& g : fh.generators) out.push_back({g.dim, g.birth, g.death});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("column reduction on the fixture") {
  Filtration F = fig1_filtration();
  std::vector<IndexInterval> bars = reduction_barcode(F);
  std::vector<IndexInterval> expected{{0, 1, 4}, {0, 1, 4}, {0, 2, 4},
                                      {1, 1, 2}, {1, 1, 4}, {1, 3, 4}};
  std::sort(expected.begin(), expected.end());
  CHECK(bars == expected);
  CHECK(bars == slot_intervals(filtration_homology(F)));
}

TEST_CASE("degenerate filtrations") {
  CHECK(reduction_barcode(Filtration{}).empty());

  CellComplex pt;
  pt.add_cell({"p", 0, {}});
  Filtration C = constant_filtration(pt, 3);
  std::vector<IndexInterval> bars = reduction_barcode(C);
  REQUIRE(bars.size() == 1);
  CHECK(bars[0] == IndexInterval{0, 1, 4});
}

TEST_CASE("two engines agree on random filtrations") {
  std::mt19937 rng(73);
  for (int trial = 0; trial < 120; ++trial) {
    Scalar field = trial % 4 == 0 ? 5 : 2;
    Filtration F = random_filtration(rng, 6, 7, field);
    FiltrationHomology fh = filtration_homology(F);
    std::vector<IndexInterval> oracle = reduction_barcode(F);
    CHECK(slot_intervals(fh) == oracle);

    // Per-dimension counts, and persistent ranks against lifespans.
    std::map<int, std::size_t> per_dim;
    for (const auto& iv : oracle) ++per_dim[iv.dim];
    for (int d = 0; d <= fh.max_dim; ++d)
      CHECK(fh.rank(d) == (per_dim.count(d) ? per_dim[d] : 0));

    for (std::size_t p = 1; p <= fh.steps + 1; ++p) {
      PersistentGroupReport rep = persistent_group_of_filtration(fh, p);
      for (int d = 0; d <= fh.max_dim; ++d) {
        std::size_t survivors = 0;
        for (const auto& iv : oracle)
          if (iv.dim == d && iv.death - iv.birth >= p) ++survivors;
        CHECK(rep.rank_persistent.at(d) == survivors);
      }
    }
  }
}
