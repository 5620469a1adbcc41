#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>
#include <random>

#include "helpers.hpp"
#include "topofilt/diagram.hpp"

using namespace topofilt;
using namespace testutil;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

PersistenceDiagram diagram(std::vector<std::pair<double, double>> finite,
                           std::vector<double> infinite_births = {}) {
  PersistenceDiagram D;
  D.has_params = true;
  for (auto [b, d] : finite) D.points.push_back({0, 0, 0, b, d, true});
  for (double b : infinite_births) D.points.push_back({0, 0, 0, b, 0, false});
  return D;
}

PersistenceDiagram random_diagram(std::mt19937& rng, std::size_t max_points) {
  std::uniform_int_distribution<std::size_t> count(0, max_points);
  std::uniform_real_distribution<double> coord(0.0, 5.0);
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = count(rng); i > 0; --i) {
    double b = coord(rng), len = coord(rng) + 0.1;
    pts.push_back({b, b + len});
  }
  return diagram(pts);
}

}  // namespace

TEST_CASE("bottleneck distance on small diagrams") {
  auto D = diagram({{1, 4}, {2, 3}});
  CHECK(bottleneck_distance(D, D, 0) == 0.0);

  CHECK(bottleneck_distance(diagram({{1, 4}}), diagram({}), 0) ==
        doctest::Approx(1.5));
  CHECK(bottleneck_distance(diagram({{1, 4}}), diagram({{2, 4}}), 0) ==
        doctest::Approx(1.0));

  // Short bars are cheaper to drop onto the diagonal than to stretch.
  CHECK(bottleneck_distance(diagram({{0, 1}}), diagram({{10, 11}}), 0) ==
        doctest::Approx(0.5));
}

TEST_CASE("at-infinity points pair by birth") {
  auto A = diagram({}, {1.0, 3.0});
  auto B = diagram({}, {2.0, 3.5});
  CHECK(bottleneck_distance(A, B, 0) == doctest::Approx(1.0));
  CHECK(bottleneck_distance(A, diagram({}, {1.0}), 0) == kInf);
  CHECK(bottleneck_distance(A, diagram({{1, 2}}, {1.0, 3.0}), 0) ==
        doctest::Approx(0.5));
}

TEST_CASE("the reported matching achieves the reported cost") {
  std::mt19937 rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    auto A = random_diagram(rng, 8);
    auto B = random_diagram(rng, 8);
    double d = bottleneck_distance(A, B, 0);
    Matching m = bottleneck_matching(A, B, 0);
    CHECK(m.cost == doctest::Approx(d));

    std::vector<int> used_left(A.points.size(), 0), used_right(B.points.size(), 0);
    double worst = 0;
    for (const auto& pr : m.pairs) {
      double cost = 0;
      if (pr.left >= 0 && pr.right >= 0) {
        const auto& a = A.points[pr.left];
        const auto& b = B.points[pr.right];
        cost = std::max(std::abs(a.birth_param - b.birth_param),
                        std::abs(a.death_param - b.death_param));
      } else if (pr.left >= 0) {
        const auto& a = A.points[pr.left];
        cost = (a.death_param - a.birth_param) / 2;
      } else if (pr.right >= 0) {
        const auto& b = B.points[pr.right];
        cost = (b.death_param - b.birth_param) / 2;
      }
      if (pr.left >= 0) ++used_left[pr.left];
      if (pr.right >= 0) ++used_right[pr.right];
      worst = std::max(worst, cost);
    }
    for (int u : used_left) CHECK(u == 1);
    for (int u : used_right) CHECK(u == 1);
    CHECK(worst == doctest::Approx(d));
  }
}

TEST_CASE("pseudometric behavior on random triples") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 40; ++trial) {
    auto A = random_diagram(rng, 10);
    auto B = random_diagram(rng, 10);
    auto C = random_diagram(rng, 10);
    double ab = bottleneck_distance(A, B, 0);
    double ba = bottleneck_distance(B, A, 0);
    CHECK(ab == doctest::Approx(ba));
    CHECK(ab <= bottleneck_distance(A, C, 0) + bottleneck_distance(C, B, 0) + 1e-9);
    CHECK(bottleneck_distance(A, A, 0) == 0.0);
  }
}

TEST_CASE("stability report for image pairs") {
  std::mt19937 rng(101);
  GrayscaleImage f = random_image(rng, 4, 4, 5);

  StabilityReport self = stability_report(f, f);
  CHECK(self.sup_norm == 0.0);
  CHECK(self.inequality_holds);
  for (double d : self.distance_per_dim) CHECK(d == 0.0);

  GrayscaleImage g = f;
  for (auto& v : g.levels) v += 1;
  StabilityReport shift = stability_report(f, g);
  CHECK(shift.sup_norm == 1.0);
  CHECK(shift.inequality_holds);
  for (double d : shift.distance_per_dim) CHECK(d <= 1.0);

  for (int trial = 0; trial < 25; ++trial) {
    GrayscaleImage a = random_image(rng, 8, 8, 6);
    GrayscaleImage b = a;
    std::uniform_int_distribution<int> bump(-2, 2);
    for (auto& v : b.levels) v = std::max(0, v + bump(rng));
    StabilityReport rep = stability_report(a, b);
    CHECK(rep.inequality_holds);
    CHECK(rep.persistence_f.size() == rep.diagram_f.points.size());
  }
}
