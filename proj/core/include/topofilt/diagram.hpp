#pragma once

// Bottleneck distance between persistence diagrams and the empirical
// stability report for image pairs.

#include <vector>

#include "topofilt/groups.hpp"
#include "topofilt/image.hpp"

namespace topofilt {

struct MatchPair {
  // -1 stands for the diagonal on either side.
  int left = -1;   // index into D1's points of the requested dimension
  int right = -1;  // index into D2's points of the requested dimension
};

struct Matching {
  std::vector<MatchPair> pairs;
  double cost = 0;
};

// Exact: binary search over the finite candidate cost set with a bipartite
// matching feasibility test. At-infinity points must match among
// themselves at cost |birth difference|; mismatched at-infinity counts
// give an infinite distance.
double bottleneck_distance(const PersistenceDiagram& D1, const PersistenceDiagram& D2,
                           int dim);
Matching bottleneck_matching(const PersistenceDiagram& D1,
                             const PersistenceDiagram& D2, int dim);

struct StabilityReport {
  PersistenceDiagram diagram_f;
  PersistenceDiagram diagram_g;
  std::vector<double> distance_per_dim;  // index = dimension
  double sup_norm = 0;
  bool inequality_holds = false;
  // D2 report column: per-point persistence values (y - x) of both diagrams.
  std::vector<double> persistence_f;
  std::vector<double> persistence_g;
};

// Diagrams on a shared integer threshold grid covering both images; checks
// d_B(D(f), D(g)) <= ||f - g||_inf in every dimension.
StabilityReport stability_report(const GrayscaleImage& f, const GrayscaleImage& g,
                                 std::vector<int> thresholds = {});

}  // namespace topofilt
