#pragma once

// Independent barcode engine: standard single-matrix column reduction over
// the whole filtration. Exists as a cross-check for the slot-kernel
// pipeline; enabled by the CLI --verify flag and used throughout the tests.

#include <vector>

#include "topofilt/complex.hpp"

namespace topofilt {

struct IndexInterval {
  int dim = 0;
  std::size_t birth = 0;
  std::size_t death = 0;  // steps+1 when the class survives to the end

  auto operator<=>(const IndexInterval&) const = default;
};

// Nonzero-length intervals only, sorted, one per homology class.
std::vector<IndexInterval> reduction_barcode(const Filtration& F);

}  // namespace topofilt
