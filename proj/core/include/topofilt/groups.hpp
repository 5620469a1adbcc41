#pragma once

// The homology group of a filtration (direct sum of step kernels), birth
// labels via adapted bases along image chains, noise and persistent
// quotient groups, barcodes, and filtration-to-filtration maps.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topofilt/complex.hpp"
#include "topofilt/homology.hpp"

namespace topofilt {

struct SlotGenerator {
  int dim = 0;
  std::size_t slot = 0;         // 1-based step whose kernel holds the class
  std::size_t birth = 0;        // least b with the class in im i^{b,slot}
  std::size_t death = 0;        // slot + 1
  std::size_t persistence = 0;  // death - birth
  std::vector<Scalar> class_coords;  // in the basis of H_dim(K^slot)
  std::vector<Scalar> cycle;         // chain over the slot's dim-cells
};

struct FiltrationHomology {
  Scalar p = 2;
  std::size_t steps = 0;
  int max_dim = -1;
  std::vector<std::vector<HomologyBasis>> bases;      // [step-1][dim]
  std::vector<std::vector<FieldMatrix>> step_maps;    // [k-1][dim]: H(K^k)->H(K^{k+1})
  std::vector<SlotGenerator> generators;              // all slots and dims
  std::vector<std::vector<std::size_t>> betti_per_step;

  std::size_t rank(int dim) const;
  std::size_t betti(std::size_t step, int dim) const;
};

FiltrationHomology filtration_homology(const Filtration& F);

// Composite induced map H(K^n) -> H(K^m); m = steps+1 means the appended
// zero map.
FieldMatrix composite_map(const FiltrationHomology& fh, std::size_t n, std::size_t m,
                          int dim);

// Least p with the composite i^{n,n+p} killing x; throws on x = 0.
std::size_t persistence_of(const FiltrationHomology& fh, std::size_t n, int dim,
                           const std::vector<Scalar>& x);

// Classes of persistence < p: the kernel of the composite to step
// min(n+p-1, steps+1). Subspace coordinates live in the basis of H(K^n).
Subspace noise_group_of_complex(const FiltrationHomology& fh, std::size_t n,
                                std::size_t p, int dim);

struct QuotientRanks {
  std::size_t rank = 0;        // rank H / N^p
  std::size_t noise_rank = 0;  // dim N^p
};
QuotientRanks persistent_group_of_complex(const FiltrationHomology& fh, std::size_t n,
                                          std::size_t p, int dim);

// Per (slot, dim): the span of the slot-kernel generators of persistence
// < p. Ranks are canonical; the spanning set is basis-dependent.
std::map<std::pair<std::size_t, int>, Subspace> noise_group_of_filtration(
    const FiltrationHomology& fh, std::size_t p);

struct PersistentGroupReport {
  std::size_t p = 0;
  std::map<int, std::size_t> rank_H;
  std::map<int, std::size_t> rank_noise;
  std::map<int, std::size_t> rank_persistent;
  std::vector<SlotGenerator> survivors;  // persistence >= p
};
PersistentGroupReport persistent_group_of_filtration(const FiltrationHomology& fh,
                                                     std::size_t p);

struct DiagramPoint {
  int dim = 0;
  std::size_t birth_index = 0;
  std::size_t death_index = 0;  // steps+1 for classes alive in the last step
  double birth_param = 0;
  double death_param = 0;
  bool death_finite = true;  // false: at-infinity marker (parameter form)
};

struct PersistenceDiagram {
  std::size_t steps = 0;
  bool has_params = false;
  std::vector<DiagramPoint> points;
};

PersistenceDiagram barcode(const FiltrationHomology& fh,
                           const std::vector<double>& param_values = {});

enum class Measure { diff, ratio };
// diff: death - birth; ratio: death / birth (scale independent). An
// at-infinity death yields infinity.
double persistence_measure(const DiagramPoint& pt, Measure mode);

// A dimension-preserving cellular map given on cell ids.
using CellMap = std::map<std::string, std::string>;

struct FiltrationMapSlot {
  std::size_t slot = 0;
  int dim = 0;
  FieldMatrix matrix;  // target slot kernel coords x source slot kernel coords
};
std::vector<FiltrationMapSlot> filtration_map(const Filtration& F, const Filtration& G,
                                              const CellMap& f);

}  // namespace topofilt
