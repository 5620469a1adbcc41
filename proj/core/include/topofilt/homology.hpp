#pragma once

// Homology bases with explicit cycle representatives, inclusion-induced
// maps in those bases, and the mapping cone of a consecutive inclusion.

#include <vector>

#include "topofilt/complex.hpp"
#include "topofilt/field.hpp"

namespace topofilt {

struct HomologyBasis {
  int dim = 0;
  Scalar p = 2;
  std::size_t n_cells = 0;                     // k-cells of the complex
  std::vector<std::vector<Scalar>> generators;  // cycle vectors, length n_cells

  std::size_t betti() const { return generators.size(); }
};

// Deterministic basis: kernel of d_k reduced modulo the image of d_{k+1}.
HomologyBasis homology_basis(const CellComplex& K, int k);

std::vector<HomologyBasis> homology_bases(const CellComplex& K, int up_to_dim);

struct InducedMap {
  FieldMatrix matrix;  // target betti x source betti
};

// Classes of the pushed source cycles in the target basis, solved modulo
// boundaries. A pushed cycle that cannot be expressed violates an internal
// invariant and throws logic_error.
InducedMap induced_map(const Filtration& F, std::size_t n, std::size_t m, int k,
                       const HomologyBasis& src, const HomologyBasis& tgt);

// Same computation against an explicit chain map (used by the bifiltration
// and by filtration-to-filtration maps).
FieldMatrix induced_on_homology(const FieldMatrix& chain_map,
                                const FieldMatrix& target_boundary_up,
                                const HomologyBasis& src, const HomologyBasis& tgt);

InducedMap compose(const std::vector<InducedMap>& maps);

// Chain complex with explicit boundary matrices; degree-k chains of the
// cone of K^n -> K^{n+1} are C_{k-1}(K^n) (+) C_k(K^{n+1}).
struct ChainComplex {
  Scalar p = 2;
  std::vector<std::size_t> dims;       // chain space dimension per degree
  std::vector<FieldMatrix> boundary;   // boundary[k]: degree k -> k-1; boundary[0] = 0
};

std::vector<std::string> validate(const ChainComplex& C);
std::vector<std::size_t> chain_betti(const ChainComplex& C);

ChainComplex mapping_cone(const Filtration& F, std::size_t n);

}  // namespace topofilt
