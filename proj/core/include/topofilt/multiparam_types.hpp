#pragma once

#include <vector>

#include "topofilt/complex.hpp"

namespace topofilt {

// An s1 x s2 grid of complexes monotone in both indices with stable cell
// ids; the inclusion square commutes at chain level because inclusions are
// identity on ids.
struct Bifiltration {
  std::size_t s1 = 0;  // rows: first parameter
  std::size_t s2 = 0;  // columns: second parameter
  std::vector<CellComplex> grid;  // (n,m) at (n-1)*s2 + (m-1), 1-based n,m
  std::vector<double> row_params;
  std::vector<double> col_params;

  const CellComplex& at(std::size_t n, std::size_t m) const {
    return grid[(n - 1) * s2 + (m - 1)];
  }
  CellComplex& at(std::size_t n, std::size_t m) { return grid[(n - 1) * s2 + (m - 1)]; }
};

std::vector<std::string> validate(const Bifiltration& BF);

FieldMatrix bi_inclusion_chain_map(const Bifiltration& BF, std::size_t n1,
                                   std::size_t m1, std::size_t n2, std::size_t m2,
                                   int dim);

int max_top_dim(const Bifiltration& BF);

}  // namespace topofilt
