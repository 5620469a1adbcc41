#pragma once

// Two-parameter filtrations: slot groups as intersections of the rightward
// and upward kernels, corner-pair persistence, and (p,q)-persistent ranks.

#include <map>

#include "topofilt/groups.hpp"
#include "topofilt/homology.hpp"
#include "topofilt/multiparam_types.hpp"

namespace topofilt {

struct BifiltrationHomology {
  Scalar p = 2;
  std::size_t s1 = 0, s2 = 0;
  int max_dim = -1;
  // bases[(n-1)*s2 + (m-1)][dim]
  std::vector<std::vector<HomologyBasis>> bases;
  // right_maps[(n-1)*s2 + (m-1)][dim]: H(K^{nm}) -> H(K^{n+1,m}), n < s1
  std::vector<std::vector<FieldMatrix>> right_maps;
  // up_maps[(n-1)*s2 + (m-1)][dim]: H(K^{nm}) -> H(K^{n,m+1}), m < s2
  std::vector<std::vector<FieldMatrix>> up_maps;
  // slot (n,m,dim) -> intersection of the two kernels (coords in H(K^{nm}))
  std::map<std::tuple<std::size_t, std::size_t, int>, Subspace> slots;
  std::map<int, std::size_t> total_rank;

  const HomologyBasis& basis(std::size_t n, std::size_t m, int dim) const {
    return bases[(n - 1) * s2 + (m - 1)][dim];
  }
};

BifiltrationHomology bifiltration_homology(const Bifiltration& BF);

// Composite along a row (fixed m) from n to n2; n2 = s1+1 means the
// appended zero. Likewise along a column.
FieldMatrix row_composite(const BifiltrationHomology& bh, std::size_t n,
                          std::size_t n2, std::size_t m, int dim);
FieldMatrix col_composite(const BifiltrationHomology& bh, std::size_t n,
                          std::size_t m, std::size_t m2, int dim);

// Minimal (p, q) corner with rightward and upward death of x; the full
// satisfying region is everything weakly above and to the right of it.
std::pair<std::size_t, std::size_t> bipersistence_region(
    const BifiltrationHomology& bh, std::size_t n, std::size_t m, int dim,
    const std::vector<Scalar>& x);

struct BipersistentRanks {
  std::map<int, std::size_t> rank_H;
  std::map<int, std::size_t> rank_noise;
  std::map<int, std::size_t> rank_persistent;
};
// Slot (n,m) persistent part: slot group meets the image from
// (n+1-p, m+1-q); out-of-range source indices contribute zero.
BipersistentRanks persistent_group_of_bifiltration(const BifiltrationHomology& bh,
                                                   std::size_t p, std::size_t q);

}  // namespace topofilt
