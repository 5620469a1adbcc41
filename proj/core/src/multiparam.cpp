#include "topofilt/multiparam.hpp"

#include <algorithm>
#include <stdexcept>

namespace topofilt {

namespace {

// Chain map of the inclusion between two grid complexes, by cell id.
FieldMatrix grid_chain_map(const CellComplex& src, const CellComplex& tgt, int dim) {
  FieldMatrix M(tgt.size(dim), src.size(dim), src.field());
  for (std::size_t j = 0; j < src.size(dim); ++j) {
    auto pos = tgt.find(src.cell(dim, j).id);
    if (!pos)
      throw std::invalid_argument("bifiltration not nested at " + src.cell(dim, j).id);
    M.at(pos->second, j) = 1;
  }
  return M;
}

void check_subset(const CellComplex& a, const CellComplex& b, const std::string& where,
                  std::vector<std::string>& violations) {
  for (int d = 0; d <= a.top_dim(); ++d)
    for (std::size_t i = 0; i < a.size(d); ++i) {
      const Cell& c = a.cell(d, i);
      auto pos = b.find(c.id);
      if (!pos) {
        violations.push_back(where + ": cell " + c.id + " not carried forward");
      } else {
        const Cell& c2 = b.cell(pos->first, pos->second);
        if (c2.dim != c.dim || c2.faces != c.faces)
          violations.push_back(where + ": cell " + c.id + " changes identity");
      }
    }
}

}  // namespace

std::vector<std::string> validate(const Bifiltration& BF) {
  std::vector<std::string> violations;
  if (BF.grid.size() != BF.s1 * BF.s2) {
    violations.push_back("grid size does not match s1*s2");
    return violations;
  }
  for (std::size_t n = 1; n <= BF.s1; ++n)
    for (std::size_t m = 1; m <= BF.s2; ++m) {
      for (const auto& v : validate(BF.at(n, m)))
        violations.push_back("slot (" + std::to_string(n) + "," + std::to_string(m) +
                             "): " + v);
      if (n < BF.s1)
        check_subset(BF.at(n, m), BF.at(n + 1, m),
                     "(" + std::to_string(n) + "," + std::to_string(m) + ")->right",
                     violations);
      if (m < BF.s2)
        check_subset(BF.at(n, m), BF.at(n, m + 1),
                     "(" + std::to_string(n) + "," + std::to_string(m) + ")->up",
                     violations);
    }
  return violations;
}

FieldMatrix bi_inclusion_chain_map(const Bifiltration& BF, std::size_t n1,
                                   std::size_t m1, std::size_t n2, std::size_t m2,
                                   int dim) {
  if (n1 < 1 || m1 < 1 || n2 < n1 || m2 < m1 || n2 > BF.s1 || m2 > BF.s2)
    throw std::invalid_argument("bi_inclusion_chain_map: index out of range");
  return grid_chain_map(BF.at(n1, m1), BF.at(n2, m2), dim);
}

int max_top_dim(const Bifiltration& BF) {
  int d = -1;
  for (const auto& K : BF.grid) d = std::max(d, K.top_dim());
  return d;
}

BifiltrationHomology bifiltration_homology(const Bifiltration& BF) {
  BifiltrationHomology bh;
  bh.s1 = BF.s1;
  bh.s2 = BF.s2;
  if (BF.grid.empty()) return bh;
  bh.p = BF.grid.front().field();
  bh.max_dim = std::max(max_top_dim(BF), 0);

  for (const auto& K : BF.grid) bh.bases.push_back(homology_bases(K, bh.max_dim));

  bh.right_maps.resize(BF.grid.size());
  bh.up_maps.resize(BF.grid.size());
  auto idx = [&](std::size_t n, std::size_t m) { return (n - 1) * bh.s2 + (m - 1); };
  for (std::size_t n = 1; n <= bh.s1; ++n)
    for (std::size_t m = 1; m <= bh.s2; ++m)
      for (int d = 0; d <= bh.max_dim; ++d) {
        if (n < bh.s1)
          bh.right_maps[idx(n, m)].push_back(induced_on_homology(
              bi_inclusion_chain_map(BF, n, m, n + 1, m, d),
              boundary_matrix(BF.at(n + 1, m), d + 1), bh.bases[idx(n, m)][d],
              bh.bases[idx(n + 1, m)][d]));
        if (m < bh.s2)
          bh.up_maps[idx(n, m)].push_back(induced_on_homology(
              bi_inclusion_chain_map(BF, n, m, n, m + 1, d),
              boundary_matrix(BF.at(n, m + 1), d + 1), bh.bases[idx(n, m)][d],
              bh.bases[idx(n, m + 1)][d]));
      }

  for (int d = 0; d <= bh.max_dim; ++d) bh.total_rank[d] = 0;
  for (std::size_t n = 1; n <= bh.s1; ++n)
    for (std::size_t m = 1; m <= bh.s2; ++m)
      for (int d = 0; d <= bh.max_dim; ++d) {
        const std::size_t betti = bh.bases[idx(n, m)][d].betti();
        Subspace ker_right = n < bh.s1 ? kernel_basis(bh.right_maps[idx(n, m)][d])
                                       : Subspace::full(betti, bh.p);
        Subspace ker_up = m < bh.s2 ? kernel_basis(bh.up_maps[idx(n, m)][d])
                                    : Subspace::full(betti, bh.p);
        Subspace slot = intersect(ker_right, ker_up);
        bh.total_rank[d] += slot.dim();
        bh.slots[{n, m, d}] = std::move(slot);
      }
  return bh;
}

FieldMatrix row_composite(const BifiltrationHomology& bh, std::size_t n,
                          std::size_t n2, std::size_t m, int dim) {
  if (n < 1 || n > bh.s1 || n2 < n || n2 > bh.s1 + 1 || m < 1 || m > bh.s2)
    throw std::invalid_argument("row_composite: index out of range");
  auto idx = [&](std::size_t a, std::size_t b) { return (a - 1) * bh.s2 + (b - 1); };
  const std::size_t betti = bh.bases[idx(n, m)][dim].betti();
  if (n2 == bh.s1 + 1) return FieldMatrix(0, betti, bh.p);
  FieldMatrix acc = FieldMatrix::identity(betti, bh.p);
  for (std::size_t k = n; k < n2; ++k) acc = multiply(bh.right_maps[idx(k, m)][dim], acc);
  return acc;
}

FieldMatrix col_composite(const BifiltrationHomology& bh, std::size_t n,
                          std::size_t m, std::size_t m2, int dim) {
  if (m < 1 || m > bh.s2 || m2 < m || m2 > bh.s2 + 1 || n < 1 || n > bh.s1)
    throw std::invalid_argument("col_composite: index out of range");
  auto idx = [&](std::size_t a, std::size_t b) { return (a - 1) * bh.s2 + (b - 1); };
  const std::size_t betti = bh.bases[idx(n, m)][dim].betti();
  if (m2 == bh.s2 + 1) return FieldMatrix(0, betti, bh.p);
  FieldMatrix acc = FieldMatrix::identity(betti, bh.p);
  for (std::size_t k = m; k < m2; ++k) acc = multiply(bh.up_maps[idx(n, k)][dim], acc);
  return acc;
}

std::pair<std::size_t, std::size_t> bipersistence_region(
    const BifiltrationHomology& bh, std::size_t n, std::size_t m, int dim,
    const std::vector<Scalar>& x) {
  bool zero = std::all_of(x.begin(), x.end(), [](Scalar c) { return c == 0; });
  if (zero)
    throw std::invalid_argument("bipersistence_region: zero class rejected");

  auto idx = [&](std::size_t a, std::size_t b) { return (a - 1) * bh.s2 + (b - 1); };
  auto is_zero = [](const std::vector<Scalar>& v) {
    return std::all_of(v.begin(), v.end(), [](Scalar c) { return c == 0; });
  };

  std::size_t p = bh.s1 + 1 - n;  // appended zero guarantees death
  std::vector<Scalar> y = x;
  for (std::size_t k = n; k < bh.s1; ++k) {
    y = apply_matrix(bh.right_maps[idx(k, m)][dim], y);
    if (is_zero(y)) {
      p = k + 1 - n;
      break;
    }
  }
  std::size_t q = bh.s2 + 1 - m;
  y = x;
  for (std::size_t k = m; k < bh.s2; ++k) {
    y = apply_matrix(bh.up_maps[idx(n, k)][dim], y);
    if (is_zero(y)) {
      q = k + 1 - m;
      break;
    }
  }
  return {p, q};
}

BipersistentRanks persistent_group_of_bifiltration(const BifiltrationHomology& bh,
                                                   std::size_t p, std::size_t q) {
  if (p < 1 || q < 1)
    throw std::invalid_argument("persistent_group_of_bifiltration: p, q >= 1 required");
  BipersistentRanks out;
  for (int d = 0; d <= bh.max_dim; ++d) {
    out.rank_H[d] = 0;
    out.rank_noise[d] = 0;
    out.rank_persistent[d] = 0;
  }
  for (std::size_t n = 1; n <= bh.s1; ++n)
    for (std::size_t m = 1; m <= bh.s2; ++m)
      for (int d = 0; d <= bh.max_dim; ++d) {
        const Subspace& slot = bh.slots.at({n, m, d});
        out.rank_H[d] += slot.dim();
        if (slot.dim() == 0) continue;
        std::size_t persistent = 0;
        if (n + 1 >= p + 1 && m + 1 >= q + 1) {
          const std::size_t n0 = n + 1 - p, m0 = m + 1 - q;
          // image of the commuting square composite from (n0, m0): go right
          // along row m0, then up along column n.
          FieldMatrix to_right = row_composite(bh, n0, n, m0, d);
          FieldMatrix up = col_composite(bh, n, m0, m, d);
          Subspace image = image_basis(multiply(up, to_right));
          persistent = intersect(slot, image).dim();
        }
        out.rank_persistent[d] += persistent;
        out.rank_noise[d] += slot.dim() - persistent;
      }
  return out;
}

}  // namespace topofilt
