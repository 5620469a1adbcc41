#include "topofilt/reduction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace topofilt {

namespace {

// Sparse column over GF(p): row index -> coefficient, kept sorted.
using SparseCol = std::map<std::size_t, Scalar>;

void add_scaled(SparseCol& dst, const SparseCol& src, Scalar factor, Scalar p) {
  for (const auto& [row, c] : src) {
    Scalar v = fp_add(dst.count(row) ? dst[row] : 0, fp_mul(factor, c, p), p);
    if (v == 0)
      dst.erase(row);
    else
      dst[row] = v;
  }
}

}  // namespace

std::vector<IndexInterval> reduction_barcode(const Filtration& F) {
  const std::size_t s = F.step_count();
  if (s == 0) return {};
  const Scalar p = F.steps.front().field();
  const CellComplex& last = F.steps[s - 1];

  // Global cell order: (first appearance step, dim, canonical index in the
  // final complex). Faces never come after cofaces under this order.
  std::unordered_map<std::string, std::size_t> first_step;
  for (std::size_t n = s; n >= 1; --n) {
    const CellComplex& K = F.steps[n - 1];
    for (int d = 0; d <= K.top_dim(); ++d)
      for (std::size_t i = 0; i < K.size(d); ++i) first_step[K.cell(d, i).id] = n;
  }

  struct Entry {
    std::size_t step;
    int dim;
    std::size_t index;
    const Cell* cell;
  };
  std::vector<Entry> order;
  for (int d = 0; d <= last.top_dim(); ++d)
    for (std::size_t i = 0; i < last.size(d); ++i) {
      const Cell& c = last.cell(d, i);
      order.push_back({first_step.at(c.id), d, i, &c});
    }
  std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
    if (a.step != b.step) return a.step < b.step;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.index < b.index;
  });

  std::unordered_map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i].cell->id] = i;

  std::vector<SparseCol> columns(order.size());
  for (std::size_t j = 0; j < order.size(); ++j)
    for (const auto& [fid, coeff] : order[j].cell->faces) {
      Scalar c = coeff % p;
      if (c != 0) columns[j][position.at(fid)] = c;
    }

  // Standard reduction: kill matching lows left to right.
  std::vector<std::size_t> low_owner(order.size(), order.size());
  std::vector<bool> creator(order.size(), false);
  std::vector<IndexInterval> intervals;
  for (std::size_t j = 0; j < order.size(); ++j) {
    SparseCol& col = columns[j];
    while (!col.empty()) {
      std::size_t low = col.rbegin()->first;
      std::size_t owner = low_owner[low];
      if (owner == order.size()) break;
      Scalar factor =
          fp_neg(fp_mul(col.rbegin()->second,
                        fp_inv(columns[owner].rbegin()->second, p), p),
                 p);
      add_scaled(col, columns[owner], factor, p);
    }
    if (col.empty()) {
      creator[j] = true;
    } else {
      std::size_t low = col.rbegin()->first;
      low_owner[low] = j;
      creator[low] = false;  // the paired creator dies here
      std::size_t birth = order[low].step;
      std::size_t death = order[j].step;
      if (birth < death) intervals.push_back({order[low].dim, birth, death});
    }
  }
  for (std::size_t j = 0; j < order.size(); ++j)
    if (creator[j]) intervals.push_back({order[j].dim, order[j].step, s + 1});

  std::sort(intervals.begin(), intervals.end());
  return intervals;
}

}  // namespace topofilt
