#include "topofilt/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace topofilt {

void CellComplex::add_cell(Cell cell) {
  if (cell.dim < 0) throw std::invalid_argument("add_cell: negative dimension");
  if (index_.count(cell.id))
    throw std::invalid_argument("add_cell: duplicate cell id " + cell.id);
  if (cell.dim == 0 && !cell.faces.empty())
    throw std::invalid_argument("add_cell: 0-cell with faces: " + cell.id);
  for (const auto& [fid, coeff] : cell.faces) {
    auto it = index_.find(fid);
    if (it == index_.end())
      throw std::invalid_argument("add_cell: missing face " + fid + " of " + cell.id);
    if (it->second.first != cell.dim - 1)
      throw std::invalid_argument("add_cell: face " + fid + " of " + cell.id +
                                  " has wrong dimension");
    (void)coeff;
  }
  if (static_cast<int>(by_dim_.size()) <= cell.dim) by_dim_.resize(cell.dim + 1);
  index_[cell.id] = {cell.dim, by_dim_[cell.dim].size()};
  by_dim_[cell.dim].push_back(std::move(cell));
}

std::optional<std::pair<int, std::size_t>> CellComplex::find(
    const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CellComplex::size(int dim) const {
  if (dim < 0 || dim > top_dim()) return 0;
  return by_dim_[dim].size();
}

std::size_t CellComplex::total_cells() const {
  std::size_t n = 0;
  for (const auto& cells : by_dim_) n += cells.size();
  return n;
}

FieldMatrix boundary_matrix(const CellComplex& K, int k) {
  FieldMatrix M(K.size(k - 1), K.size(k), K.field());
  if (k < 1 || k > K.top_dim()) return M;
  for (std::size_t j = 0; j < K.size(k); ++j) {
    for (const auto& [fid, coeff] : K.cell(k, j).faces) {
      auto pos = K.find(fid);
      if (!pos) continue;  // validate() reports this
      M.at(pos->second, j) = fp_add(M.at(pos->second, j), coeff % K.field(), K.field());
    }
  }
  return M;
}

std::vector<std::string> validate(const CellComplex& K) {
  std::vector<std::string> violations;
  for (int d = 0; d <= K.top_dim(); ++d) {
    for (std::size_t i = 0; i < K.size(d); ++i) {
      const Cell& c = K.cell(d, i);
      if (c.dim != d)
        violations.push_back("cell " + c.id + ": stored under wrong dimension");
      for (const auto& [fid, coeff] : c.faces) {
        auto pos = K.find(fid);
        if (!pos) {
          violations.push_back("cell " + c.id + ": missing face " + fid);
        } else if (pos->first != d - 1) {
          violations.push_back("cell " + c.id + ": face " + fid +
                               " has dimension " + std::to_string(pos->first));
        }
        (void)coeff;
      }
    }
  }
  if (!violations.empty()) return violations;
  for (int k = 2; k <= K.top_dim(); ++k) {
    FieldMatrix prod = multiply(boundary_matrix(K, k - 1), boundary_matrix(K, k));
    if (prod.is_zero()) continue;
    for (std::size_t j = 0; j < prod.cols; ++j)
      for (std::size_t i = 0; i < prod.rows; ++i)
        if (prod.at(i, j) != 0) {
          violations.push_back("cell " + K.cell(k, j).id +
                               ": boundary of boundary nonzero");
          break;
        }
  }
  return violations;
}

std::vector<std::string> validate(const Filtration& F) {
  std::vector<std::string> violations;
  for (std::size_t n = 0; n < F.steps.size(); ++n) {
    for (const auto& v : validate(F.steps[n]))
      violations.push_back("step " + std::to_string(n + 1) + ": " + v);
  }
  for (std::size_t n = 0; n + 1 < F.steps.size(); ++n) {
    const CellComplex& a = F.steps[n];
    const CellComplex& b = F.steps[n + 1];
    for (int d = 0; d <= a.top_dim(); ++d) {
      for (std::size_t i = 0; i < a.size(d); ++i) {
        const Cell& c = a.cell(d, i);
        auto pos = b.find(c.id);
        if (!pos) {
          violations.push_back("step " + std::to_string(n + 1) + ": cell " + c.id +
                               " absent from step " + std::to_string(n + 2));
          continue;
        }
        const Cell& c2 = b.cell(pos->first, pos->second);
        if (c2.dim != c.dim || c2.faces != c.faces)
          violations.push_back("cell " + c.id + " changes between steps " +
                               std::to_string(n + 1) + " and " + std::to_string(n + 2));
      }
    }
  }
  if (!F.param_values.empty()) {
    if (F.param_values.size() != F.steps.size())
      violations.push_back("param_values count differs from step count");
    for (std::size_t i = 0; i + 1 < F.param_values.size(); ++i)
      if (!(F.param_values[i] < F.param_values[i + 1]))
        violations.push_back("param_values not strictly increasing at position " +
                             std::to_string(i));
  }
  return violations;
}

FieldMatrix inclusion_chain_map(const Filtration& F, std::size_t n, std::size_t m,
                                int dim) {
  if (n < 1 || m < n || m > F.steps.size())
    throw std::invalid_argument("inclusion_chain_map: step index out of range");
  const CellComplex& src = F.steps[n - 1];
  const CellComplex& tgt = F.steps[m - 1];
  FieldMatrix M(tgt.size(dim), src.size(dim), src.field());
  for (std::size_t j = 0; j < src.size(dim); ++j) {
    auto pos = tgt.find(src.cell(dim, j).id);
    if (!pos)
      throw std::invalid_argument("inclusion_chain_map: filtration not nested at " +
                                  src.cell(dim, j).id);
    M.at(pos->second, j) = 1;
  }
  return M;
}

int max_top_dim(const Filtration& F) {
  int d = -1;
  for (const auto& K : F.steps) d = std::max(d, K.top_dim());
  return d;
}

}  // namespace topofilt
