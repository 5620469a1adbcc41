#pragma once

// Cell complexes with incidence-signed face lists, their boundary matrices,
// and filtrations as nested complexes with stable cell identities.
// Inclusions between filtration steps are identity on cell ids, so chain
// maps are 0/1 matrices assembled by id lookup.

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "topofilt/field.hpp"

namespace topofilt {

struct Cell {
  std::string id;
  int dim = 0;
  std::vector<std::pair<std::string, Scalar>> faces;  // (face id, incidence)
};

class CellComplex {
 public:
  explicit CellComplex(Scalar prime = 2) : p_(prime) {}

  // Faces must already be present; canonical order per dimension is
  // insertion order.
  void add_cell(Cell cell);
  bool has_cell(const std::string& id) const { return index_.count(id) > 0; }
  std::optional<std::pair<int, std::size_t>> find(const std::string& id) const;

  Scalar field() const { return p_; }
  int top_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t size(int dim) const;
  std::size_t total_cells() const;
  const Cell& cell(int dim, std::size_t i) const { return by_dim_[dim][i]; }
  const std::vector<Cell>& cells(int dim) const { return by_dim_[dim]; }

 private:
  Scalar p_;
  std::vector<std::vector<Cell>> by_dim_;
  std::unordered_map<std::string, std::pair<int, std::size_t>> index_;
};

// Rows index (k-1)-cells, columns index k-cells, canonical order.
FieldMatrix boundary_matrix(const CellComplex& K, int k);

// Face closure, dimension consistency and boundary-squared-zero in every
// degree; all violations are reported.
std::vector<std::string> validate(const CellComplex& K);

struct Filtration {
  std::vector<CellComplex> steps;            // K^1 ... K^s
  std::vector<double> param_values;          // optional, one per step

  std::size_t step_count() const { return steps.size(); }
  bool has_params() const { return !param_values.empty(); }
};

std::vector<std::string> validate(const Filtration& F);

// Chain map of the inclusion K^n -> K^m in degree dim; n, m are 1-based.
FieldMatrix inclusion_chain_map(const Filtration& F, std::size_t n, std::size_t m,
                                int dim);

int max_top_dim(const Filtration& F);

}  // namespace topofilt
