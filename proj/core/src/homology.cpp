#include "topofilt/homology.hpp"

#include <stdexcept>

namespace topofilt {

HomologyBasis homology_basis(const CellComplex& K, int k) {
  HomologyBasis H;
  H.dim = k;
  H.p = K.field();
  H.n_cells = K.size(k);
  if (k < 0 || H.n_cells == 0) return H;

  Subspace cycles = kernel_basis(boundary_matrix(K, k));
  FieldMatrix bnd = boundary_matrix(K, k + 1);

  // Columns: boundary generators first, then cycle basis; cycle columns
  // that become pivots are independent modulo boundaries.
  FieldMatrix aug(H.n_cells, bnd.cols + cycles.dim(), H.p);
  for (std::size_t j = 0; j < bnd.cols; ++j)
    for (std::size_t i = 0; i < H.n_cells; ++i) aug.at(i, j) = bnd.at(i, j);
  for (std::size_t j = 0; j < cycles.dim(); ++j)
    for (std::size_t i = 0; i < H.n_cells; ++i)
      aug.at(i, bnd.cols + j) = cycles.basis[j][i];

  ReducedForm rf = reduce(aug);
  for (std::size_t c : rf.pivots)
    if (c >= bnd.cols) H.generators.push_back(cycles.basis[c - bnd.cols]);
  return H;
}

std::vector<HomologyBasis> homology_bases(const CellComplex& K, int up_to_dim) {
  std::vector<HomologyBasis> out;
  for (int d = 0; d <= up_to_dim; ++d) out.push_back(homology_basis(K, d));
  return out;
}

FieldMatrix induced_on_homology(const FieldMatrix& chain_map,
                                const FieldMatrix& target_boundary_up,
                                const HomologyBasis& src, const HomologyBasis& tgt) {
  const Scalar p = src.p;
  FieldMatrix out(tgt.betti(), src.betti(), p);
  if (src.betti() == 0) return out;

  // [target generators | boundary columns] x = pushed source cycles
  const std::size_t ambient = chain_map.rows;
  FieldMatrix A(ambient, tgt.betti() + target_boundary_up.cols, p);
  for (std::size_t j = 0; j < tgt.betti(); ++j)
    for (std::size_t i = 0; i < ambient; ++i) A.at(i, j) = tgt.generators[j][i];
  for (std::size_t j = 0; j < target_boundary_up.cols; ++j)
    for (std::size_t i = 0; i < ambient; ++i)
      A.at(i, tgt.betti() + j) = target_boundary_up.at(i, j);

  FieldMatrix rhs(ambient, src.betti(), p);
  for (std::size_t j = 0; j < src.betti(); ++j) {
    std::vector<Scalar> pushed = apply_matrix(chain_map, src.generators[j]);
    for (std::size_t i = 0; i < ambient; ++i) rhs.at(i, j) = pushed[i];
  }

  SolveResult res = solve_many(A, rhs);
  for (std::size_t j = 0; j < src.betti(); ++j) {
    if (!res.ok[j])
      throw std::logic_error(
          "induced_on_homology: pushed cycle not expressible in target homology");
    for (std::size_t i = 0; i < tgt.betti(); ++i)
      out.at(i, j) = res.solutions.at(i, j);
  }
  return out;
}

InducedMap induced_map(const Filtration& F, std::size_t n, std::size_t m, int k,
                       const HomologyBasis& src, const HomologyBasis& tgt) {
  if (n > m) throw std::invalid_argument("induced_map: n > m");
  FieldMatrix chain = inclusion_chain_map(F, n, m, k);
  FieldMatrix bnd_up = boundary_matrix(F.steps[m - 1], k + 1);
  return {induced_on_homology(chain, bnd_up, src, tgt)};
}

InducedMap compose(const std::vector<InducedMap>& maps) {
  if (maps.empty()) throw std::invalid_argument("compose: empty map list");
  FieldMatrix acc = maps.front().matrix;
  for (std::size_t i = 1; i < maps.size(); ++i) {
    if (maps[i].matrix.cols != acc.rows)
      throw std::invalid_argument("compose: basis mismatch between adjacent maps");
    acc = multiply(maps[i].matrix, acc);
  }
  return {acc};
}

std::vector<std::string> validate(const ChainComplex& C) {
  std::vector<std::string> violations;
  for (std::size_t k = 0; k < C.boundary.size(); ++k) {
    const FieldMatrix& D = C.boundary[k];
    if (D.cols != C.dims[k])
      violations.push_back("degree " + std::to_string(k) + ": column count mismatch");
    std::size_t below = k == 0 ? 0 : C.dims[k - 1];
    if (D.rows != below)
      violations.push_back("degree " + std::to_string(k) + ": row count mismatch");
  }
  if (!violations.empty()) return violations;
  for (std::size_t k = 2; k < C.boundary.size(); ++k)
    if (!multiply(C.boundary[k - 1], C.boundary[k]).is_zero())
      violations.push_back("boundary of boundary nonzero in degree " +
                           std::to_string(k));
  return violations;
}

std::vector<std::size_t> chain_betti(const ChainComplex& C) {
  std::vector<std::size_t> betti(C.dims.size(), 0);
  for (std::size_t k = 0; k < C.dims.size(); ++k) {
    std::size_t rank_k = rank_of(C.boundary[k]);
    std::size_t rank_up = k + 1 < C.boundary.size() ? rank_of(C.boundary[k + 1]) : 0;
    betti[k] = C.dims[k] - rank_k - rank_up;
  }
  return betti;
}

ChainComplex mapping_cone(const Filtration& F, std::size_t n) {
  if (n < 1 || n + 1 > F.steps.size())
    throw std::invalid_argument("mapping_cone: needs consecutive steps n, n+1");
  const CellComplex& K1 = F.steps[n - 1];
  const CellComplex& K2 = F.steps[n];
  const Scalar p = K1.field();
  const int top = std::max(K1.top_dim() + 1, K2.top_dim());

  ChainComplex C;
  C.p = p;
  for (int k = 0; k <= top; ++k)
    C.dims.push_back((k >= 1 ? K1.size(k - 1) : 0) + K2.size(k));

  for (int k = 0; k <= top; ++k) {
    std::size_t rows = k == 0 ? 0 : C.dims[k - 1];
    FieldMatrix D(rows, C.dims[k], p);
    if (k >= 1) {
      const std::size_t a1 = K1.size(k - 1);       // C_{k-1}(K1) block of degree k
      const std::size_t b1 = k >= 2 ? K1.size(k - 2) : 0;  // K1 block of degree k-1

      // d(a, b) = (-d a, i(a) + d b)
      if (k >= 2) {
        FieldMatrix d1 = boundary_matrix(K1, k - 1);
        for (std::size_t i = 0; i < d1.rows; ++i)
          for (std::size_t j = 0; j < d1.cols; ++j)
            D.at(i, j) = fp_neg(d1.at(i, j), p);
      }
      // inclusion block: C_{k-1}(K1) -> C_{k-1}(K2)
      for (std::size_t j = 0; j < a1; ++j) {
        auto pos = K2.find(K1.cell(k - 1, j).id);
        if (!pos)
          throw std::invalid_argument("mapping_cone: filtration not nested at " +
                                      K1.cell(k - 1, j).id);
        D.at(b1 + pos->second, j) = 1;
      }
      FieldMatrix d2 = boundary_matrix(K2, k);
      for (std::size_t i = 0; i < d2.rows; ++i)
        for (std::size_t j = 0; j < d2.cols; ++j) D.at(b1 + i, a1 + j) = d2.at(i, j);
    }
    C.boundary.push_back(std::move(D));
  }
  return C;
}

}  // namespace topofilt
