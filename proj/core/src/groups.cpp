#include "topofilt/groups.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace topofilt {

std::size_t FiltrationHomology::rank(int dim) const {
  std::size_t n = 0;
  for (const auto& g : generators)
    if (g.dim == dim) ++n;
  return n;
}

std::size_t FiltrationHomology::betti(std::size_t step, int dim) const {
  if (step < 1 || step > steps) throw std::invalid_argument("betti: step out of range");
  if (dim < 0 || dim > max_dim) return 0;
  return betti_per_step[step - 1][dim];
}

FiltrationHomology filtration_homology(const Filtration& F) {
  FiltrationHomology fh;
  fh.steps = F.step_count();
  if (fh.steps == 0) return fh;
  fh.p = F.steps.front().field();
  fh.max_dim = std::max(max_top_dim(F), 0);

  const std::size_t s = fh.steps;
  for (std::size_t k = 0; k < s; ++k)
    fh.bases.push_back(homology_bases(F.steps[k], fh.max_dim));

  fh.betti_per_step.assign(s, std::vector<std::size_t>(fh.max_dim + 1, 0));
  for (std::size_t k = 0; k < s; ++k)
    for (int d = 0; d <= fh.max_dim; ++d)
      fh.betti_per_step[k][d] = fh.bases[k][d].betti();

  fh.step_maps.assign(s > 0 ? s - 1 : 0, {});
  for (std::size_t k = 1; k < s; ++k)
    for (int d = 0; d <= fh.max_dim; ++d)
      fh.step_maps[k - 1].push_back(
          induced_map(F, k, k + 1, d, fh.bases[k - 1][d], fh.bases[k][d]).matrix);

  for (int d = 0; d <= fh.max_dim; ++d) {
    for (std::size_t k = 1; k <= s; ++k) {
      const std::size_t betti_k = fh.bases[k - 1][d].betti();
      Subspace ker = k < s ? kernel_basis(fh.step_maps[k - 1][d])
                           : Subspace::full(betti_k, fh.p);
      if (ker.dim() == 0) continue;

      // Image chain im i^{b,k} for b = 1..k; composites built downward.
      std::vector<FieldMatrix> composites(k);
      composites[k - 1] = FieldMatrix::identity(betti_k, fh.p);
      for (std::size_t b = k - 1; b >= 1; --b)
        composites[b - 1] = multiply(composites[b], fh.step_maps[b - 1][d]);

      std::vector<Subspace> chain;
      for (std::size_t b = 1; b < k; ++b)
        chain.push_back(intersect(ker, image_basis(composites[b - 1])));
      chain.push_back(ker);

      AdaptedBasis adapted = adapted_basis(chain);
      for (std::size_t j = 0; j < adapted.vectors.size(); ++j) {
        SlotGenerator g;
        g.dim = d;
        g.slot = k;
        g.birth = adapted.levels[j];
        g.death = k + 1;
        g.persistence = g.death - g.birth;
        g.class_coords = adapted.vectors[j];
        g.cycle.assign(fh.bases[k - 1][d].n_cells, 0);
        for (std::size_t i = 0; i < betti_k; ++i) {
          Scalar c = g.class_coords[i];
          if (c == 0) continue;
          const auto& gen = fh.bases[k - 1][d].generators[i];
          for (std::size_t t = 0; t < gen.size(); ++t)
            g.cycle[t] = fp_add(g.cycle[t], fp_mul(c, gen[t], fh.p), fh.p);
        }
        fh.generators.push_back(std::move(g));
      }
    }
  }
  return fh;
}

FieldMatrix composite_map(const FiltrationHomology& fh, std::size_t n, std::size_t m,
                          int dim) {
  if (n < 1 || n > fh.steps || m < n || m > fh.steps + 1)
    throw std::invalid_argument("composite_map: step index out of range");
  const std::size_t betti_n = fh.bases[n - 1][dim].betti();
  if (m == fh.steps + 1) return FieldMatrix(0, betti_n, fh.p);  // appended zero
  FieldMatrix acc = FieldMatrix::identity(betti_n, fh.p);
  for (std::size_t k = n; k < m; ++k) acc = multiply(fh.step_maps[k - 1][dim], acc);
  return acc;
}

std::size_t persistence_of(const FiltrationHomology& fh, std::size_t n, int dim,
                           const std::vector<Scalar>& x) {
  bool zero = std::all_of(x.begin(), x.end(), [](Scalar c) { return c == 0; });
  if (zero) throw std::invalid_argument("persistence_of: zero class has no persistence");
  if (x.size() != fh.bases[n - 1][dim].betti())
    throw std::invalid_argument("persistence_of: coordinate length mismatch");
  std::vector<Scalar> y = x;
  for (std::size_t k = n; k < fh.steps; ++k) {
    y = apply_matrix(fh.step_maps[k - 1][dim], y);
    if (std::all_of(y.begin(), y.end(), [](Scalar c) { return c == 0; }))
      return k + 1 - n;
  }
  return fh.steps + 1 - n;  // killed by the appended zero
}

Subspace noise_group_of_complex(const FiltrationHomology& fh, std::size_t n,
                                std::size_t p, int dim) {
  if (p < 1) throw std::invalid_argument("noise_group_of_complex: p must be positive");
  const std::size_t betti_n = fh.bases[n - 1][dim].betti();
  const std::size_t target = n + p - 1;
  if (target >= fh.steps + 1) return Subspace::full(betti_n, fh.p);
  return kernel_basis(composite_map(fh, n, target, dim));
}

QuotientRanks persistent_group_of_complex(const FiltrationHomology& fh, std::size_t n,
                                          std::size_t p, int dim) {
  Subspace noise = noise_group_of_complex(fh, n, p, dim);
  QuotientRanks out;
  out.noise_rank = noise.dim();
  out.rank = fh.bases[n - 1][dim].betti() - out.noise_rank;

  // First-isomorphism cross-check against the image rank.
  const std::size_t target = std::min(n + p - 1, fh.steps + 1);
  std::size_t image_rank = rank_of(composite_map(fh, n, target, dim));
  if (image_rank != out.rank)
    throw std::logic_error("persistent_group_of_complex: quotient/image rank mismatch");
  return out;
}

std::map<std::pair<std::size_t, int>, Subspace> noise_group_of_filtration(
    const FiltrationHomology& fh, std::size_t p) {
  if (p < 1)
    throw std::invalid_argument("noise_group_of_filtration: p must be positive");
  std::map<std::pair<std::size_t, int>, Subspace> out;
  for (std::size_t k = 1; k <= fh.steps; ++k)
    for (int d = 0; d <= fh.max_dim; ++d)
      out[{k, d}] = Subspace(fh.bases[k - 1][d].betti(), fh.p);
  for (const auto& g : fh.generators)
    if (g.persistence < p) out[{g.slot, g.dim}].basis.push_back(g.class_coords);
  return out;
}

PersistentGroupReport persistent_group_of_filtration(const FiltrationHomology& fh,
                                                     std::size_t p) {
  if (p < 1)
    throw std::invalid_argument("persistent_group_of_filtration: p must be positive");
  PersistentGroupReport rep;
  rep.p = p;
  for (int d = 0; d <= fh.max_dim; ++d) {
    rep.rank_H[d] = 0;
    rep.rank_noise[d] = 0;
    rep.rank_persistent[d] = 0;
  }
  for (const auto& g : fh.generators) {
    ++rep.rank_H[g.dim];
    if (g.persistence < p) {
      ++rep.rank_noise[g.dim];
    } else {
      ++rep.rank_persistent[g.dim];
      rep.survivors.push_back(g);
    }
  }
  return rep;
}

PersistenceDiagram barcode(const FiltrationHomology& fh,
                           const std::vector<double>& param_values) {
  PersistenceDiagram D;
  D.steps = fh.steps;
  D.has_params = !param_values.empty();
  if (D.has_params && param_values.size() != fh.steps)
    throw std::invalid_argument("barcode: param_values count differs from step count");
  for (const auto& g : fh.generators) {
    DiagramPoint pt;
    pt.dim = g.dim;
    pt.birth_index = g.birth;
    pt.death_index = g.death;
    if (D.has_params) {
      pt.birth_param = param_values[g.birth - 1];
      if (g.death <= fh.steps) {
        pt.death_param = param_values[g.death - 1];
        pt.death_finite = true;
      } else {
        pt.death_param = std::numeric_limits<double>::infinity();
        pt.death_finite = false;
      }
    }
    D.points.push_back(pt);
  }
  return D;
}

double persistence_measure(const DiagramPoint& pt, Measure mode) {
  const double inf = std::numeric_limits<double>::infinity();
  if (mode == Measure::diff)
    return pt.death_finite ? pt.death_param - pt.birth_param : inf;
  if (pt.birth_param <= 0)
    throw std::invalid_argument("persistence_measure: ratio requires birth > 0");
  return pt.death_finite ? pt.death_param / pt.birth_param : inf;
}

namespace {

// Chain-level matrices of a cellular map per step and dimension; cells
// mapped to lower-dimensional cells contribute zero at chain level.
std::vector<std::vector<FieldMatrix>> cell_map_matrices(const Filtration& F,
                                                        const Filtration& G,
                                                        const CellMap& f, int max_dim) {
  const std::size_t s = F.step_count();
  std::vector<std::vector<FieldMatrix>> mats(s);
  for (std::size_t n = 1; n <= s; ++n) {
    const CellComplex& K = F.steps[n - 1];
    const CellComplex& L = G.steps[n - 1];
    for (int d = 0; d <= max_dim; ++d) {
      FieldMatrix M(L.size(d), K.size(d), K.field());
      for (std::size_t j = 0; j < K.size(d); ++j) {
        const std::string& id = K.cell(d, j).id;
        auto it = f.find(id);
        if (it == f.end())
          throw std::invalid_argument("filtration_map: cell " + id +
                                      " has no image under f");
        auto pos = L.find(it->second);
        if (!pos)
          throw std::invalid_argument("filtration_map: restriction violated at step " +
                                      std::to_string(n) + ", cell " + id);
        if (pos->first > d)
          throw std::invalid_argument("filtration_map: f raises dimension of " + id);
        if (pos->first == d) M.at(pos->second, j) = 1;
      }
      mats[n - 1].push_back(std::move(M));
    }
  }
  // Chain-map condition on the final step: boundary commutes with f.
  const CellComplex& Ks = F.steps[s - 1];
  const CellComplex& Ls = G.steps[s - 1];
  for (int d = 1; d <= max_dim; ++d) {
    FieldMatrix lhs = multiply(boundary_matrix(Ls, d), mats[s - 1][d]);
    FieldMatrix rhs = multiply(mats[s - 1][d - 1], boundary_matrix(Ks, d));
    if (!(lhs == rhs))
      throw std::invalid_argument("filtration_map: f is not a chain map in dimension " +
                                  std::to_string(d));
  }
  return mats;
}

}  // namespace

std::vector<FiltrationMapSlot> filtration_map(const Filtration& F, const Filtration& G,
                                              const CellMap& f) {
  if (F.step_count() != G.step_count())
    throw std::invalid_argument("filtration_map: step counts differ");
  if (F.step_count() == 0) return {};

  FiltrationHomology fhF = filtration_homology(F);
  FiltrationHomology fhG = filtration_homology(G);
  const int max_dim = std::max(fhF.max_dim, fhG.max_dim);
  auto mats = cell_map_matrices(F, G, f, max_dim);

  std::vector<FiltrationMapSlot> out;
  for (int d = 0; d <= max_dim; ++d) {
    for (std::size_t k = 1; k <= F.step_count(); ++k) {
      // f_* on H_d(K^k) in the step bases, when both sides have the basis.
      static const HomologyBasis kEmpty{};
      const HomologyBasis& srcH = d <= fhF.max_dim ? fhF.bases[k - 1][d] : kEmpty;
      const HomologyBasis& tgtH = d <= fhG.max_dim ? fhG.bases[k - 1][d] : kEmpty;
      FieldMatrix on_homology =
          (srcH.betti() == 0 || d > fhG.max_dim)
              ? FieldMatrix(tgtH.betti(), srcH.betti(), fhF.p)
              : induced_on_homology(mats[k - 1][d],
                                    boundary_matrix(G.steps[k - 1], d + 1), srcH, tgtH);

      // Source and target slot-kernel generators for this (slot, dim).
      std::vector<const SlotGenerator*> src, tgt;
      for (const auto& g : fhF.generators)
        if (g.slot == k && g.dim == d) src.push_back(&g);
      for (const auto& g : fhG.generators)
        if (g.slot == k && g.dim == d) tgt.push_back(&g);

      FiltrationMapSlot slot;
      slot.slot = k;
      slot.dim = d;
      slot.matrix = FieldMatrix(tgt.size(), src.size(), fhF.p);
      if (!src.empty()) {
        Subspace tgt_ker(tgtH.betti(), fhF.p);
        for (const auto* g : tgt) tgt_ker.basis.push_back(g->class_coords);
        for (std::size_t j = 0; j < src.size(); ++j) {
          std::vector<Scalar> y = apply_matrix(on_homology, src[j]->class_coords);
          auto coords = solve_membership(tgt_ker, y);
          if (!coords)
            throw std::logic_error(
                "filtration_map: naturality violated, image not in target slot kernel");
          for (std::size_t i = 0; i < tgt.size(); ++i) slot.matrix.at(i, j) = (*coords)[i];
        }
      }
      out.push_back(std::move(slot));
    }
  }
  return out;
}

}  // namespace topofilt
