#include "helpers.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#ifndef TOPOFILT_FIXTURE_DIR
#error "TOPOFILT_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace testutil {

std::string fixture_path(const std::string& name) {
  return std::string(TOPOFILT_FIXTURE_DIR) + "/" + name;
}

GrayscaleImage fig1_image() { return read_pgm(fixture_path("fig1.pgm")); }

Filtration fig1_filtration(Scalar field) {
  return threshold_filtration(fig1_image(), {2, 3, 4}, field);
}

CellComplex skeleton(const CellComplex& K, int up_to_dim) {
  CellComplex S(K.field());
  for (int d = 0; d <= std::min(up_to_dim, K.top_dim()); ++d)
    for (const auto& c : K.cells(d)) S.add_cell(c);
  return S;
}

CellComplex filled_square(Scalar field) {
  GrayscaleImage one;
  one.width = one.height = 1;
  one.levels = {0};
  return binary_cubical(one, 1, field);
}

CellComplex circle4(Scalar field) { return skeleton(filled_square(field), 1); }

namespace {

std::string vid(int i) { return "v" + std::to_string(i); }
std::string eid(int i, int j) {
  return "e" + std::to_string(i) + "-" + std::to_string(j);
}
std::string tid(int i, int j, int k) {
  return "t" + std::to_string(i) + "-" + std::to_string(j) + "-" + std::to_string(k);
}

}  // namespace

Filtration random_filtration(std::mt19937& rng, std::size_t max_steps,
                             int max_vertices, Scalar field) {
  std::uniform_int_distribution<std::size_t> steps_d(1, max_steps);
  std::uniform_int_distribution<int> nv_d(3, max_vertices);
  std::bernoulli_distribution coin(0.5);
  const std::size_t s = steps_d(rng);
  const int nv = nv_d(rng);

  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      if (coin(rng)) edges.insert({i, j});
  std::vector<std::array<int, 3>> tris;
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      for (int k = j + 1; k < nv; ++k)
        if (edges.count({i, j}) && edges.count({i, k}) && edges.count({j, k}) &&
            coin(rng))
          tris.push_back({i, j, k});

  // Face-monotone step labels keep every prefix closed under faces.
  auto step_at_least = [&](std::size_t lo) {
    std::uniform_int_distribution<std::size_t> d(lo, s);
    return d(rng);
  };
  std::vector<std::size_t> vstep(nv);
  for (auto& v : vstep) v = step_at_least(1);
  std::map<std::pair<int, int>, std::size_t> estep;
  for (auto [i, j] : edges) estep[{i, j}] = step_at_least(std::max(vstep[i], vstep[j]));
  std::map<std::array<int, 3>, std::size_t> tstep;
  for (auto [i, j, k] : tris)
    tstep[{i, j, k}] = step_at_least(
        std::max({estep[{i, j}], estep[{i, k}], estep[{j, k}]}));

  Filtration F;
  for (std::size_t n = 1; n <= s; ++n) {
    CellComplex K(field);
    for (int i = 0; i < nv; ++i)
      if (vstep[i] <= n) K.add_cell({vid(i), 0, {}});
    for (auto [i, j] : edges)
      if (estep[{i, j}] <= n)
        K.add_cell({eid(i, j), 1, {{vid(j), 1}, {vid(i), fp_neg(1, field)}}});
    for (auto [i, j, k] : tris)
      if (tstep[{i, j, k}] <= n)
        K.add_cell({tid(i, j, k), 2,
                    {{eid(j, k), 1}, {eid(i, k), fp_neg(1, field)}, {eid(i, j), 1}}});
    F.steps.push_back(std::move(K));
  }
  return F;
}

Filtration monomorphic_filtration(std::mt19937& rng, std::size_t steps,
                                  Scalar field) {
  std::uniform_int_distribution<int> extra(1, 2);
  Filtration F;
  CellComplex K(field);
  K.add_cell({"x", 0, {}});
  K.add_cell({"y", 0, {}});
  int next = 0;
  auto add_edge = [&] {
    K.add_cell({"par" + std::to_string(next++), 1, {{"y", 1}, {"x", fp_neg(1, field)}}});
  };
  add_edge();
  F.steps.push_back(K);
  for (std::size_t n = 2; n <= steps; ++n) {
    for (int t = extra(rng); t > 0; --t) add_edge();
    F.steps.push_back(K);
  }
  return F;
}

Filtration constant_filtration(const CellComplex& K, std::size_t s) {
  Filtration F;
  F.steps.assign(s, K);
  return F;
}

Filtration disjoint_union(const Filtration& F, const Filtration& G) {
  if (F.steps.size() != G.steps.size())
    throw std::invalid_argument("disjoint_union: step counts differ");
  Filtration U;
  for (std::size_t n = 0; n < F.steps.size(); ++n) {
    CellComplex K(F.steps[n].field());
    for (int d = 0; d <= F.steps[n].top_dim(); ++d)
      for (const auto& c : F.steps[n].cells(d)) K.add_cell(c);
    for (int d = 0; d <= G.steps[n].top_dim(); ++d)
      for (const auto& c : G.steps[n].cells(d)) {
        Cell copy = c;
        copy.id = "R." + copy.id;
        for (auto& [fid, co] : copy.faces) fid = "R." + fid;
        K.add_cell(std::move(copy));
      }
    U.steps.push_back(std::move(K));
  }
  return U;
}

GrayscaleImage random_image(std::mt19937& rng, std::size_t w, std::size_t h,
                            int max_level) {
  std::uniform_int_distribution<int> level(0, max_level);
  GrayscaleImage img;
  img.width = w;
  img.height = h;
  img.levels.resize(w * h);
  for (auto& v : img.levels) v = level(rng);
  return img;
}

PointCloud random_cloud(std::mt19937& rng, std::size_t n, double extent) {
  std::uniform_real_distribution<double> coord(0.0, extent);
  PointCloud cloud;
  for (std::size_t i = 0; i < n; ++i) cloud.points.push_back({coord(rng), coord(rng)});
  return cloud;
}

bool same_span(const Subspace& A, const Subspace& B) {
  if (A.dim() != B.dim() || A.ambient_dim != B.ambient_dim) return false;
  for (const auto& v : A.basis)
    if (!contains(B, v)) return false;
  return true;
}

}  // namespace testutil
