#include <benchmark/benchmark.h>

#include <random>

#include "topofilt/cloud.hpp"
#include "topofilt/field.hpp"
#include "topofilt/groups.hpp"
#include "topofilt/image.hpp"

namespace {

using namespace topofilt;

PointCloud random_cloud(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  PointCloud cloud;
  for (std::size_t i = 0; i < n; ++i) cloud.points.push_back({coord(rng), coord(rng)});
  return cloud;
}

GrayscaleImage random_image(std::size_t side, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> level(0, 7);
  GrayscaleImage img;
  img.width = img.height = side;
  img.levels.resize(side * side);
  for (auto& v : img.levels) v = level(rng);
  return img;
}

void BM_RipsComplex(benchmark::State& state) {
  PointCloud cloud = random_cloud(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    CellComplex K = rips_complex(cloud, 1.5, 2);
    benchmark::DoNotOptimize(K.total_cells());
  }
}
BENCHMARK(BM_RipsComplex)->Arg(20)->Arg(40)->Arg(60);

void BM_Rref(benchmark::State& state) {
  std::mt19937 rng(11);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  FieldMatrix M(n, n, 2);
  std::uniform_int_distribution<int> bit(0, 1);
  for (auto& v : M.a) v = static_cast<Scalar>(bit(rng));
  for (auto _ : state) {
    auto R = reduce(M);
    benchmark::DoNotOptimize(R.rank);
  }
}
BENCHMARK(BM_Rref)->Arg(64)->Arg(128)->Arg(256);

void BM_ImagePipeline(benchmark::State& state) {
  GrayscaleImage img = random_image(static_cast<std::size_t>(state.range(0)), 3);
  std::vector<int> thresholds = default_thresholds(img);
  for (auto _ : state) {
    Filtration F = threshold_filtration(img, thresholds);
    FiltrationHomology fh = filtration_homology(F);
    benchmark::DoNotOptimize(fh.generators.size());
  }
}
BENCHMARK(BM_ImagePipeline)->Arg(8)->Arg(16)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
