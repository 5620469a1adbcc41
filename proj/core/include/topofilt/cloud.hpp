#pragma once

// Point clouds, Vietoris-Rips filtrations, and the radius x density
// bifiltration. "Within r" means Euclidean distance <= r (closed).

#include <string>
#include <vector>

#include "topofilt/complex.hpp"
#include "topofilt/multiparam_types.hpp"

namespace topofilt {

struct PointCloud {
  std::vector<std::vector<double>> points;  // equal coordinate dimension

  std::size_t size() const { return points.size(); }
};

// One point per line, comma-separated coordinates; lines starting with '#'
// are skipped.
PointCloud read_cloud_csv(const std::string& path);
PointCloud parse_cloud_csv(const std::string& text);

double point_distance(const PointCloud& cloud, std::size_t i, std::size_t j);

CellComplex rips_complex(const PointCloud& cloud, double r, int max_dim,
                         Scalar field = 2);

Filtration rips_filtration(const PointCloud& cloud, const std::vector<double>& radii,
                           int max_dim, Scalar field = 2);

// Count of other points within density_radius of each point.
std::vector<std::size_t> neighbor_counts(const PointCloud& cloud,
                                         double density_radius);

// K^{nm} = Rips complex at radii[n-1] on the points whose neighbor count is
// at least density_thresholds[m-1]; thresholds decrease so columns grow.
Bifiltration density_radius_bifiltration(const PointCloud& cloud,
                                         const std::vector<double>& radii,
                                         const std::vector<std::size_t>& density_thresholds,
                                         double density_radius, int max_dim,
                                         Scalar field = 2);

}  // namespace topofilt
