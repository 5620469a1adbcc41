#include "topofilt/cloud.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace topofilt {

PointCloud read_cloud_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_cloud_csv: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_cloud_csv(buf.str());
}

PointCloud parse_cloud_csv(const std::string& text) {
  PointCloud cloud;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<double> pt;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      try {
        pt.push_back(std::stod(field));
      } catch (const std::exception&) {
        throw std::runtime_error("parse_cloud_csv: bad number on line " +
                                 std::to_string(lineno));
      }
    }
    if (pt.empty())
      throw std::runtime_error("parse_cloud_csv: empty point on line " +
                               std::to_string(lineno));
    if (!cloud.points.empty() && pt.size() != cloud.points.front().size())
      throw std::runtime_error("parse_cloud_csv: inconsistent dimension on line " +
                               std::to_string(lineno));
    cloud.points.push_back(std::move(pt));
  }
  return cloud;
}

double point_distance(const PointCloud& cloud, std::size_t i, std::size_t j) {
  double s = 0;
  for (std::size_t k = 0; k < cloud.points[i].size(); ++k) {
    double d = cloud.points[i][k] - cloud.points[j][k];
    s += d * d;
  }
  return std::sqrt(s);
}

namespace {

std::string simplex_id(const std::vector<std::size_t>& verts) {
  std::string id;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (i) id.push_back('-');
    id += std::to_string(verts[i]);
  }
  return id;
}

// Rips on an index subset; ids use the global point indices so complexes at
// different radii / density columns nest by id.
CellComplex rips_on_subset(const PointCloud& cloud,
                           const std::vector<std::size_t>& verts, double r,
                           int max_dim, Scalar field) {
  CellComplex K(field);
  const std::size_t n = verts.size();
  // dist <= r compared on squares to avoid the sqrt; both sides scale
  // exactly under c in {2, 0.5}.
  const double r2 = r * r;
  auto close = [&](std::size_t a, std::size_t b) {
    double s = 0;
    for (std::size_t k = 0; k < cloud.points[a].size(); ++k) {
      double d = cloud.points[a][k] - cloud.points[b][k];
      s += d * d;
    }
    return s <= r2;
  };

  for (std::size_t i = 0; i < n; ++i)
    K.add_cell({simplex_id({verts[i]}), 0, {}});
  if (max_dim < 1 || r < 0) return K;

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      adj[i][j] = adj[j][i] = close(verts[i], verts[j]);

  // simplices[k]: sorted local-index tuples, generated in lex order
  std::vector<std::vector<std::vector<std::size_t>>> simplices(1);
  for (std::size_t i = 0; i < n; ++i) simplices[0].push_back({i});

  for (int k = 1; k <= max_dim; ++k) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : simplices[k - 1]) {
      for (std::size_t v = s.back() + 1; v < n; ++v) {
        bool ok = true;
        for (std::size_t u : s)
          if (!adj[u][v]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        auto t = s;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    }
    for (const auto& s : next) {
      std::vector<std::size_t> global(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) global[i] = verts[s[i]];
      Cell cell;
      cell.id = simplex_id(global);
      cell.dim = k;
      for (std::size_t drop = 0; drop < global.size(); ++drop) {
        std::vector<std::size_t> face;
        for (std::size_t i = 0; i < global.size(); ++i)
          if (i != drop) face.push_back(global[i]);
        Scalar coeff = (drop % 2 == 0) ? 1 : fp_neg(1, field);
        cell.faces.emplace_back(simplex_id(face), coeff);
      }
      K.add_cell(std::move(cell));
    }
    simplices.push_back(std::move(next));
    if (simplices.back().empty()) break;
  }
  return K;
}

}  // namespace

CellComplex rips_complex(const PointCloud& cloud, double r, int max_dim,
                         Scalar field) {
  if (r < 0) throw std::invalid_argument("rips_complex: negative radius");
  if (max_dim < 0) throw std::invalid_argument("rips_complex: negative max_dim");
  std::vector<std::size_t> all(cloud.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return rips_on_subset(cloud, all, r, max_dim, field);
}

Filtration rips_filtration(const PointCloud& cloud, const std::vector<double>& radii,
                           int max_dim, Scalar field) {
  if (radii.empty()) throw std::invalid_argument("rips_filtration: empty radii");
  for (std::size_t i = 0; i + 1 < radii.size(); ++i)
    if (!(radii[i] < radii[i + 1]))
      throw std::invalid_argument("rips_filtration: radii not increasing");
  if (radii.front() < 0)
    throw std::invalid_argument("rips_filtration: negative radius");
  Filtration F;
  for (double r : radii) {
    F.steps.push_back(rips_complex(cloud, r, max_dim, field));
    F.param_values.push_back(r);
  }
  return F;
}

std::vector<std::size_t> neighbor_counts(const PointCloud& cloud,
                                         double density_radius) {
  std::vector<std::size_t> counts(cloud.size(), 0);
  for (std::size_t i = 0; i < cloud.size(); ++i)
    for (std::size_t j = i + 1; j < cloud.size(); ++j)
      if (point_distance(cloud, i, j) <= density_radius) {
        ++counts[i];
        ++counts[j];
      }
  return counts;
}

Bifiltration density_radius_bifiltration(
    const PointCloud& cloud, const std::vector<double>& radii,
    const std::vector<std::size_t>& density_thresholds, double density_radius,
    int max_dim, Scalar field) {
  if (radii.empty() || density_thresholds.empty())
    throw std::invalid_argument("density_radius_bifiltration: empty parameter list");
  for (std::size_t i = 0; i + 1 < radii.size(); ++i)
    if (!(radii[i] < radii[i + 1]))
      throw std::invalid_argument("density_radius_bifiltration: radii not increasing");
  for (std::size_t i = 0; i + 1 < density_thresholds.size(); ++i)
    if (!(density_thresholds[i] > density_thresholds[i + 1]))
      throw std::invalid_argument(
          "density_radius_bifiltration: density thresholds not decreasing");

  std::vector<std::size_t> counts = neighbor_counts(cloud, density_radius);

  Bifiltration BF;
  BF.s1 = radii.size();
  BF.s2 = density_thresholds.size();
  BF.row_params = radii;
  for (std::size_t t : density_thresholds)
    BF.col_params.push_back(static_cast<double>(t));
  for (std::size_t n = 0; n < BF.s1; ++n) {
    for (std::size_t m = 0; m < BF.s2; ++m) {
      std::vector<std::size_t> verts;
      for (std::size_t i = 0; i < cloud.size(); ++i)
        if (counts[i] >= density_thresholds[m]) verts.push_back(i);
      BF.grid.push_back(rips_on_subset(cloud, verts, radii[n], max_dim, field));
    }
  }
  return BF;
}

}  // namespace topofilt
