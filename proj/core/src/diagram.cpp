#include "topofilt/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace topofilt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct FinitePoint {
  double birth, death;
  int index;  // position among the dimension's points in the source diagram
};

double linf(const FinitePoint& a, const FinitePoint& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double diag_cost(const FinitePoint& a) { return (a.death - a.birth) / 2.0; }

// Maximum bipartite matching (Kuhn's augmenting paths) on an adjacency
// oracle; left size n1+n2, right size n2+n1 with diagonal slots appended.
struct Matcher {
  std::size_t n_left, n_right;
  std::vector<std::vector<std::size_t>> adj;
  std::vector<int> match_right;  // right -> left
  std::vector<int> match_left;

  bool try_kuhn(std::size_t v, std::vector<bool>& used) {
    for (std::size_t to : adj[v]) {
      if (used[to]) continue;
      used[to] = true;
      if (match_right[to] < 0 ||
          try_kuhn(static_cast<std::size_t>(match_right[to]), used)) {
        match_right[to] = static_cast<int>(v);
        match_left[v] = static_cast<int>(to);
        return true;
      }
    }
    return false;
  }

  std::size_t run() {
    match_right.assign(n_right, -1);
    match_left.assign(n_left, -1);
    std::size_t matched = 0;
    for (std::size_t v = 0; v < n_left; ++v) {
      std::vector<bool> used(n_right, false);
      if (try_kuhn(v, used)) ++matched;
    }
    return matched;
  }
};

// Feasibility of a perfect matching at cost <= c. Left nodes: D1 points,
// then one diagonal slot per D2 point. Right nodes: D2 points, then one
// diagonal slot per D1 point.
bool feasible(const std::vector<FinitePoint>& P1, const std::vector<FinitePoint>& P2,
              double c, Matcher* out) {
  const std::size_t n1 = P1.size(), n2 = P2.size();
  Matcher m;
  m.n_left = n1 + n2;
  m.n_right = n2 + n1;
  m.adj.assign(m.n_left, {});
  const double eps = 1e-12;
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j)
      if (linf(P1[i], P2[j]) <= c + eps) m.adj[i].push_back(j);
    if (diag_cost(P1[i]) <= c + eps) m.adj[i].push_back(n2 + i);
  }
  for (std::size_t j = 0; j < n2; ++j) {
    if (diag_cost(P2[j]) <= c + eps) m.adj[n1 + j].push_back(j);
    for (std::size_t i = 0; i < n1; ++i) m.adj[n1 + j].push_back(n2 + i);
  }
  bool ok = m.run() == m.n_left;
  if (ok && out) *out = std::move(m);
  return ok;
}

std::vector<FinitePoint> finite_points(const PersistenceDiagram& D, int dim,
                                       std::vector<int>* inf_points) {
  if (!D.has_params)
    throw std::invalid_argument("bottleneck_distance: parameter-valued diagrams required");
  std::vector<FinitePoint> out;
  int pos = 0;
  for (const auto& pt : D.points) {
    if (pt.dim != dim) continue;
    if (pt.death_finite)
      out.push_back({pt.birth_param, pt.death_param, pos});
    else if (inf_points)
      inf_points->push_back(pos);
    ++pos;
  }
  return out;
}

double infinite_part_cost(const PersistenceDiagram& D1, const PersistenceDiagram& D2,
                          int dim, std::vector<double>& births1,
                          std::vector<double>& births2) {
  for (const auto& pt : D1.points)
    if (pt.dim == dim && !pt.death_finite) births1.push_back(pt.birth_param);
  for (const auto& pt : D2.points)
    if (pt.dim == dim && !pt.death_finite) births2.push_back(pt.birth_param);
  if (births1.size() != births2.size()) return kInf;
  // Sorted pairing minimizes the maximum |birth difference| on the line.
  std::sort(births1.begin(), births1.end());
  std::sort(births2.begin(), births2.end());
  double cost = 0;
  for (std::size_t i = 0; i < births1.size(); ++i)
    cost = std::max(cost, std::abs(births1[i] - births2[i]));
  return cost;
}

}  // namespace

Matching bottleneck_matching(const PersistenceDiagram& D1,
                             const PersistenceDiagram& D2, int dim) {
  std::vector<double> ib1, ib2;
  double inf_cost = infinite_part_cost(D1, D2, dim, ib1, ib2);
  Matching result;
  if (std::isinf(inf_cost)) {
    result.cost = kInf;
    return result;
  }

  std::vector<FinitePoint> P1 = finite_points(D1, dim, nullptr);
  std::vector<FinitePoint> P2 = finite_points(D2, dim, nullptr);

  std::set<double> candidate_set{0.0, inf_cost};
  for (const auto& a : P1) candidate_set.insert(diag_cost(a));
  for (const auto& b : P2) candidate_set.insert(diag_cost(b));
  for (const auto& a : P1)
    for (const auto& b : P2) candidate_set.insert(linf(a, b));
  std::vector<double> candidates(candidate_set.begin(), candidate_set.end());

  // Smallest candidate cost admitting a perfect matching; costs below
  // inf_cost are unreachable anyway.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (candidates[lo] < inf_cost) ++lo;
  Matcher best;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (feasible(P1, P2, candidates[mid], nullptr))
      hi = mid;
    else
      lo = mid + 1;
  }
  feasible(P1, P2, candidates[lo], &best);
  result.cost = candidates[lo];

  for (std::size_t i = 0; i < P1.size(); ++i) {
    MatchPair pr;
    pr.left = P1[i].index;
    int to = best.match_left[i];
    pr.right = to >= 0 && static_cast<std::size_t>(to) < P2.size() ? P2[to].index : -1;
    result.pairs.push_back(pr);
  }
  for (std::size_t j = 0; j < P2.size(); ++j) {
    int from = best.match_right[j];
    if (from < 0 || static_cast<std::size_t>(from) >= P1.size())
      result.pairs.push_back({-1, P2[j].index});
  }
  return result;
}

double bottleneck_distance(const PersistenceDiagram& D1, const PersistenceDiagram& D2,
                           int dim) {
  std::vector<double> ib1, ib2;
  double inf_cost = infinite_part_cost(D1, D2, dim, ib1, ib2);
  if (std::isinf(inf_cost)) return kInf;

  std::vector<FinitePoint> P1 = finite_points(D1, dim, nullptr);
  std::vector<FinitePoint> P2 = finite_points(D2, dim, nullptr);
  if (P1.empty() && P2.empty()) return inf_cost;

  std::set<double> candidate_set{0.0, inf_cost};
  for (const auto& a : P1) candidate_set.insert(diag_cost(a));
  for (const auto& b : P2) candidate_set.insert(diag_cost(b));
  for (const auto& a : P1)
    for (const auto& b : P2) candidate_set.insert(linf(a, b));
  std::vector<double> candidates(candidate_set.begin(), candidate_set.end());

  std::size_t lo = 0, hi = candidates.size() - 1;
  while (candidates[lo] < inf_cost) ++lo;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (feasible(P1, P2, candidates[mid], nullptr))
      hi = mid;
    else
      lo = mid + 1;
  }
  return candidates[lo];
}

StabilityReport stability_report(const GrayscaleImage& f, const GrayscaleImage& g,
                                 std::vector<int> thresholds) {
  if (f.width != g.width || f.height != g.height)
    throw std::invalid_argument("stability_report: image sizes differ");

  if (thresholds.empty()) {
    int lo = std::min(f.min_level(), g.min_level());
    int hi = std::max(f.max_level(), g.max_level()) + 1;
    for (int t = lo; t <= hi; ++t) thresholds.push_back(t);
  }

  Filtration Ff = threshold_filtration(f, thresholds);
  Filtration Fg = threshold_filtration(g, thresholds);

  StabilityReport rep;
  rep.diagram_f = barcode(filtration_homology(Ff), Ff.param_values);
  rep.diagram_g = barcode(filtration_homology(Fg), Fg.param_values);
  rep.sup_norm = sup_norm_diff(f, g);

  int max_dim = 0;
  for (const auto& pt : rep.diagram_f.points) max_dim = std::max(max_dim, pt.dim);
  for (const auto& pt : rep.diagram_g.points) max_dim = std::max(max_dim, pt.dim);

  rep.inequality_holds = true;
  for (int d = 0; d <= max_dim; ++d) {
    double dist = bottleneck_distance(rep.diagram_f, rep.diagram_g, d);
    rep.distance_per_dim.push_back(dist);
    if (!(dist <= rep.sup_norm)) rep.inequality_holds = false;
  }
  for (const auto& pt : rep.diagram_f.points)
    rep.persistence_f.push_back(persistence_measure(pt, Measure::diff));
  for (const auto& pt : rep.diagram_g.points)
    rep.persistence_g.push_back(persistence_measure(pt, Measure::diff));
  return rep;
}

}  // namespace topofilt
