#pragma once

// Fixture, report, and cache (.fhg) JSON formats. Reports are rendered
// deterministically, so a rethreshold from cache is byte-identical to a
// full run at the same p.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "topofilt/cloud.hpp"
#include "topofilt/complex.hpp"
#include "topofilt/groups.hpp"
#include "topofilt/multiparam_types.hpp"

namespace topofilt {

// Abstract filtration fixture: {"field": p, "params"?: [...], "steps":
// [[cell...], ...]}, each cell {"id", "dim", "faces": [[face_id, coeff]]};
// later steps list only newly added cells.
Filtration parse_filtration_json(const nlohmann::json& j);
Filtration load_filtration_json(const std::string& path);

// Grid analogue: {"field": p, "s1", "s2", "row_params"?, "col_params"?,
// "grid": [rows x cols of cell arrays]}; slot (n,m) lists cells new
// relative to the union of its left and lower neighbors.
Bifiltration parse_bifiltration_json(const nlohmann::json& j);
Bifiltration load_bifiltration_json(const std::string& path);

// Everything the rethreshold-only pipeline tail needs; serialized as the
// cache and embedded into reports.
struct AnalysisResult {
  Scalar field = 2;
  std::size_t steps = 0;
  nlohmann::json settings;
  std::vector<std::vector<std::size_t>> betti_per_step;
  struct Generator {
    int dim = 0;
    std::size_t slot = 0, birth = 0, death = 0, persistence = 0;
    std::vector<std::pair<std::string, Scalar>> representative;
  };
  std::vector<Generator> generators;
  std::vector<double> param_values;  // empty when the filtration carries none
  std::string measure_mode = "diff";
};

AnalysisResult make_analysis(const FiltrationHomology& fh, const Filtration& F,
                             nlohmann::json settings, const std::string& measure_mode);

nlohmann::json cache_json(const AnalysisResult& ar);
AnalysisResult parse_cache(const nlohmann::json& j);
AnalysisResult load_cache(const std::string& path);

nlohmann::json report_json(const AnalysisResult& ar, std::size_t p);

// FNV-1a over the raw file bytes, hex; builder provenance for the cache.
std::string file_hash(const std::string& path);

std::string dump_report(const nlohmann::json& j);

}  // namespace topofilt
