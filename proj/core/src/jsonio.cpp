#include "topofilt/jsonio.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace topofilt {

using nlohmann::json;

namespace {

Cell parse_cell(const json& jc, Scalar field, const std::string& where) {
  if (!jc.is_object() || !jc.contains("id") || !jc.contains("dim"))
    throw std::runtime_error("fixture: malformed cell at " + where);
  Cell c;
  c.id = jc.at("id").get<std::string>();
  c.dim = jc.at("dim").get<int>();
  if (jc.contains("faces")) {
    for (const auto& jf : jc.at("faces")) {
      if (!jf.is_array() || jf.size() != 2)
        throw std::runtime_error("fixture: malformed face entry at " + where + "/" +
                                 c.id);
      long long raw = jf[1].get<long long>();
      long long fp = static_cast<long long>(field);
      Scalar coeff = static_cast<Scalar>(((raw % fp) + fp) % fp);
      c.faces.emplace_back(jf[0].get<std::string>(), coeff);
    }
  }
  return c;
}

void add_step_cells(CellComplex& K, const json& step, Scalar field,
                    const std::string& where) {
  // Cells within a step may arrive in any order; insert faces first.
  std::vector<Cell> cells;
  for (const auto& jc : step) cells.push_back(parse_cell(jc, field, where));
  std::stable_sort(cells.begin(), cells.end(),
                   [](const Cell& a, const Cell& b) { return a.dim < b.dim; });
  for (auto& c : cells) K.add_cell(std::move(c));
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

Scalar parse_field(const json& j) {
  Scalar field = j.value("field", 2u);
  if (!is_prime(field)) throw std::runtime_error("fixture: field must be prime");
  return field;
}

}  // namespace

Filtration parse_filtration_json(const json& j) {
  if (!j.is_object() || !j.contains("steps") || !j.at("steps").is_array())
    throw std::runtime_error("fixture: expected object with steps array");
  Scalar field = parse_field(j);

  Filtration F;
  CellComplex acc(field);
  std::size_t n = 0;
  for (const auto& step : j.at("steps")) {
    ++n;
    if (!step.is_array())
      throw std::runtime_error("fixture: steps[" + std::to_string(n - 1) +
                               "] is not an array");
    add_step_cells(acc, step, field, "steps[" + std::to_string(n - 1) + "]");
    F.steps.push_back(acc);
  }
  if (j.contains("params")) {
    for (const auto& v : j.at("params")) F.param_values.push_back(v.get<double>());
    if (F.param_values.size() != F.steps.size())
      throw std::runtime_error("fixture: params count differs from step count");
  }
  auto violations = validate(F);
  if (!violations.empty())
    throw std::runtime_error("fixture: invalid filtration: " + violations.front());
  return F;
}

Filtration load_filtration_json(const std::string& path) {
  return parse_filtration_json(load_json_file(path));
}

Bifiltration parse_bifiltration_json(const json& j) {
  if (!j.is_object() || !j.contains("grid") || !j.at("grid").is_array())
    throw std::runtime_error("fixture: expected object with grid array");
  Scalar field = parse_field(j);

  Bifiltration BF;
  BF.s1 = j.at("grid").size();
  if (BF.s1 == 0) throw std::runtime_error("fixture: empty grid");
  BF.s2 = j.at("grid").at(0).size();
  for (const auto& row : j.at("grid"))
    if (!row.is_array() || row.size() != BF.s2)
      throw std::runtime_error("fixture: ragged grid");

  // Cumulative union: left and lower neighbors first, then new cells.
  std::vector<CellComplex> built;
  for (std::size_t n = 1; n <= BF.s1; ++n)
    for (std::size_t m = 1; m <= BF.s2; ++m) {
      CellComplex K(field);
      auto merge_from = [&](const CellComplex& src) {
        for (int d = 0; d <= src.top_dim(); ++d)
          for (std::size_t i = 0; i < src.size(d); ++i)
            if (!K.has_cell(src.cell(d, i).id)) K.add_cell(src.cell(d, i));
      };
      if (n > 1) merge_from(built[(n - 2) * BF.s2 + (m - 1)]);
      if (m > 1) merge_from(built[(n - 1) * BF.s2 + (m - 2)]);
      add_step_cells(K, j.at("grid").at(n - 1).at(m - 1), field,
                     "grid[" + std::to_string(n - 1) + "][" + std::to_string(m - 1) +
                         "]");
      built.push_back(std::move(K));
    }
  BF.grid = std::move(built);

  if (j.contains("row_params"))
    for (const auto& v : j.at("row_params")) BF.row_params.push_back(v.get<double>());
  if (j.contains("col_params"))
    for (const auto& v : j.at("col_params")) BF.col_params.push_back(v.get<double>());

  auto violations = validate(BF);
  if (!violations.empty())
    throw std::runtime_error("fixture: invalid bifiltration: " + violations.front());
  return BF;
}

Bifiltration load_bifiltration_json(const std::string& path) {
  return parse_bifiltration_json(load_json_file(path));
}

AnalysisResult make_analysis(const FiltrationHomology& fh, const Filtration& F,
                             json settings, const std::string& measure_mode) {
  AnalysisResult ar;
  ar.field = fh.p;
  ar.steps = fh.steps;
  ar.settings = std::move(settings);
  ar.betti_per_step = fh.betti_per_step;
  ar.param_values = F.param_values;
  ar.measure_mode = measure_mode;
  for (const auto& g : fh.generators) {
    AnalysisResult::Generator out;
    out.dim = g.dim;
    out.slot = g.slot;
    out.birth = g.birth;
    out.death = g.death;
    out.persistence = g.persistence;
    const CellComplex& K = F.steps[g.slot - 1];
    for (std::size_t i = 0; i < g.cycle.size(); ++i)
      if (g.cycle[i] != 0) out.representative.emplace_back(K.cell(g.dim, i).id, g.cycle[i]);
    ar.generators.push_back(std::move(out));
  }
  return ar;
}

json cache_json(const AnalysisResult& ar) {
  json j;
  j["schema"] = 1;
  j["kind"] = "fhg-cache";
  j["field"] = ar.field;
  j["steps"] = ar.steps;
  j["settings"] = ar.settings;
  j["betti_per_step"] = ar.betti_per_step;
  j["param_values"] = ar.param_values;
  j["measure_mode"] = ar.measure_mode;
  json gens = json::array();
  for (const auto& g : ar.generators) {
    json rep = json::array();
    for (const auto& [id, c] : g.representative) rep.push_back({id, c});
    gens.push_back({{"dim", g.dim},
                    {"slot", g.slot},
                    {"birth", g.birth},
                    {"death", g.death},
                    {"persistence", g.persistence},
                    {"representative_cells", rep}});
  }
  j["generators"] = gens;
  return j;
}

AnalysisResult parse_cache(const json& j) {
  if (!j.is_object() || j.value("kind", "") != "fhg-cache" || j.value("schema", 0) != 1)
    throw std::runtime_error("cache: not a schema-1 fhg cache");
  AnalysisResult ar;
  try {
    ar.field = j.at("field").get<Scalar>();
    ar.steps = j.at("steps").get<std::size_t>();
    ar.settings = j.at("settings");
    ar.betti_per_step = j.at("betti_per_step").get<std::vector<std::vector<std::size_t>>>();
    ar.param_values = j.at("param_values").get<std::vector<double>>();
    ar.measure_mode = j.at("measure_mode").get<std::string>();
    for (const auto& jg : j.at("generators")) {
      AnalysisResult::Generator g;
      g.dim = jg.at("dim").get<int>();
      g.slot = jg.at("slot").get<std::size_t>();
      g.birth = jg.at("birth").get<std::size_t>();
      g.death = jg.at("death").get<std::size_t>();
      g.persistence = jg.at("persistence").get<std::size_t>();
      for (const auto& jr : jg.at("representative_cells"))
        g.representative.emplace_back(jr[0].get<std::string>(), jr[1].get<Scalar>());
      ar.generators.push_back(std::move(g));
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("cache: malformed content: ") + e.what());
  }
  return ar;
}

AnalysisResult load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cache: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("cache: malformed JSON: ") + e.what());
  }
  return parse_cache(j);
}

namespace {

json param_or_inf(double v, bool finite) {
  if (!finite) return "inf";
  return v;
}

}  // namespace

json report_json(const AnalysisResult& ar, std::size_t p) {
  json j;
  j["schema"] = 1;
  j["settings"] = ar.settings;
  j["settings"]["field"] = ar.field;
  j["settings"]["p"] = p;
  j["settings"]["measure"] = ar.measure_mode;
  j["betti_per_step"] = ar.betti_per_step;

  json gens = json::array();
  for (const auto& g : ar.generators) {
    json rep = json::array();
    for (const auto& [id, c] : g.representative) rep.push_back({id, c});
    gens.push_back({{"dim", g.dim},
                    {"slot", g.slot},
                    {"birth", g.birth},
                    {"death", g.death},
                    {"persistence", g.persistence},
                    {"representative_cells", rep}});
  }
  j["filtration_homology"] = gens;

  int max_dim = 0;
  for (const auto& g : ar.generators) max_dim = std::max(max_dim, g.dim);
  for (const auto& row : ar.betti_per_step)
    max_dim = std::max(max_dim, static_cast<int>(row.size()) - 1);
  json rank_h = json::object(), rank_n = json::object(), rank_p = json::object();
  for (int d = 0; d <= max_dim; ++d) {
    std::size_t h = 0, noise = 0;
    for (const auto& g : ar.generators)
      if (g.dim == d) {
        ++h;
        if (g.persistence < p) ++noise;
      }
    const std::string key = std::to_string(d);
    rank_h[key] = h;
    rank_n[key] = noise;
    rank_p[key] = h - noise;
  }
  j["ranks"] = {{"H", rank_h}, {"noise_p", rank_n}, {"persistent_p", rank_p}};

  json idx = json::array(), par = json::array();
  for (const auto& g : ar.generators) {
    idx.push_back({g.dim, g.birth, g.death});
    if (!ar.param_values.empty()) {
      bool finite = g.death <= ar.steps;
      double bp = ar.param_values[g.birth - 1];
      double dp = finite ? ar.param_values[g.death - 1]
                         : std::numeric_limits<double>::infinity();
      json entry = json::array();
      entry.push_back(g.dim);
      entry.push_back(bp);
      entry.push_back(param_or_inf(dp, finite));
      if (ar.measure_mode == "ratio") {
        if (bp <= 0)
          throw std::invalid_argument("report: ratio measure requires positive births");
        entry.push_back(finite ? json(dp / bp) : json("inf"));
      } else {
        entry.push_back(finite ? json(dp - bp) : json("inf"));
      }
      par.push_back(entry);
    }
  }
  j["barcode"] = {{"index", idx}, {"param", par}};
  return j;
}

std::string file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("file_hash: cannot open " + path);
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

std::string dump_report(const json& j) { return j.dump(2) + "\n"; }

}  // namespace topofilt
