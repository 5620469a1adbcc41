// topofilt: homology groups of filtrations from images, point clouds, and
// abstract fixtures, with persistence thresholding and stability checks.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "topofilt/cloud.hpp"
#include "topofilt/diagram.hpp"
#include "topofilt/groups.hpp"
#include "topofilt/image.hpp"
#include "topofilt/jsonio.hpp"
#include "topofilt/multiparam.hpp"
#include "topofilt/reduction.hpp"

using nlohmann::json;
using namespace topofilt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCache = 3;

struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename T>
std::vector<T> parse_list(const std::string& s, const std::string& flag) {
  std::vector<T> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      if constexpr (std::is_same_v<T, int>)
        out.push_back(std::stoi(item));
      else if constexpr (std::is_same_v<T, std::size_t>)
        out.push_back(static_cast<std::size_t>(std::stoull(item)));
      else
        out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw std::runtime_error(flag + ": cannot parse '" + item + "'");
    }
  }
  if (out.empty()) throw std::runtime_error(flag + ": empty list");
  return out;
}

void emit(const json& report, const std::string& out_path) {
  std::string text = dump_report(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
}

void verify_against_reduction(const FiltrationHomology& fh, const Filtration& F) {
  std::vector<IndexInterval> oracle = reduction_barcode(F);
  std::vector<IndexInterval> ours;
  for (const auto& g : fh.generators) ours.push_back({g.dim, g.birth, g.death});
  std::sort(ours.begin(), ours.end());
  if (ours != oracle)
    throw std::logic_error("--verify: slot-kernel barcode disagrees with reduction");
}

void write_cache_if_requested(const AnalysisResult& ar, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write cache " + path);
  out << cache_json(ar).dump(2) << "\n";
}

struct CommonOpts {
  Scalar field = 2;
  std::size_t p = 1;
  std::string out, cache;
  bool verify = false;
};

int run_filtration_pipeline(const Filtration& F, json settings,
                            const std::string& measure, const CommonOpts& opt) {
  FiltrationHomology fh = filtration_homology(F);
  if (opt.verify) verify_against_reduction(fh, F);
  AnalysisResult ar = make_analysis(fh, F, std::move(settings), measure);
  emit(report_json(ar, opt.p), opt.out);
  write_cache_if_requested(ar, opt.cache);
  return kExitOk;
}

int run_image(const std::string& path, const std::string& thresholds_flag,
              const CommonOpts& opt) {
  GrayscaleImage img = read_pgm(path);
  std::vector<int> thresholds = thresholds_flag.empty()
                                    ? default_thresholds(img)
                                    : parse_list<int>(thresholds_flag, "--thresholds");
  Filtration F = threshold_filtration(img, thresholds, opt.field);
  json settings = {{"command", "image"},
                   {"input", path},
                   {"input_hash", file_hash(path)},
                   {"thresholds", thresholds}};
  return run_filtration_pipeline(F, std::move(settings), "diff", opt);
}

int run_cloud(const std::string& path, const std::string& radii_flag, int max_dim,
              const std::string& measure, const CommonOpts& opt) {
  PointCloud cloud = read_cloud_csv(path);
  std::vector<double> radii = parse_list<double>(radii_flag, "--radii");
  Filtration F = rips_filtration(cloud, radii, max_dim, opt.field);
  json settings = {{"command", "cloud"},
                   {"input", path},
                   {"input_hash", file_hash(path)},
                   {"radii", radii},
                   {"max_dim", max_dim}};
  return run_filtration_pipeline(F, std::move(settings), measure, opt);
}

int run_complex(const std::string& path, const CommonOpts& opt) {
  Filtration F = load_filtration_json(path);
  json settings = {{"command", "complex"}, {"input", path}, {"input_hash", file_hash(path)}};
  return run_filtration_pipeline(F, std::move(settings), "diff", opt);
}

json bifiltration_report(const BifiltrationHomology& bh, std::size_t p, std::size_t q,
                         json settings) {
  BipersistentRanks ranks = persistent_group_of_bifiltration(bh, p, q);
  json j;
  j["schema"] = 1;
  j["settings"] = std::move(settings);
  j["settings"]["p"] = p;
  j["settings"]["q"] = q;
  json rank_h = json::object(), rank_n = json::object(), rank_p = json::object();
  for (const auto& [d, r] : ranks.rank_H) rank_h[std::to_string(d)] = r;
  for (const auto& [d, r] : ranks.rank_noise) rank_n[std::to_string(d)] = r;
  for (const auto& [d, r] : ranks.rank_persistent) rank_p[std::to_string(d)] = r;
  j["ranks"] = {{"H", rank_h}, {"noise_pq", rank_n}, {"persistent_pq", rank_p}};

  json slots = json::array();
  for (const auto& [key, slot] : bh.slots) {
    auto [n, m, d] = key;
    if (slot.dim() == 0) continue;
    json corners = json::array();
    for (const auto& x : slot.basis) {
      auto [cp, cq] = bipersistence_region(bh, n, m, d, x);
      corners.push_back({cp, cq});
    }
    slots.push_back({{"n", n}, {"m", m}, {"dim", d}, {"rank", slot.dim()},
                     {"corners", corners}});
  }
  j["slots"] = slots;
  return j;
}

int run_bicloud(const std::string& path, const std::string& radii_flag,
                const std::string& density_flag, double density_radius, int max_dim,
                std::size_t p, std::size_t q, const CommonOpts& opt) {
  PointCloud cloud = read_cloud_csv(path);
  std::vector<double> radii = parse_list<double>(radii_flag, "--radii");
  std::vector<std::size_t> density =
      parse_list<std::size_t>(density_flag, "--density-thresholds");
  Bifiltration BF = density_radius_bifiltration(cloud, radii, density, density_radius,
                                                max_dim, opt.field);
  BifiltrationHomology bh = bifiltration_homology(BF);
  json settings = {{"command", "bicloud"},
                   {"input", path},
                   {"input_hash", file_hash(path)},
                   {"radii", radii},
                   {"density_thresholds", density},
                   {"density_radius", density_radius},
                   {"max_dim", max_dim},
                   {"field", opt.field}};
  emit(bifiltration_report(bh, p, q, std::move(settings)), opt.out);
  return kExitOk;
}

int run_bicomplex(const std::string& path, std::size_t p, std::size_t q,
                  const CommonOpts& opt) {
  Bifiltration BF = load_bifiltration_json(path);
  BifiltrationHomology bh = bifiltration_homology(BF);
  json settings = {{"command", "bicomplex"},
                   {"input", path},
                   {"input_hash", file_hash(path)},
                   {"field", BF.grid.empty() ? opt.field : BF.grid.front().field()}};
  emit(bifiltration_report(bh, p, q, std::move(settings)), opt.out);
  return kExitOk;
}

int run_rethreshold(const std::string& cache_path, std::size_t p,
                    const std::string& out_path) {
  AnalysisResult ar;
  try {
    ar = load_cache(cache_path);
  } catch (const std::exception& e) {
    throw CacheError(e.what());
  }
  emit(report_json(ar, p), out_path);
  return kExitOk;
}

int run_compare(const std::string& path_a, const std::string& path_b,
                const std::string& thresholds_flag, const std::string& out_path) {
  GrayscaleImage a = read_pgm(path_a);
  GrayscaleImage b = read_pgm(path_b);
  std::vector<int> thresholds;
  if (!thresholds_flag.empty())
    thresholds = parse_list<int>(thresholds_flag, "--thresholds");
  StabilityReport rep = stability_report(a, b, thresholds);

  auto diagram_json = [](const PersistenceDiagram& D) {
    json pts = json::array();
    for (const auto& pt : D.points) {
      json entry = json::array();
      entry.push_back(pt.dim);
      entry.push_back(pt.birth_param);
      if (pt.death_finite)
        entry.push_back(pt.death_param);
      else
        entry.push_back("inf");
      pts.push_back(entry);
    }
    return pts;
  };

  json j;
  j["schema"] = 1;
  j["settings"] = {{"command", "compare"}, {"input_a", path_a}, {"input_b", path_b}};
  j["sup_norm"] = rep.sup_norm;
  json dist = json::object();
  for (std::size_t d = 0; d < rep.distance_per_dim.size(); ++d)
    dist[std::to_string(d)] = std::isinf(rep.distance_per_dim[d])
                                  ? json("inf")
                                  : json(rep.distance_per_dim[d]);
  j["bottleneck"] = dist;
  j["inequality_holds"] = rep.inequality_holds;
  j["diagram_a"] = diagram_json(rep.diagram_f);
  j["diagram_b"] = diagram_json(rep.diagram_g);
  emit(j, out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homology groups of filtrations with persistence thresholding"};
  app.require_subcommand(1);

  CommonOpts opt;
  std::string input, input_b, thresholds_flag, radii_flag, density_flag, measure = "diff";
  int max_dim = 2;
  std::size_t q = 1;
  double density_radius = 1.0;

  auto add_common = [&](CLI::App* cmd, bool with_cache = true) {
    cmd->add_option("--field", opt.field, "coefficient field prime (default 2)");
    cmd->add_option("--p", opt.p, "persistence threshold p");
    cmd->add_option("--out", opt.out, "report output path (default stdout)");
    if (with_cache) cmd->add_option("--cache", opt.cache, "write analysis cache (.fhg)");
    cmd->add_flag("--verify", opt.verify, "cross-check against the reduction barcode");
  };

  auto* c_image = app.add_subcommand("image", "threshold filtration of a PGM image");
  c_image->add_option("input", input, "PGM file (P2 or P5)")->required();
  c_image->add_option("--thresholds", thresholds_flag, "comma-separated thresholds");
  add_common(c_image);

  auto* c_cloud = app.add_subcommand("cloud", "Vietoris-Rips filtration of a CSV cloud");
  c_cloud->add_option("input", input, "CSV point cloud")->required();
  c_cloud->add_option("--radii", radii_flag, "comma-separated radii")->required();
  c_cloud->add_option("--max-dim", max_dim, "largest simplex dimension (default 2)");
  c_cloud->add_option("--measure", measure, "diff | ratio")
      ->check(CLI::IsMember({"diff", "ratio"}));
  add_common(c_cloud);

  auto* c_bicloud =
      app.add_subcommand("bicloud", "radius x density bifiltration of a CSV cloud");
  c_bicloud->add_option("input", input, "CSV point cloud")->required();
  c_bicloud->add_option("--radii", radii_flag, "comma-separated radii")->required();
  c_bicloud
      ->add_option("--density-thresholds", density_flag,
                   "decreasing neighbor-count thresholds")
      ->required();
  c_bicloud->add_option("--density-radius", density_radius, "neighbor-count radius")
      ->required();
  c_bicloud->add_option("--max-dim", max_dim, "largest simplex dimension (default 2)");
  c_bicloud->add_option("--q", q, "second persistence threshold q");
  add_common(c_bicloud, false);

  auto* c_complex = app.add_subcommand("complex", "abstract filtration fixture JSON");
  c_complex->add_option("input", input, "fixture JSON")->required();
  add_common(c_complex);

  auto* c_bicomplex =
      app.add_subcommand("bicomplex", "abstract bifiltration fixture JSON");
  c_bicomplex->add_option("input", input, "fixture JSON")->required();
  c_bicomplex->add_option("--q", q, "second persistence threshold q");
  add_common(c_bicomplex, false);

  auto* c_rethreshold =
      app.add_subcommand("rethreshold", "recompute N^p and H^p from a cache");
  c_rethreshold->add_option("--cache", input, "cache file (.fhg)")->required();
  c_rethreshold->add_option("--p", opt.p, "persistence threshold p")->required();
  c_rethreshold->add_option("--out", opt.out, "report output path");

  auto* c_compare = app.add_subcommand("compare", "stability report for two images");
  c_compare->add_option("input_a", input, "first PGM")->required();
  c_compare->add_option("input_b", input_b, "second PGM")->required();
  c_compare->add_option("--thresholds", thresholds_flag, "common threshold grid");
  c_compare->add_option("--out", opt.out, "report output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!is_prime(opt.field)) throw std::runtime_error("--field must be prime");
    if (c_image->parsed()) return run_image(input, thresholds_flag, opt);
    if (c_cloud->parsed()) return run_cloud(input, radii_flag, max_dim, measure, opt);
    if (c_bicloud->parsed())
      return run_bicloud(input, radii_flag, density_flag, density_radius, max_dim,
                         opt.p, q, opt);
    if (c_complex->parsed()) return run_complex(input, opt);
    if (c_bicomplex->parsed()) return run_bicomplex(input, opt.p, q, opt);
    if (c_rethreshold->parsed()) return run_rethreshold(input, opt.p, opt.out);
    if (c_compare->parsed()) return run_compare(input, input_b, thresholds_flag, opt.out);
  } catch (const CacheError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCache;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
