#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "angulate/continuum.hpp"
#include "angulate/error.hpp"
#include "angulate/experiments.hpp"
#include "angulate/io.hpp"
#include "angulate/map_metric.hpp"
#include "angulate/mobile.hpp"
#include "angulate/planar_map.hpp"
#include "angulate/sampler.hpp"

namespace fs = std::filesystem;
using namespace angulate;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Usage problems detected after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to a sibling temp file and renames it into place; "-" is stdout.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    if (!out) throw Error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_report(const MapReport& report) {
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << '\n';
  }
}

struct Common {
  int p = 2;
  int faces = 0;
  std::uint64_t seed = 0;
  std::string variant = "rooted";
  std::string out = "-";
};

Mobile draw_mobile(const Common& c, RngStream& rng) {
  const Variant v = parse_variant(c.variant == "pointed" ? "free" : c.variant);
  return sample_mobile(c.p, c.faces, v, rng);
}

PlanarMap map_for(const Mobile& m) {
  return m.variant() == Variant::rooted ? build_map(m) : build_pointed_map(m).map;
}

int cmd_sample_mobile(const Common& c) {
  RngStream rng(c.seed, 0);
  const Mobile m = draw_mobile(c, rng);
  std::ostringstream ss;
  write_mobile(ss, m);
  write_output(c.out, ss.str());
  if (c.out != "-") {
    std::cout << "mobile p=" << c.p << " n=" << c.faces << " variant=" << to_string(m.variant())
              << " whites=" << m.tree().white_count() << '\n';
  }
  return 0;
}

int cmd_sample_map(const Common& c) {
  RngStream rng(c.seed, 0);
  const Mobile m = draw_mobile(c, rng);
  const PlanarMap map = map_for(m);
  std::ostringstream ss;
  write_map(ss, map);
  write_output(c.out, ss.str());
  const MapReport report = validate_map(map, m);
  std::ostream& log = c.out == "-" ? std::cerr : std::cout;
  log << "map p=" << c.p << " n=" << c.faces << " variant=" << (m.variant() == Variant::rooted ? "rooted" : "pointed")
      << " vertices=" << map.vertex_count() << " edges=" << map.edge_count()
      << (report.ok() ? " ok" : " INVALID") << '\n';
  if (!report.ok()) {
    const MapCheck* f = report.first_failure();
    log << "FAIL " << f->name << ": " << f->detail << '\n';
    return kExitCheckFailed;
  }
  return 0;
}

int cmd_validate(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  if (text.rfind("PMOBILE", 0) == 0) {
    Mobile m = [&] {
      try {
        return read_mobile(in);
      } catch (const Error& e) {
        std::cout << "FAIL mobile: " << e.what() << '\n';
        throw;
      }
    }();
    std::cout << "PASS mobile: p=" << m.p() << " n=" << m.black_count() << " variant=" << to_string(m.variant())
              << '\n';
    const MapReport report = validate_map(map_for(m), m);
    print_report(report);
    return report.ok() ? 0 : kExitCheckFailed;
  }
  if (text.rfind("PMAP", 0) == 0) {
    MapFile f;
    try {
      f = read_map(in);
    } catch (const FormatError& e) {
      std::cout << "FAIL format: " << e.what() << '\n';
      return kExitCheckFailed;
    }
    const MapReport report = validate_map_file(f);
    print_report(report);
    return report.ok() ? 0 : kExitCheckFailed;
  }
  std::cout << "FAIL format: " << path << " is neither PMOBILE 1 nor PMAP 1\n";
  return kExitCheckFailed;
}

int cmd_enumerate(const Common& c) {
  const auto all = enumerate_mobiles(c.p, c.faces, parse_variant(c.variant == "pointed" ? "free" : c.variant));
  std::ostringstream ss;
  ss << "count " << all.size() << '\n';
  for (const auto& m : all) ss << contour(m).canonical() << '\n';
  write_output(c.out, ss.str());
  return 0;
}

int cmd_metric(const Common& c, const std::vector<int>& radii, std::int64_t pairs, const std::string& format) {
  RngStream rng(c.seed, 0);
  const Mobile m = draw_mobile(c, rng);
  const PlanarMap map = map_for(m);
  const ContourPair cp = contour(m);
  const std::int64_t len = static_cast<std::int64_t>(cp.heights.size());
  const Lemma31Report lr = verify_lemma31(map, cp, len * len <= pairs ? len * len : pairs, rng);
  const DistanceField root = bfs(map, kRootVertex);

  std::vector<std::pair<std::string, double>> stats = {
      {"vertices", map.vertex_count()},
      {"edges", map.edge_count()},
      {"root_eccentricity", eccentricity(root)},
      {"diameter_lower_bound", diameter_lower_bound(map, kRootVertex)},
      {"lemma31_pairs", static_cast<double>(lr.pairs_checked)},
      {"lemma31_violations", static_cast<double>(lr.violations)},
      {"lemma31_exhaustive", lr.exhaustive ? 1 : 0},
  };
  for (int r : radii) stats.emplace_back("ball_count[r=" + std::to_string(r) + "]", ball_count(root, r));

  std::ostringstream ss;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["p"] = c.p;
    j["n"] = c.faces;
    j["seed"] = c.seed;
    j["variant"] = c.variant;
    for (const auto& [k, v] : stats) j["values"][k] = v;
    ss << j.dump(2) << '\n';
  } else {
    ss << "p,n,seed,stat,value\n";
    for (const auto& [k, v] : stats) {
      ss << c.p << ',' << c.faces << ',' << c.seed << ',' << k << ',' << format_number(v) << '\n';
    }
  }
  write_output(c.out, ss.str());
  if (lr.violations > 0) {
    std::cerr << "FAIL lemma31: " << lr.violations << " violations, first at (" << lr.first_i << ", "
              << lr.first_j << ")\n";
    return kExitCheckFailed;
  }
  return 0;
}

int cmd_excursion(int grid, int generator, std::uint64_t seed, const std::string& out,
                  const std::string& dstar_out) {
  RngStream rng(seed, 0);
  const LabeledExcursion x = sample_labeled_excursion(grid, rng, generator);
  std::ostringstream ss;
  write_excursion_csv(ss, x);
  write_output(out, ss.str());
  if (!dstar_out.empty()) {
    std::ostringstream ms;
    write_matrix_csv(ms, grid_dstar(x), GridDistance::star);
    write_output(dstar_out, ms.str());
  }
  return 0;
}

struct ExperimentFlags {
  std::string name;
  std::string config;
  std::vector<int> p;
  std::vector<int> faces;
  int samples = 0;
  int grid = 0;
  std::vector<double> radii;
  std::string variant;
  std::string out;
  std::string format = "both";
};

int cmd_experiment(const ExperimentFlags& f, CLI::App& sub, int threads) {
  ExperimentConfig cfg;
  if (!f.config.empty()) {
    cfg = parse_config(read_file(f.config));
    if (!f.name.empty() && f.name != cfg.name) {
      throw UsageError("experiment '" + f.name + "' does not match config name '" + cfg.name + "'");
    }
  } else {
    if (f.name.empty()) throw UsageError("experiment needs a name or --config");
    cfg = default_config(parse_experiment(f.name));
  }
  if (sub.count("--p")) cfg.p_values = f.p;
  if (sub.count("--faces")) cfg.n_values = f.faces;
  if (sub.count("--samples")) {
    cfg.samples = f.samples;
    cfg.replicas = f.samples;
  }
  if (sub.count("--grid")) cfg.grid = f.grid;
  if (sub.count("--radii")) cfg.radii = f.radii;
  if (sub.count("--variant")) cfg.variant = parse_variant_choice(f.variant);
  if (sub.count("--seed")) cfg.seed = sub.get_option("--seed")->as<std::uint64_t>();
  if (sub.count("--out")) cfg.output = f.out;
  if (std::getenv("CI") && !sub.count("--seed") && f.config.empty()) {
    throw UsageError("CI mode: experiment needs an explicit --seed");
  }
  cfg.validate();

  const StatReport report = run_experiment(cfg, RunOptions{threads});
  const std::string dir = cfg.output.empty() ? "." : cfg.output;
  if (f.format == "csv" || f.format == "both") {
    std::ostringstream ss;
    write_csv(ss, report);
    write_output((fs::path(dir) / (cfg.name + ".csv")).string(), ss.str());
  }
  if (f.format == "json" || f.format == "both") {
    std::ostringstream ss;
    write_json(ss, report);
    write_output((fs::path(dir) / (cfg.name + ".json")).string(), ss.str());
  }
  for (const auto& w : report.warnings) std::cout << "WARN " << w << '\n';
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  return report.passed() ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random 2p-angulations through labelled mobiles"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_option("--threads", threads, "Worker threads for experiments")->check(CLI::PositiveNumber);

  Common c;
  auto add_common = [&](CLI::App* s, bool seeded) {
    s->add_option("--p", c.p, "Half face degree p >= 2")->check(CLI::Range(2, 1000));
    s->add_option("--faces", c.faces, "Number of faces n")->required()->check(CLI::PositiveNumber);
    if (seeded) s->add_option("--seed", c.seed, "Master seed")->required();
    s->add_option("--out", c.out, "Output file, - for stdout");
  };

  auto* s_mobile = app.add_subcommand("sample-mobile", "Sample a uniform mobile (PMOBILE 1)");
  add_common(s_mobile, true);
  s_mobile->add_option("--variant", c.variant, "rooted or free")->check(CLI::IsMember({"rooted", "free"}));

  auto* s_map = app.add_subcommand("sample-map", "Sample a uniform 2p-angulation (PMAP 1)");
  add_common(s_map, true);
  s_map->add_option("--variant", c.variant, "rooted or pointed")
      ->check(CLI::IsMember({"rooted", "pointed", "free"}));

  std::string validate_path;
  auto* s_validate = app.add_subcommand("validate", "Check a PMOBILE or PMAP file");
  s_validate->add_option("file", validate_path, "Input file")->required()->check(CLI::ExistingFile);

  auto* s_enum = app.add_subcommand("enumerate", "List every mobile of a given size");
  add_common(s_enum, false);
  s_enum->add_option("--variant", c.variant, "rooted or free")->check(CLI::IsMember({"rooted", "free"}));

  std::vector<int> metric_radii;
  std::int64_t metric_pairs = 100'000;
  std::string format = "csv";
  auto* s_metric = app.add_subcommand("metric", "Distance statistics of one sampled map");
  add_common(s_metric, true);
  s_metric->add_option("--variant", c.variant, "rooted or pointed")
      ->check(CLI::IsMember({"rooted", "pointed", "free"}));
  s_metric->add_option("--radii", metric_radii, "Ball radii around the root vertex")->delimiter(',');
  s_metric->add_option("--pairs", metric_pairs, "Contour pairs checked when not exhaustive")
      ->check(CLI::PositiveNumber);
  s_metric->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  ExperimentFlags ef;
  std::uint64_t exp_seed = 0;
  auto* s_exp = app.add_subcommand("experiment", "Run a Monte Carlo campaign");
  s_exp->add_option("name", ef.name, "invariant-suite, profile-universality, two-point-scaling, "
                                     "ball-volume, ise-tail or conjecture-gap");
  s_exp->add_option("--config", ef.config, "JSON config; flags override it")->check(CLI::ExistingFile);
  s_exp->add_option("--p", ef.p, "p values")->delimiter(',');
  s_exp->add_option("--faces", ef.faces, "n values, strictly increasing")->delimiter(',');
  s_exp->add_option("--samples", ef.samples, "Maps or replicas per configuration")->check(CLI::PositiveNumber);
  s_exp->add_option("--grid", ef.grid, "Grid resolution m")->check(CLI::PositiveNumber);
  s_exp->add_option("--radii", ef.radii, "Radius or eps ladder")->delimiter(',');
  s_exp->add_option("--variant", ef.variant, "auto, rooted or pointed")
      ->check(CLI::IsMember({"auto", "rooted", "pointed"}));
  s_exp->add_option("--seed", exp_seed, "Master seed");
  s_exp->add_option("--out", ef.out, "Output directory");
  s_exp->add_option("--format", ef.format, "csv, json or both")->check(CLI::IsMember({"csv", "json", "both"}));

  int ex_grid = kDefaultGrid;
  int ex_faces = kDefaultGeneratorFaces;
  std::uint64_t ex_seed = 0;
  std::string ex_out = "-";
  std::string ex_dstar;
  auto* s_exc = app.add_subcommand("excursion", "Sample a re-rooted labelled excursion (CSV t,e,z)");
  s_exc->add_option("--grid", ex_grid, "Grid resolution m")->check(CLI::Range(2, 1 << 24));
  s_exc->add_option("--faces", ex_faces, "Generator mobile size")->check(CLI::PositiveNumber);
  s_exc->add_option("--seed", ex_seed, "Master seed")->required();
  s_exc->add_option("--out", ex_out, "Output CSV, - for stdout");
  s_exc->add_option("--dstar", ex_dstar, "Also write the D* matrix as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*s_mobile) return cmd_sample_mobile(c);
    if (*s_map) return cmd_sample_map(c);
    if (*s_validate) return cmd_validate(validate_path);
    if (*s_enum) return cmd_enumerate(c);
    if (*s_metric) return cmd_metric(c, metric_radii, metric_pairs, format);
    if (*s_exp) return cmd_experiment(ef, *s_exp, threads);
    if (*s_exc) return cmd_excursion(ex_grid, ex_faces, ex_seed, ex_out, ex_dstar);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParameterError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
