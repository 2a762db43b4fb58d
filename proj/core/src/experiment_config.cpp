#include "angulate/experiment_config.hpp"

#include <algorithm>
#include <string>

#include "angulate/error.hpp"
#include "detail/config_json.hpp"

namespace angulate {

namespace {

struct KindName {
  ExperimentKind kind;
  const char* name;
};

constexpr KindName kKinds[] = {
    {ExperimentKind::invariant_suite, "invariant-suite"},
    {ExperimentKind::profile_universality, "profile-universality"},
    {ExperimentKind::two_point_scaling, "two-point-scaling"},
    {ExperimentKind::ball_volume, "ball-volume"},
    {ExperimentKind::ise_tail, "ise-tail"},
    {ExperimentKind::conjecture_gap, "conjecture-gap"},
};

}  // namespace

std::string to_string(ExperimentKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k.name;
  }
  throw ParameterError("unknown experiment kind");
}

ExperimentKind parse_experiment(const std::string& name) {
  for (const auto& k : kKinds) {
    if (name == k.name) return k.kind;
  }
  std::string known;
  for (const auto& k : kKinds) known += std::string(known.empty() ? "" : ", ") + k.name;
  throw ParameterError("unknown experiment '" + name + "' (known: " + known + ")");
}

const std::vector<ExperimentKind>& all_experiments() {
  static const std::vector<ExperimentKind> kinds = [] {
    std::vector<ExperimentKind> v;
    for (const auto& k : kKinds) v.push_back(k.kind);
    return v;
  }();
  return kinds;
}

std::string to_string(VariantChoice v) {
  switch (v) {
    case VariantChoice::automatic: return "auto";
    case VariantChoice::rooted: return "rooted";
    case VariantChoice::pointed: return "pointed";
  }
  return "auto";
}

VariantChoice parse_variant_choice(const std::string& s) {
  if (s == "auto") return VariantChoice::automatic;
  if (s == "rooted") return VariantChoice::rooted;
  if (s == "pointed" || s == "free") return VariantChoice::pointed;
  throw ParameterError("variant must be auto, rooted or pointed, got '" + s + "'");
}

double ExperimentConfig::tolerance(const std::string& key, double fallback) const {
  const auto it = tolerances.find(key);
  return it == tolerances.end() ? fallback : it->second;
}

void ExperimentConfig::validate() const {
  parse_experiment(name);
  if (p_values.empty()) throw ParameterError("config: p_values must be nonempty");
  if (n_values.empty()) throw ParameterError("config: n_values must be nonempty");
  for (int p : p_values) {
    if (p < 2) throw ParameterError("config: every p must be >= 2");
  }
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < 1) throw ParameterError("config: every n must be >= 1");
    if (i && n_values[i] <= n_values[i - 1]) {
      throw ParameterError("config: n_values must be strictly increasing");
    }
  }
  if (samples < 1) throw ParameterError("config: samples must be >= 1");
  if (replicas < 1) throw ParameterError("config: replicas must be >= 1");
  if (grid_replicas < 0) throw ParameterError("config: grid_replicas must be >= 0");
  if (centers < 1) throw ParameterError("config: centers must be >= 1");
  if (grid < 2) throw ParameterError("config: grid must be >= 2");
  if (generator_faces < 1) throw ParameterError("config: generator_faces must be >= 1");
  if (!(alpha > 0)) throw ParameterError("config: alpha must be positive");
  if (!(window_low > 0 && window_low < window_high)) {
    throw ParameterError("config: window must satisfy 0 < low < high");
  }
  for (double r : radii) {
    if (!(r > 0)) throw ParameterError("config: radii must be positive");
  }
  if (pairs < 1 || exhaustive_pairs < 0) throw ParameterError("config: pair budgets must be positive");
  if (bootstrap < 0) throw ParameterError("config: bootstrap must be >= 0");
}

ExperimentConfig default_config(ExperimentKind kind) {
  ExperimentConfig c;
  c.name = to_string(kind);
  switch (kind) {
    case ExperimentKind::invariant_suite:
      c.p_values = {2, 3, 4};
      c.n_values = {200};
      c.samples = 100;
      c.tolerances = {{"max_violations", 0}};
      break;
    case ExperimentKind::profile_universality:
      c.p_values = {2, 3};
      c.n_values = {1 << 15};
      c.samples = 500;
      c.tolerances = {{"ks_max", 0.05}};
      break;
    case ExperimentKind::two_point_scaling:
      c.p_values = {2};
      c.n_values = {1 << 10, 1 << 11, 1 << 12, 1 << 13, 1 << 14, 1 << 15, 1 << 16};
      c.samples = 200;
      c.variant = VariantChoice::pointed;
      c.tolerances = {{"slope_low", 0.22}, {"slope_high", 0.28}};
      break;
    case ExperimentKind::ball_volume:
      c.p_values = {2};
      c.n_values = {1 << 16};
      c.samples = 100;
      c.variant = VariantChoice::pointed;
      c.tolerances = {{"slope_low", 3.5}, {"slope_high", 4.5}};
      break;
    case ExperimentKind::ise_tail:
      c.p_values = {2};
      c.n_values = {kDefaultGeneratorFaces};
      c.replicas = 10'000;
      c.radii = {0.125, 0.25, 0.5, 1.0};
      break;
    case ExperimentKind::conjecture_gap:
      c.p_values = {2};
      c.n_values = {1 << 12, 1 << 14, 1 << 16};
      c.samples = 20;
      c.grid = 64;
      c.variant = VariantChoice::pointed;
      break;
  }
  return c;
}

namespace {

template <class T>
void take(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParameterError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParameterError("config must be a JSON object");
  if (!j.contains("name")) throw ParameterError("config needs a \"name\" naming the experiment");

  static const char* known[] = {"name", "p_values", "n_values", "samples", "grid", "seed", "radii",
                                "output", "tolerances", "variant", "generator_faces", "replicas",
                                "grid_replicas", "centers", "alpha", "window", "pairs",
                                "exhaustive_pairs", "bootstrap", "enumerate", "inject_fault"};
  for (const auto& item : j.items()) {
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return item.key() == k; }) == std::end(known)) {
      throw ParameterError("config: unknown key \"" + item.key() + "\"");
    }
  }

  try {
    ExperimentConfig c = default_config(parse_experiment(j.at("name").get<std::string>()));
    take(j, "p_values", c.p_values);
    take(j, "n_values", c.n_values);
    take(j, "samples", c.samples);
    take(j, "grid", c.grid);
    take(j, "seed", c.seed);
    take(j, "radii", c.radii);
    take(j, "output", c.output);
    if (j.contains("tolerances")) {
      for (const auto& item : j.at("tolerances").items()) c.tolerances[item.key()] = item.value().get<double>();
    }
    if (j.contains("variant")) c.variant = parse_variant_choice(j.at("variant").get<std::string>());
    take(j, "generator_faces", c.generator_faces);
    take(j, "replicas", c.replicas);
    take(j, "grid_replicas", c.grid_replicas);
    take(j, "centers", c.centers);
    take(j, "alpha", c.alpha);
    if (j.contains("window")) {
      const auto w = j.at("window").get<std::vector<double>>();
      if (w.size() != 2) throw ParameterError("config: window must be [low, high]");
      c.window_low = w[0];
      c.window_high = w[1];
    }
    take(j, "pairs", c.pairs);
    take(j, "exhaustive_pairs", c.exhaustive_pairs);
    take(j, "bootstrap", c.bootstrap);
    take(j, "enumerate", c.enumerate);
    take(j, "inject_fault", c.inject_fault);
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("config has a field of the wrong type: ") + e.what());
  }
}

namespace detail {

nlohmann::ordered_json config_json(const ExperimentConfig& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["p_values"] = c.p_values;
  j["n_values"] = c.n_values;
  j["samples"] = c.samples;
  j["grid"] = c.grid;
  j["seed"] = c.seed;
  j["radii"] = c.radii;
  j["output"] = c.output;
  nlohmann::ordered_json tol = nlohmann::ordered_json::object();
  for (const auto& [k, v] : c.tolerances) tol[k] = v;
  j["tolerances"] = tol;
  j["variant"] = to_string(c.variant);
  j["generator_faces"] = c.generator_faces;
  j["replicas"] = c.replicas;
  j["grid_replicas"] = c.grid_replicas;
  j["centers"] = c.centers;
  j["alpha"] = c.alpha;
  j["window"] = {c.window_low, c.window_high};
  j["pairs"] = c.pairs;
  j["exhaustive_pairs"] = c.exhaustive_pairs;
  j["bootstrap"] = c.bootstrap;
  j["enumerate"] = c.enumerate;
  j["inject_fault"] = c.inject_fault;
  return j;
}

}  // namespace detail

std::string config_to_json(const ExperimentConfig& cfg) { return detail::config_json(cfg).dump(2); }

}  // namespace angulate
