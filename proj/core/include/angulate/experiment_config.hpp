#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "angulate/continuum.hpp"

namespace angulate {

enum class ExperimentKind {
  invariant_suite,
  profile_universality,
  two_point_scaling,
  ball_volume,
  ise_tail,
  conjecture_gap,
};

std::string to_string(ExperimentKind kind);
ExperimentKind parse_experiment(const std::string& name);
const std::vector<ExperimentKind>& all_experiments();

// Which map family an experiment samples. automatic: rooted up to
// kPointedThreshold faces, pointed above.
enum class VariantChoice { automatic, rooted, pointed };

inline constexpr int kPointedThreshold = 10'000;

std::string to_string(VariantChoice v);
VariantChoice parse_variant_choice(const std::string& s);

struct ExperimentConfig {
  std::string name;  // experiment kind, e.g. "two-point-scaling"
  std::vector<int> p_values{2};
  std::vector<int> n_values{1000};
  int samples = 100;
  int grid = kDefaultGrid;
  std::uint64_t seed = 1;
  std::vector<double> radii;  // empty: derived by the experiment
  std::string output;         // directory for <name>.csv and <name>.json
  std::map<std::string, double> tolerances;
  VariantChoice variant = VariantChoice::automatic;

  int generator_faces = kDefaultGeneratorFaces;
  int replicas = 1000;
  int grid_replicas = 10;
  int centers = 10;
  double alpha = 1.0;
  double window_low = 0.05;
  double window_high = 0.3;
  std::int64_t pairs = 100'000;
  std::int64_t exhaustive_pairs = std::int64_t{1} << 22;
  int bootstrap = 1000;
  bool enumerate = false;
  bool inject_fault = false;

  ExperimentKind kind() const { return parse_experiment(name); }

  // Configured threshold, or the fallback.
  double tolerance(const std::string& key, double fallback) const;

  // Throws ParameterError on empty p/n lists, samples < 1, n not strictly
  // increasing, and similar.
  void validate() const;
};

// Desk-scale defaults for each experiment.
ExperimentConfig default_config(ExperimentKind kind);

// JSON object; "name" selects the defaults the other keys override. Unknown
// keys are rejected.
ExperimentConfig parse_config(const std::string& json_text);

// Every field, keys in a fixed order.
std::string config_to_json(const ExperimentConfig& cfg);

}  // namespace angulate
