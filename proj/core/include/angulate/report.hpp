#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "angulate/experiment_config.hpp"

namespace angulate {

// One measurement. n = 0 marks rows aggregated over all n of the run.
struct StatRow {
  int p = 0;
  int n = 0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::string variant;
  std::string stat;
  double value = 0;
};

// A configured threshold and its verdict. Unused bounds are infinite.
struct CheckResult {
  std::string name;
  double value = 0;
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  bool passed = false;
  std::string detail;
};

struct StatReport {
  std::string experiment;
  ExperimentConfig config;
  std::vector<StatRow> rows;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;

  void add(int p, int n, int samples, const std::string& variant, const std::string& stat, double value);

  // Closed interval [lower, upper]; NaN values fail.
  const CheckResult& check(const std::string& name, double value, double lower, double upper,
                           std::string detail = {});

  bool passed() const noexcept;

  // First row with this (p, n, stat); throws ParameterError when absent.
  double value(int p, int n, const std::string& stat) const;

  // Rows in canonical order: (p, n, variant, stat).
  std::vector<StatRow> sorted_rows() const;
};

// Header p,n,samples,seed,variant,stat,value; rows in canonical order.
void write_csv(std::ostream& out, const StatReport& report);

// {experiment, config, values, checks, warnings, passed}; values are keyed
// "p<p>/n<n>/<stat>".
void write_json(std::ostream& out, const StatReport& report);

}  // namespace angulate
