#include "angulate/report.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <tuple>

#include "angulate/error.hpp"
#include "angulate/io.hpp"
#include "detail/config_json.hpp"

namespace angulate {

void StatReport::add(int p, int n, int samples, const std::string& variant, const std::string& stat,
                     double value) {
  rows.push_back({p, n, samples, config.seed, variant, stat, value});
}

const CheckResult& StatReport::check(const std::string& name, double value, double lower, double upper,
                                     std::string detail) {
  CheckResult c;
  c.name = name;
  c.value = value;
  c.lower = lower;
  c.upper = upper;
  c.passed = !std::isnan(value) && value >= lower && value <= upper;
  c.detail = std::move(detail);
  checks.push_back(std::move(c));
  return checks.back();
}

bool StatReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

double StatReport::value(int p, int n, const std::string& stat) const {
  for (const auto& r : rows) {
    if (r.p == p && r.n == n && r.stat == stat) return r.value;
  }
  throw ParameterError("report has no row p=" + std::to_string(p) + " n=" + std::to_string(n) +
                       " stat=" + stat);
}

std::vector<StatRow> StatReport::sorted_rows() const {
  std::vector<StatRow> out = rows;
  std::stable_sort(out.begin(), out.end(), [](const StatRow& a, const StatRow& b) {
    return std::tie(a.p, a.n, a.variant, a.stat) < std::tie(b.p, b.n, b.variant, b.stat);
  });
  return out;
}

void write_csv(std::ostream& out, const StatReport& report) {
  out << "p,n,samples,seed,variant,stat,value\n";
  for (const auto& r : report.sorted_rows()) {
    out << r.p << ',' << r.n << ',' << r.samples << ',' << r.seed << ',' << r.variant << ',' << r.stat
        << ',' << format_number(r.value) << '\n';
  }
}

namespace {

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

void write_json(std::ostream& out, const StatReport& report) {
  nlohmann::ordered_json j;
  j["experiment"] = report.experiment;
  j["config"] = detail::config_json(report.config);
  nlohmann::ordered_json values = nlohmann::ordered_json::object();
  for (const auto& r : report.sorted_rows()) {
    values["p" + std::to_string(r.p) + "/n" + std::to_string(r.n) + "/" + r.stat] = number(r.value);
  }
  j["values"] = values;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["value"] = number(c.value);
    cj["lower"] = number(c.lower);
    cj["upper"] = number(c.upper);
    cj["passed"] = c.passed;
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = checks;
  j["warnings"] = report.warnings;
  j["passed"] = report.passed();
  out << j.dump(2) << '\n';
}

}  // namespace angulate
