#include "angulate/experiments.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "angulate/continuum.hpp"
#include "angulate/error.hpp"
#include "angulate/io.hpp"
#include "angulate/map_metric.hpp"
#include "angulate/sampler.hpp"
#include "angulate/stats.hpp"

namespace angulate {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum StreamTag : std::uint64_t {
  tag_suite = 1,
  tag_universality,
  tag_two_point,
  tag_ball,
  tag_ise,
  tag_gap,
  tag_bootstrap = 100,
};

RngStream replica_stream(const ExperimentConfig& cfg, StreamTag tag, int p, int n, int i) {
  return RngStream(cfg.seed, tag).child(static_cast<std::uint64_t>(p)).child(static_cast<std::uint64_t>(n))
      .child(static_cast<std::uint64_t>(i));
}

RngStream bootstrap_stream(const ExperimentConfig& cfg, StreamTag tag, int p, int n) {
  return RngStream(cfg.seed, tag_bootstrap + tag).child(static_cast<std::uint64_t>(p))
      .child(static_cast<std::uint64_t>(n));
}

bool pointed_for(VariantChoice v, int n) {
  return v == VariantChoice::pointed || (v == VariantChoice::automatic && n > kPointedThreshold);
}

struct SampledMap {
  Mobile mobile;
  PlanarMap map;
};

SampledMap sample_map(int p, int n, bool pointed, RngStream& rng) {
  if (pointed) {
    Mobile m = sample_free_mobile(p, n, rng);
    PlanarMap map = build_pointed_map(m).map;
    return {std::move(m), std::move(map)};
  }
  Mobile m = sample_rooted_mobile(p, n, rng);
  PlanarMap map = build_map(m);
  return {std::move(m), std::move(map)};
}

std::string tagged(const std::string& stat, const char* key, double v) {
  return stat + "[" + key + "=" + format_number(v) + "]";
}

double strictly_below(double x) { return std::nextafter(x, -kInf); }
double strictly_above(double x) { return std::nextafter(x, kInf); }

StatReport new_report(const ExperimentConfig& cfg) {
  cfg.validate();
  StatReport r;
  r.experiment = cfg.name;
  r.config = cfg;
  return r;
}

void add_fit(StatReport& report, int p, int n, int samples, const std::string& variant,
             const std::string& prefix, const PowerLawFit& f) {
  report.add(p, n, samples, variant, prefix + "slope", f.slope);
  report.add(p, n, samples, variant, prefix + "slope_ci_low", f.ci_low);
  report.add(p, n, samples, variant, prefix + "slope_ci_high", f.ci_high);
  report.add(p, n, samples, variant, prefix + "intercept", f.intercept);
  report.add(p, n, samples, variant, prefix + "fit_points", f.points);
}

// Geometric ladder of `count` radii from lo to hi.
std::vector<double> geometric_ladder(double lo, double hi, int count) {
  std::vector<double> out;
  for (int k = 0; k < count; ++k) {
    out.push_back(lo * std::pow(hi / lo, static_cast<double>(k) / (count - 1)));
  }
  return out;
}

// ---------------------------------------------------------------- suite

constexpr const char* kMapChecks[] = {"size",  "vertex_count", "edge_count",  "connected",
                                      "label_parity", "face_count", "face_degree", "root_distance"};

struct SuiteResult {
  std::vector<std::string> failed;
  std::int64_t pairs = 0;
  std::int64_t violations = 0;
  bool exhaustive = false;
};

}  // namespace

PlanarMap corrupt_map(const PlanarMap& map) {
  std::vector<Edge> edges(map.edges().begin(), map.edges().end());
  if (edges.empty() || map.vertex_count() < 3) throw ParameterError("corrupt_map: map too small");
  // Same BFS parity as the tail, so the new edge breaks bipartiteness.
  const DistanceField d = bfs(map, kRootVertex);
  int w = 0;
  while (w < map.vertex_count() && (w == edges[0].u || d.dist[w] % 2 != d.dist[edges[0].u] % 2)) ++w;
  if (w == map.vertex_count()) throw ParameterError("corrupt_map: no vertex of matching parity");
  edges[0].v = w;
  std::vector<std::vector<int>> rotation;
  for (int v = 0; v < map.vertex_count(); ++v) {
    const auto r = map.rotation(v);
    rotation.emplace_back(r.begin(), r.end());
  }
  return PlanarMap(map.p(), map.faces_expected(), map.vertex_count(), std::move(edges),
                   std::vector<int>(map.corner_targets().begin(), map.corner_targets().end()),
                   std::move(rotation), map.root());
}

StatReport exp_invariant_suite(const ExperimentConfig& cfg, const RunOptions& opts) {
  StatReport report = new_report(cfg);
  const double max_violations = cfg.tolerance("max_violations", 0);
  for (int p : cfg.p_values) {
    for (int n : cfg.n_values) {
      const bool pointed = pointed_for(cfg.variant, n);
      const std::string variant = std::string(pointed ? "pointed" : "rooted") + (cfg.enumerate ? "-all" : "");
      std::vector<Mobile> all;
      if (cfg.enumerate) all = enumerate_mobiles(p, n, pointed ? Variant::free : Variant::rooted);
      const int count = cfg.enumerate ? static_cast<int>(all.size()) : cfg.samples;

      const auto results = run_replicas<SuiteResult>(count, opts.threads, [&](int i) {
        RngStream rng = replica_stream(cfg, tag_suite, p, n, i);
        Mobile mob = cfg.enumerate ? all[static_cast<std::size_t>(i)]
                     : pointed     ? sample_free_mobile(p, n, rng)
                                   : sample_rooted_mobile(p, n, rng);
        PlanarMap map = pointed ? build_pointed_map(mob).map : build_map(mob);
        if (cfg.inject_fault && i == 0) map = corrupt_map(map);
        SuiteResult r;
        const MapReport rep = validate_map(map, mob);
        for (const auto& c : rep.checks) {
          if (!c.passed) r.failed.push_back(c.name);
        }
        const std::int64_t len = static_cast<std::int64_t>(p) * n + 1;
        const std::int64_t budget = len * len <= cfg.exhaustive_pairs ? len * len : cfg.pairs;
        const Lemma31Report lr = verify_lemma31(map, contour(mob), budget, rng);
        r.pairs = lr.pairs_checked;
        r.violations = lr.violations;
        r.exhaustive = lr.exhaustive;
        return r;
      });

      std::int64_t failed_maps = 0, pairs = 0, violations = 0, exhaustive = 0;
      std::vector<std::int64_t> per_check(std::size(kMapChecks), 0);
      for (const auto& r : results) {
        failed_maps += r.failed.empty() ? 0 : 1;
        pairs += r.pairs;
        violations += r.violations;
        exhaustive += r.exhaustive ? 1 : 0;
        for (const auto& name : r.failed) {
          for (std::size_t k = 0; k < std::size(kMapChecks); ++k) {
            if (name == kMapChecks[k]) ++per_check[k];
          }
        }
      }
      report.add(p, n, count, variant, "maps", count);
      report.add(p, n, count, variant, "maps_failed", static_cast<double>(failed_maps));
      for (std::size_t k = 0; k < std::size(kMapChecks); ++k) {
        report.add(p, n, count, variant, std::string("failed_") + kMapChecks[k],
                   static_cast<double>(per_check[k]));
      }
      report.add(p, n, count, variant, "lemma31_pairs", static_cast<double>(pairs));
      report.add(p, n, count, variant, "lemma31_violations", static_cast<double>(violations));
      report.add(p, n, count, variant, "lemma31_exhaustive_maps", static_cast<double>(exhaustive));
      const std::string where = " p=" + std::to_string(p) + " n=" + std::to_string(n);
      report.check("map_invariants" + where, static_cast<double>(failed_maps), -kInf, max_violations,
                   std::to_string(failed_maps) + " of " + std::to_string(count) + " maps failed a check");
      report.check("lemma31" + where, static_cast<double>(violations), -kInf, max_violations,
                   std::to_string(violations) + " violations over " + std::to_string(pairs) + " pairs");
    }
  }
  return report;
}

// ---------------------------------------------------------------- universality

namespace {

using Histogram = std::vector<std::int64_t>;

void add_into(Histogram& into, const Histogram& h) {
  if (into.size() < h.size()) into.resize(h.size(), 0);
  for (std::size_t d = 0; d < h.size(); ++d) into[d] += h[d];
}

struct Weighted {
  std::vector<double> x;
  std::vector<double> w;
};

Weighted weighted(const Histogram& h, double scale) {
  Weighted out;
  for (std::size_t d = 0; d < h.size(); ++d) {
    if (h[d] == 0) continue;
    out.x.push_back(scale * static_cast<double>(d));
    out.w.push_back(static_cast<double>(h[d]));
  }
  return out;
}

double hist_quantile(const Histogram& h, double q) {
  std::int64_t total = 0;
  for (auto c : h) total += c;
  const double target = q * static_cast<double>(total);
  std::int64_t run = 0;
  for (std::size_t d = 0; d < h.size(); ++d) {
    run += h[d];
    if (static_cast<double>(run) >= target && h[d] > 0) return static_cast<double>(d);
  }
  return static_cast<double>(h.size()) - 1;
}

double ks_hist(const Histogram& a, double sa, const Histogram& b, double sb) {
  const Weighted wa = weighted(a, sa);
  const Weighted wb = weighted(b, sb);
  return ks_distance_weighted(wa.x, wa.w, wb.x, wb.w);
}

}  // namespace

StatReport exp_profile_universality(const ExperimentConfig& cfg, const RunOptions& opts) {
  StatReport report = new_report(cfg);
  if (cfg.p_values.size() < 2) throw ParameterError("profile-universality needs at least two p values");
  const double ks_max = cfg.tolerance("ks_max", 0.05);
  if (cfg.samples < 100) {
    report.warnings.push_back("fewer than 100 maps per p: KS distances carry wide sampling error");
  }
  for (int n : cfg.n_values) {
    const bool pointed = pointed_for(cfg.variant, n);
    const std::string variant = pointed ? "pointed" : "rooted";
    std::vector<Histogram> pooled;
    std::vector<double> scale;
    for (int p : cfg.p_values) {
      const auto hists = run_replicas<Histogram>(cfg.samples, opts.threads, [&](int i) {
        RngStream rng = replica_stream(cfg, tag_universality, p, n, i);
        const SampledMap s = sample_map(p, n, pointed, rng);
        const DistanceField f = bfs(s.map, kRootVertex);
        Histogram h(static_cast<std::size_t>(eccentricity(f)) + 1, 0);
        for (int d : f.dist) ++h[static_cast<std::size_t>(d)];
        return h;
      });
      Histogram all, first, second;
      for (std::size_t i = 0; i < hists.size(); ++i) {
        add_into(all, hists[i]);
        add_into(2 * i < hists.size() ? first : second, hists[i]);
      }
      const double c = ScalingConstants(p).label * std::pow(static_cast<double>(n), -0.25);
      std::int64_t total = 0;
      double sum = 0;
      for (std::size_t d = 0; d < all.size(); ++d) {
        total += all[d];
        sum += static_cast<double>(d) * static_cast<double>(all[d]);
      }
      report.add(p, n, cfg.samples, variant, "vertices_pooled", static_cast<double>(total));
      report.add(p, n, cfg.samples, variant, "mean_scaled", c * sum / static_cast<double>(total));
      for (double q : {0.1, 0.5, 0.9}) {
        report.add(p, n, cfg.samples, variant, tagged("quantile_scaled", "q", q), c * hist_quantile(all, q));
      }
      if (!second.empty()) {
        report.add(p, n, cfg.samples, variant, "ks_halves", ks_hist(first, 1, second, 1));
      }
      pooled.push_back(std::move(all));
      scale.push_back(c);
    }
    for (std::size_t a = 0; a < cfg.p_values.size(); ++a) {
      for (std::size_t b = a + 1; b < cfg.p_values.size(); ++b) {
        const int pa = cfg.p_values[a];
        const int pb = cfg.p_values[b];
        const double scaled = ks_hist(pooled[a], scale[a], pooled[b], scale[b]);
        const double unscaled = ks_hist(pooled[a], 1, pooled[b], 1);
        const std::string other = "_vs_p" + std::to_string(pb);
        report.add(pa, n, cfg.samples, variant, "ks_scaled" + other, scaled);
        report.add(pa, n, cfg.samples, variant, "ks_unscaled" + other, unscaled);
        const std::string where =
            " p=" + std::to_string(pa) + " vs p=" + std::to_string(pb) + " n=" + std::to_string(n);
        report.check("ks_scaled" + where, scaled, -kInf, strictly_below(ks_max),
                     "scaled KS " + format_number(scaled) + ", threshold < " + format_number(ks_max));
        report.check("control" + where, unscaled - scaled, strictly_above(0), kInf,
                     "unscaled KS " + format_number(unscaled) + " vs scaled " + format_number(scaled));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------- two-point

StatReport exp_two_point_scaling(const ExperimentConfig& cfg, const RunOptions& opts) {
  StatReport report = new_report(cfg);
  if (cfg.n_values.size() < 3) throw ParameterError("two-point-scaling needs at least three n values");
  const double low = cfg.tolerance("slope_low", 0.22);
  const double high = cfg.tolerance("slope_high", 0.28);
  std::vector<PowerLawFit> fits;
  for (int p : cfg.p_values) {
    std::vector<double> xs;
    std::vector<std::vector<double>> groups;
    std::string variant;
    for (int n : cfg.n_values) {
      const bool pointed = pointed_for(cfg.variant, n);
      variant = pointed ? "pointed" : "rooted";
      auto d = run_replicas<double>(cfg.samples, opts.threads, [&](int i) {
        RngStream rng = replica_stream(cfg, tag_two_point, p, n, i);
        const SampledMap s = sample_map(p, n, pointed, rng);
        return static_cast<double>(two_point_samples(s.map, rng, 2)[0]);
      });
      const double m = mean(d);
      double var = 0;
      for (double v : d) var += (v - m) * (v - m);
      var /= std::max<double>(1, static_cast<double>(d.size()) - 1);
      report.add(p, n, cfg.samples, variant, "mean_distance", m);
      report.add(p, n, cfg.samples, variant, "sd_distance", std::sqrt(var));
      report.add(p, n, cfg.samples, variant, "mean_scaled",
                 m * ScalingConstants(p).label * std::pow(static_cast<double>(n), -0.25));
      xs.push_back(n);
      groups.push_back(std::move(d));
    }
    RngStream boot = bootstrap_stream(cfg, tag_two_point, p, 0);
    const PowerLawFit f = fit_power_law_grouped(xs, groups, boot, cfg.bootstrap);
    add_fit(report, p, 0, cfg.samples, variant, "", f);
    report.check("slope p=" + std::to_string(p), f.slope, low, high,
                 "slope " + format_number(f.slope) + " CI [" + format_number(f.ci_low) + ", " +
                     format_number(f.ci_high) + "]");
    fits.push_back(f);
  }
  for (std::size_t a = 0; a < fits.size(); ++a) {
    for (std::size_t b = a + 1; b < fits.size(); ++b) {
      const bool overlap = fits[a].ci_low <= fits[b].ci_high && fits[b].ci_low <= fits[a].ci_high;
      report.add(cfg.p_values[a], 0, cfg.samples, "pointed", "ci_overlap_vs_p" + std::to_string(cfg.p_values[b]),
                 overlap ? 1 : 0);
    }
  }
  return report;
}

// ---------------------------------------------------------------- ball volume

namespace {

struct BallResult {
  double diameter = 0;
  std::vector<double> mass;  // mean normalized closed-ball mass per integer radius
};

// Excursion of a free p-mobile at full contour resolution.
LabeledExcursion full_excursion(int p, int faces, RngStream& rng) {
  const Mobile mob = sample_free_mobile(p, faces, rng);
  LabeledExcursion x = labeled_excursion(contour(mob), p * faces);
  x.provenance.seed = rng.master_seed();
  x.provenance.stream = rng.stream_index();
  return x;
}

struct LabelCounts {
  std::vector<std::int64_t> counts;  // grid points per label unit
  std::int64_t points = 0;
  double scale = 0;

  double occupation(double eps) const {
    std::int64_t below = 0;
    for (std::size_t u = 0; u < counts.size() && scale * static_cast<double>(u) <= eps; ++u) below += counts[u];
    return static_cast<double>(below) / static_cast<double>(points);
  }
  double max_value() const { return scale * static_cast<double>(counts.size() - 1); }
};

LabelCounts label_counts(const LabeledExcursion& x) {
  LabelCounts lc;
  lc.scale = x.z_scale;
  lc.points = static_cast<std::int64_t>(x.z_units.size());
  lc.counts.assign(static_cast<std::size_t>(*std::max_element(x.z_units.begin(), x.z_units.end())) + 1, 0);
  for (int u : x.z_units) ++lc.counts[static_cast<std::size_t>(u)];
  return lc;
}

}  // namespace

StatReport exp_ball_volume(const ExperimentConfig& cfg, const RunOptions& opts) {
  StatReport report = new_report(cfg);
  const double low = cfg.tolerance("slope_low", 3.5);
  const double high = cfg.tolerance("slope_high", 4.5);

  for (int p : cfg.p_values) {
    for (int n : cfg.n_values) {
      const bool pointed = pointed_for(cfg.variant, n);
      const std::string variant = pointed ? "pointed" : "rooted";
      const double norm = static_cast<double>(p - 1) * n;
      const auto results = run_replicas<BallResult>(cfg.samples, opts.threads, [&](int i) {
        RngStream rng = replica_stream(cfg, tag_ball, p, n, i);
        const SampledMap s = sample_map(p, n, pointed, rng);
        const auto vc = static_cast<std::uint64_t>(s.map.vertex_count());
        BallResult r;
        r.diameter = diameter_lower_bound(s.map, static_cast<int>(rng.uniform_below(vc)));
        std::vector<double> count(static_cast<std::size_t>(r.diameter) + 1, 0);
        for (int c = 0; c < cfg.centers; ++c) {
          const DistanceField f = bfs(s.map, static_cast<int>(rng.uniform_below(vc)));
          for (int d : f.dist) count[static_cast<std::size_t>(d)] += 1;
        }
        double run = 0;
        for (double& v : count) {
          run += v;
          v = run / cfg.centers / norm;
        }
        r.mass = std::move(count);
        return r;
      });
      double diameter = 0;
      for (const auto& r : results) diameter += r.diameter;
      diameter /= static_cast<double>(results.size());
      report.add(p, n, cfg.samples, variant, "diameter_mean", diameter);

      auto mass_at = [](const BallResult& r, int radius) {
        return r.mass[std::min(static_cast<std::size_t>(radius), r.mass.size() - 1)];
      };
      double full = 0;
      for (const auto& r : results) full += r.mass.back();
      report.add(p, n, cfg.samples, variant, "mass_full", full / static_cast<double>(results.size()));

      std::vector<double> xs;
      std::vector<std::vector<double>> groups;
      const int r_lo = std::max(1, static_cast<int>(std::ceil(cfg.window_low * diameter)));
      const int r_hi = static_cast<int>(std::floor(cfg.window_high * diameter));
      for (int radius = r_lo; radius <= r_hi; ++radius) {
        std::vector<double> g;
        for (const auto& r : results) g.push_back(mass_at(r, radius));
        report.add(p, n, cfg.samples, variant, tagged("ball_mass", "r", radius), mean(g));
        xs.push_back(radius);
        groups.push_back(std::move(g));
      }
      if (xs.size() < 3) {
        throw FitError("ball-volume: window [" + format_number(cfg.window_low) + ", " +
                       format_number(cfg.window_high) + "] x diameter " + format_number(diameter) +
                       " holds fewer than 3 integer radii; use larger n");
      }
      RngStream boot = bootstrap_stream(cfg, tag_ball, p, n);
      const PowerLawFit f = fit_power_law_grouped(xs, groups, boot, cfg.bootstrap);
      add_fit(report, p, n, cfg.samples, variant, "discrete_", f);
      report.check("discrete slope p=" + std::to_string(p) + " n=" + std::to_string(n), f.slope, low, high,
                   "slope " + format_number(f.slope) + " CI [" + format_number(f.ci_low) + ", " +
                       format_number(f.ci_high) + "] over radii " + std::to_string(r_lo) + ".." +
                       std::to_string(r_hi));
    }
  }

  // Continuum side: occupation measure of re-rooted labels.
  const int gen = cfg.generator_faces;
  const int p = 2;
  const auto counts = run_replicas<LabelCounts>(cfg.replicas, opts.threads, [&](int i) {
    RngStream rng = replica_stream(cfg, tag_ball, 0, gen, i);
    return label_counts(full_excursion(p, gen, rng));
  });
  double typical = 0;
  for (const auto& c : counts) typical += c.max_value();
  typical /= static_cast<double>(counts.size());
  report.add(p, gen, cfg.replicas, "free", "typical_scale", typical);
  const std::vector<double> radii =
      cfg.radii.empty() ? geometric_ladder(0.1 * typical, 0.4 * typical, 8) : cfg.radii;
  std::vector<std::vector<double>> groups;
  for (double r : radii) {
    std::vector<double> g;
    for (const auto& c : counts) g.push_back(c.occupation(r));
    report.add(p, gen, cfg.replicas, "free", tagged("occupation", "r", r), mean(g));
    groups.push_back(std::move(g));
  }
  RngStream boot = bootstrap_stream(cfg, tag_ball, 0, gen);
  const PowerLawFit f = fit_power_law_grouped(radii, groups, boot, cfg.bootstrap);
  add_fit(report, p, gen, cfg.replicas, "free", "continuum_", f);
  report.check("continuum slope", f.slope, low, high,
               "slope " + format_number(f.slope) + " CI [" + format_number(f.ci_low) + ", " +
                   format_number(f.ci_high) + "]");

  // Ball masses under D* and D° on a few grid metrics (reported only).
  if (cfg.grid_replicas > 0) {
    const auto metrics = run_replicas<GridMetric>(cfg.grid_replicas, opts.threads, [&](int i) {
      RngStream rng = replica_stream(cfg, tag_ball, 1, gen, i);
      return grid_dstar(sample_labeled_excursion(cfg.grid, rng, gen));
    });
    double diam = 0;
    for (const auto& gm : metrics) {
      int top = 0;
      for (std::size_t a = 0; a < gm.points(); ++a) {
        for (int v : gm.star_units.row(a)) top = std::max(top, v);
      }
      diam += gm.scale * top;
    }
    diam /= static_cast<double>(metrics.size());
    report.add(p, gen, cfg.grid_replicas, "free", "dstar_diameter_mean", diam);
    const auto ladder = geometric_ladder(cfg.window_low * diam, cfg.window_high * diam, 8);
    for (GridDistance which : {GridDistance::star, GridDistance::circ}) {
      const std::string name = which == GridDistance::star ? "dstar" : "dcirc";
      std::vector<double> avg(ladder.size(), 0);
      for (const auto& gm : metrics) {
        const auto prof = ball_mass_profile(gm, ladder, which);
        for (std::size_t k = 0; k < avg.size(); ++k) avg[k] += prof[k] / static_cast<double>(metrics.size());
      }
      for (std::size_t k = 0; k < avg.size(); ++k) {
        report.add(p, gen, cfg.grid_replicas, "free", tagged(name + "_mass", "r", ladder[k]), avg[k]);
      }
      const PowerLawFit g = fit_power_law(ladder, avg);
      report.add(p, gen, cfg.grid_replicas, "free", name + "_slope", g.slope);
    }
  }
  return report;
}

// ---------------------------------------------------------------- ISE tail

namespace {

// Wilson score interval for a binomial proportion at 95%.
std::pair<double, double> wilson(std::int64_t hits, std::int64_t trials) {
  const double z = 1.959963984540054;
  const double nn = static_cast<double>(trials);
  const double ph = static_cast<double>(hits) / nn;
  const double denom = 1 + z * z / nn;
  const double centre = (ph + z * z / (2 * nn)) / denom;
  const double half = z * std::sqrt(ph * (1 - ph) / nn + z * z / (4 * nn * nn)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

}  // namespace

StatReport exp_ise_tail(const ExperimentConfig& cfg, const RunOptions& opts) {
  StatReport report = new_report(cfg);
  if (cfg.radii.size() < 2) throw ParameterError("ise-tail needs an eps ladder of at least two radii");
  std::vector<double> eps = cfg.radii;
  std::sort(eps.begin(), eps.end());
  for (int p : cfg.p_values) {
    for (int n : cfg.n_values) {
      const auto hits = run_replicas<std::vector<char>>(cfg.replicas, opts.threads, [&](int i) {
        RngStream rng = replica_stream(cfg, tag_ise, p, n, i);
        const LabelCounts lc = label_counts(full_excursion(p, n, rng));
        std::vector<char> h;
        for (double e : eps) h.push_back(lc.occupation(e) >= cfg.alpha * e * e ? 1 : 0);
        return h;
      });
      std::vector<double> stat;
      std::vector<std::int64_t> count(eps.size(), 0);
      for (const auto& h : hits) {
        for (std::size_t k = 0; k < eps.size(); ++k) count[k] += h[k];
      }
      for (std::size_t k = 0; k < eps.size(); ++k) {
        const double e2 = eps[k] * eps[k];
        const double prob = static_cast<double>(count[k]) / cfg.replicas;
        const auto [lo, hi] = wilson(count[k], cfg.replicas);
        report.add(p, n, cfg.replicas, "free", tagged("hits", "eps", eps[k]), static_cast<double>(count[k]));
        report.add(p, n, cfg.replicas, "free", tagged("prob", "eps", eps[k]), prob);
        report.add(p, n, cfg.replicas, "free", tagged("stat", "eps", eps[k]), prob / e2);
        report.add(p, n, cfg.replicas, "free", tagged("stat_ci_low", "eps", eps[k]), lo / e2);
        report.add(p, n, cfg.replicas, "free", tagged("stat_ci_high", "eps", eps[k]), hi / e2);
        stat.push_back(prob / e2);
      }
      const double trend = stat.front() - stat.back();
      report.add(p, n, cfg.replicas, "free", "trend", trend);
      if (count.front() == 0) {
        report.warnings.push_back("p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                  ": no replica reached the threshold at the smallest eps; only an upper "
                                  "confidence bound is available there");
      }
      if (count.back() == 0) {
        report.warnings.push_back("p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                  ": no replica reached the threshold at the largest eps, so the trend is "
                                  "0 - 0; raise replicas or lower alpha");
      }
      report.check("trend p=" + std::to_string(p) + " n=" + std::to_string(n), trend, -kInf,
                   strictly_below(0),
                   "stat(eps=" + format_number(eps.front()) + ") = " + format_number(stat.front()) +
                       " vs stat(eps=" + format_number(eps.back()) + ") = " + format_number(stat.back()));
    }
  }
  return report;
}

// ---------------------------------------------------------------- conjecture gap

namespace {

struct GapResult {
  std::vector<double> gaps;
  double root_max = 0;
  std::int64_t negative = 0;
  double scale = 0;
};

}  // namespace

StatReport exp_conjecture_gap(const ExperimentConfig& cfg, const RunOptions& opts) {
  StatReport report = new_report(cfg);
  for (int p : cfg.p_values) {
    std::vector<double> medians;
    for (int n : cfg.n_values) {
      const bool pointed = pointed_for(cfg.variant, n);
      const std::string variant = pointed ? "pointed" : "rooted";
      const auto results = run_replicas<GapResult>(cfg.samples, opts.threads, [&](int i) {
        RngStream rng = replica_stream(cfg, tag_gap, p, n, i);
        const SampledMap s = sample_map(p, n, pointed, rng);
        const ContourPair c = contour(s.mobile);
        const GridSample g = grid_sample(s.map, c, grid_indices_from_min(c, cfg.grid));
        const DenseMatrix<int> closure = discrete_dstar(c, g.indices);
        GapResult r;
        r.scale = g.scale;
        const std::size_t size = g.indices.size();
        for (std::size_t j = 0; j < size; ++j) {
          for (std::size_t k = j + 1; k < size; ++k) {
            const int diff = closure(j, k) - g.graph_distance(j, k);
            if (diff < 0) ++r.negative;
            const double gap = g.scale * diff;
            r.gaps.push_back(gap);
            if (j == 0) r.root_max = std::max(r.root_max, gap);
          }
        }
        return r;
      });
      std::vector<double> all;
      double root_max = 0;
      std::int64_t negative = 0;
      for (const auto& r : results) {
        all.insert(all.end(), r.gaps.begin(), r.gaps.end());
        root_max = std::max(root_max, r.root_max);
        negative += r.negative;
      }
      const double scale = results.front().scale;
      report.add(p, n, cfg.samples, variant, "gap_min", *std::min_element(all.begin(), all.end()));
      report.add(p, n, cfg.samples, variant, "gap_q10", quantile(all, 0.1));
      report.add(p, n, cfg.samples, variant, "gap_median", quantile(all, 0.5));
      report.add(p, n, cfg.samples, variant, "gap_mean", mean(all));
      report.add(p, n, cfg.samples, variant, "gap_q90", quantile(all, 0.9));
      report.add(p, n, cfg.samples, variant, "gap_max", *std::max_element(all.begin(), all.end()));
      report.add(p, n, cfg.samples, variant, "root_gap_max", root_max);
      report.add(p, n, cfg.samples, variant, "root_gap_bound", 2 * scale);
      report.add(p, n, cfg.samples, variant, "negative_gaps", static_cast<double>(negative));
      report.check("gap_nonnegative p=" + std::to_string(p) + " n=" + std::to_string(n),
                   static_cast<double>(negative), -kInf, 0,
                   std::to_string(negative) + " grid pairs with closure below the graph distance");
      medians.push_back(quantile(all, 0.5));
    }
    report.add(p, 0, cfg.samples, "pointed", "median_gap_trend", medians.back() - medians.front());
  }
  return report;
}

StatReport run_experiment(const ExperimentConfig& cfg, const RunOptions& opts) {
  switch (cfg.kind()) {
    case ExperimentKind::invariant_suite: return exp_invariant_suite(cfg, opts);
    case ExperimentKind::profile_universality: return exp_profile_universality(cfg, opts);
    case ExperimentKind::two_point_scaling: return exp_two_point_scaling(cfg, opts);
    case ExperimentKind::ball_volume: return exp_ball_volume(cfg, opts);
    case ExperimentKind::ise_tail: return exp_ise_tail(cfg, opts);
    case ExperimentKind::conjecture_gap: return exp_conjecture_gap(cfg, opts);
  }
  throw ParameterError("unknown experiment");
}

}  // namespace angulate
