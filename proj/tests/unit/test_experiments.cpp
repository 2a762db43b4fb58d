#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "angulate/error.hpp"
#include "angulate/experiments.hpp"
#include "angulate/io.hpp"

using namespace angulate;

namespace {

ExperimentConfig small(ExperimentKind k) {
  ExperimentConfig c = default_config(k);
  c.seed = 5;
  c.bootstrap = 100;
  return c;
}

std::string csv(const StatReport& r) {
  std::ostringstream ss;
  write_csv(ss, r);
  return ss.str();
}

std::string json(const StatReport& r) {
  std::ostringstream ss;
  write_json(ss, r);
  return ss.str();
}

}  // namespace

TEST(RunReplicas, OrderIndependentOfThreads) {
  const std::function<int(int)> sq = [](int i) { return i * i; };
  const auto one = run_replicas<int>(50, 1, sq);
  const auto four = run_replicas<int>(50, 4, sq);
  EXPECT_EQ(one, four);
  EXPECT_EQ(one[7], 49);
  EXPECT_TRUE(run_replicas<int>(0, 3, sq).empty());
}

TEST(RunReplicas, RethrowsLowestFailure) {
  const std::function<int(int)> fn = [](int i) -> int {
    if (i == 3 || i == 9) throw ParameterError("bad " + std::to_string(i));
    return i;
  };
  try {
    run_replicas<int>(20, 3, fn);
    FAIL();
  } catch (const ParameterError& e) {
    EXPECT_STREQ(e.what(), "bad 3");
  }
}

TEST(InvariantSuite, SmallRunPasses) {
  ExperimentConfig c = small(ExperimentKind::invariant_suite);
  c.p_values = {2, 3};
  c.n_values = {30, 60};
  c.samples = 5;
  const StatReport r = run_experiment(c);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.value(2, 30, "maps"), 5);
  EXPECT_EQ(r.value(3, 60, "lemma31_violations"), 0);
  EXPECT_EQ(r.checks.size(), 8u);
}

TEST(InvariantSuite, ExhaustiveEnumeration) {
  ExperimentConfig c = small(ExperimentKind::invariant_suite);
  c.p_values = {2};
  c.n_values = {1, 2, 3};
  c.enumerate = true;
  const StatReport r = run_experiment(c);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.value(2, 1, "maps"), 2);
  EXPECT_EQ(r.value(2, 2, "maps"), 9);
  EXPECT_EQ(r.value(2, 3, "maps"), 54);
  EXPECT_EQ(r.value(2, 3, "lemma31_exhaustive_maps"), 54);
}

TEST(InvariantSuite, InjectedFaultIsReported) {
  ExperimentConfig c = small(ExperimentKind::invariant_suite);
  c.p_values = {2};
  c.n_values = {40};
  c.samples = 4;
  c.inject_fault = true;
  const StatReport r = run_experiment(c);
  EXPECT_FALSE(r.passed());
  EXPECT_GE(r.value(2, 40, "maps_failed"), 1);
}

TEST(ProfileUniversality, SmallRunProducesRows) {
  ExperimentConfig c = small(ExperimentKind::profile_universality);
  c.n_values = {2048};
  c.samples = 40;
  c.variant = VariantChoice::pointed;
  const StatReport r = run_experiment(c);
  const double scaled = r.value(2, 2048, "ks_scaled_vs_p3");
  const double unscaled = r.value(2, 2048, "ks_unscaled_vs_p3");
  EXPECT_GT(scaled, 0);
  EXPECT_LT(scaled, unscaled);
  EXPECT_LT(r.value(2, 2048, "ks_halves"), unscaled);
  EXPECT_FALSE(r.warnings.empty());
}

TEST(TwoPointScaling, SmallRunSlope) {
  ExperimentConfig c = small(ExperimentKind::two_point_scaling);
  c.n_values = {256, 1024, 4096, 16384};
  c.samples = 60;
  const StatReport r = run_experiment(c);
  const double slope = r.value(2, 0, "slope");
  EXPECT_GT(slope, 0.15);
  EXPECT_LT(slope, 0.35);
  EXPECT_LE(r.value(2, 0, "slope_ci_low"), slope);
  EXPECT_GE(r.value(2, 0, "slope_ci_high"), slope);
}

TEST(BallVolume, SmallRunMassBounds) {
  ExperimentConfig c = small(ExperimentKind::ball_volume);
  c.n_values = {4096};
  c.samples = 4;
  c.replicas = 30;
  c.generator_faces = 2048;
  c.grid = 64;
  c.grid_replicas = 2;
  const StatReport r = run_experiment(c);
  EXPECT_DOUBLE_EQ(r.value(2, 4096, "mass_full"), 4098.0 / 4096.0);
  EXPECT_GT(r.value(2, 4096, "diameter_mean"), 5);
  EXPECT_EQ(r.checks.size(), 2u);
  for (const auto& ck : r.checks) EXPECT_TRUE(std::isfinite(ck.value)) << ck.name;
}

TEST(IseTail, AlphaLimits) {
  ExperimentConfig c = small(ExperimentKind::ise_tail);
  c.n_values = {1024};
  c.replicas = 50;
  c.alpha = 1e-9;
  StatReport r = run_experiment(c);
  for (double e : c.radii) {
    EXPECT_EQ(r.value(2, 1024, "prob[eps=" + format_number(e) + "]"), 1.0);
    EXPECT_DOUBLE_EQ(r.value(2, 1024, "stat[eps=" + format_number(e) + "]"), 1 / (e * e));
  }
  // Every indicator is 1, so the statistic is eps^-2 and decreases in eps.
  EXPECT_GT(r.value(2, 1024, "trend"), 0);
  EXPECT_FALSE(r.passed());
  c.alpha = 1e9;
  r = run_experiment(c);
  EXPECT_EQ(r.value(2, 1024, "trend"), 0);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.warnings.size(), 2u);
}

TEST(IseTail, NeedsLadder) {
  ExperimentConfig c = small(ExperimentKind::ise_tail);
  c.radii = {0.5};
  EXPECT_THROW(run_experiment(c), ParameterError);
}

TEST(ConjectureGap, SandwichAndRootBound) {
  ExperimentConfig c = small(ExperimentKind::conjecture_gap);
  c.n_values = {512, 2048};
  c.samples = 4;
  c.grid = 32;
  const StatReport r = run_experiment(c);
  EXPECT_TRUE(r.passed());
  for (int n : c.n_values) {
    EXPECT_GE(r.value(2, n, "gap_min"), 0);
    EXPECT_EQ(r.value(2, n, "negative_gaps"), 0);
    EXPECT_LE(r.value(2, n, "root_gap_max"), r.value(2, n, "root_gap_bound") + 1e-12);
  }
}

TEST(Reproducibility, ByteIdenticalAcrossRunsAndThreads) {
  ExperimentConfig c = small(ExperimentKind::two_point_scaling);
  c.n_values = {256, 512, 1024};
  c.samples = 20;
  const StatReport a = run_experiment(c, {1});
  const StatReport b = run_experiment(c, {1});
  const StatReport t = run_experiment(c, {3});
  EXPECT_EQ(csv(a), csv(b));
  EXPECT_EQ(json(a), json(b));
  EXPECT_EQ(csv(a), csv(t));
  EXPECT_EQ(json(a), json(t));
  c.seed = 6;
  EXPECT_NE(csv(run_experiment(c)), csv(a));
}

TEST(StatReport, ChecksAndLookup) {
  StatReport r;
  r.add(2, 10, 1, "rooted", "x", 1.5);
  EXPECT_EQ(r.value(2, 10, "x"), 1.5);
  EXPECT_THROW(r.value(2, 10, "y"), ParameterError);
  EXPECT_TRUE(r.check("in", 1, 1, 2).passed);
  EXPECT_FALSE(r.check("nan", std::nan(""), 0, 1).passed);
  EXPECT_FALSE(r.passed());
  std::ostringstream ss;
  write_csv(ss, r);
  EXPECT_EQ(ss.str(), "p,n,samples,seed,variant,stat,value\n2,10,1,1,rooted,x,1.5\n");
}
