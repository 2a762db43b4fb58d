#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "angulate/continuum.hpp"
#include "angulate/error.hpp"
#include "angulate/sampler.hpp"
#include "angulate/stats.hpp"

using namespace angulate;

namespace {

double naive_pseudo_metric(std::span<const double> g, std::size_t s, std::size_t t) {
  const auto [lo, hi] = std::minmax(s, t);
  const double m = *std::min_element(g.begin() + lo, g.begin() + hi + 1);
  return g[s] + g[t] - 2 * m;
}

}  // namespace

TEST(LabeledExcursion, EndpointsAndMinimum) {
  RngStream rng(51, 0);
  for (int i = 0; i < 20; ++i) {
    const LabeledExcursion x = sample_labeled_excursion(256, rng, 4096);
    ASSERT_EQ(x.e_vals.size(), 257u);
    EXPECT_EQ(x.z_vals[0], 0.0);
    EXPECT_EQ(*std::min_element(x.z_vals.begin(), x.z_vals.end()), 0.0);
    EXPECT_EQ(x.e_vals[0], 0.0);
    EXPECT_EQ(x.e_vals[256], 0.0);
    for (std::size_t k = 0; k < x.z_vals.size(); ++k) {
      ASSERT_DOUBLE_EQ(x.z_vals[k], x.z_scale * x.z_units[k]);
      ASSERT_DOUBLE_EQ(x.e_vals[k], x.e_scale * x.e_units[k]);
    }
    EXPECT_EQ(x.provenance.n, 4096);
  }
}

TEST(LabeledExcursion, Errors) {
  RngStream rng(52, 0);
  EXPECT_THROW(sample_labeled_excursion(1, rng, 100), ParameterError);
  EXPECT_THROW(sample_labeled_excursion(16, rng, 0), ParameterError);
}

TEST(LabeledExcursion, MaxLabelLawStableAcrossGrid) {
  auto maxima = [](int m) {
    std::vector<double> out;
    for (int i = 0; i < 500; ++i) {
      RngStream rng(53, static_cast<std::uint64_t>(i));
      const LabeledExcursion x = sample_labeled_excursion(m, rng);
      out.push_back(*std::max_element(x.z_vals.begin(), x.z_vals.end()));
    }
    return out;
  };
  EXPECT_LT(ks_distance(maxima(1 << 12), maxima(1 << 14)), 0.05);
}

TEST(RerootAtMin, IdentityWhenMinimumAtZero) {
  const std::vector<int> e = {0, 2, 4, 2, 0}, z = {0, 1, 3, 2, 0};
  const auto [e2, z2] = reroot_at_min<int>(e, z);
  EXPECT_EQ(e2, e);
  EXPECT_EQ(z2, z);
}

TEST(RerootAtMin, ShiftsToMinimum) {
  const std::vector<int> e = {0, 2, 4, 2, 0}, z = {0, 1, -2, -1, 0};
  const auto [e2, z2] = reroot_at_min<int>(e, z);
  EXPECT_EQ(z2, (std::vector<int>{0, 1, 2, 3, 0}));
  EXPECT_EQ(e2.front(), 0);
  EXPECT_EQ(e2.back(), 0);
  EXPECT_TRUE(std::all_of(z2.begin(), z2.end(), [](int v) { return v >= 0; }));
}

TEST(RerootAtMin, Idempotent) {
  RngStream rng(55, 0);
  for (int i = 0; i < 1000; ++i) {
    const ContourPair c = contour(sample_free_mobile(2, 64, rng));
    const auto [e1, z1] = reroot_at_min<int>(c.heights, c.labels);
    ASSERT_EQ(z1[0], 0);
    ASSERT_TRUE(std::all_of(z1.begin(), z1.end(), [](int v) { return v >= 0; }));
    const auto [e2, z2] = reroot_at_min<int>(e1, z1);
    ASSERT_EQ(e1, e2);
    ASSERT_EQ(z1, z2);
  }
}

TEST(RerootAtMin, Errors) {
  const std::vector<int> a = {0, 1}, b = {0};
  EXPECT_THROW((reroot_at_min<int>(a, b)), ParameterError);
  EXPECT_THROW((reroot_at_min<int>(b, b)), ParameterError);
}

TEST(TreePseudoMetric, AgreesWithNaiveScan) {
  RngStream rng(56, 0);
  const LabeledExcursion x = sample_labeled_excursion(1024, rng, 4096);
  for (int t = 0; t < 100000; ++t) {
    const std::size_t s = rng.uniform_below(x.e_vals.size()), u = rng.uniform_below(x.e_vals.size());
    const double d = tree_pseudo_metric(x.e_vals, s, u);
    ASSERT_DOUBLE_EQ(d, naive_pseudo_metric(x.e_vals, s, u));
    ASSERT_DOUBLE_EQ(d, tree_pseudo_metric(x.e_vals, u, s));
  }
  EXPECT_EQ(tree_pseudo_metric(x.e_vals, 7, 7), 0.0);
}

TEST(GridMetric, ExactProperties) {
  RngStream rng(57, 0);
  for (int i = 0; i < 5; ++i) {
    const LabeledExcursion x = sample_labeled_excursion(256, rng, 4096);
    const GridMetric gm = grid_dstar(x);
    ASSERT_EQ(gm.points(), 257u);
    for (std::size_t s = 0; s < gm.points(); ++s) {
      ASSERT_EQ(gm.circ_units(s, s), 0);
      ASSERT_EQ(gm.star_units(0, s), x.z_units[s]);
      ASSERT_EQ(gm.circ_units(0, s), x.z_units[s]);
      ASSERT_DOUBLE_EQ(gm.d_circ(s, 0), d_circ_cont(x.z_vals, s, 0));
      for (std::size_t t = 0; t < gm.points(); ++t) {
        ASSERT_GE(gm.circ_units(s, t), std::abs(x.z_units[s] - x.z_units[t]));
        ASSERT_LE(gm.star_units(s, t), gm.circ_units(s, t));
        ASSERT_EQ(gm.star_units(s, t), gm.star_units(t, s));
      }
    }
    for (int k = 0; k < 20000; ++k) {
      const auto a = rng.uniform_below(gm.points()), b = rng.uniform_below(gm.points()),
                 c = rng.uniform_below(gm.points());
      ASSERT_LE(gm.star_units(a, c), gm.star_units(a, b) + gm.star_units(b, c));
    }
  }
}

TEST(GridMetric, Budget) {
  std::vector<int> z(kClosureMaxPoints + 1, 0);
  EXPECT_THROW(grid_dstar(z, 1.0), BudgetError);
  EXPECT_THROW(grid_dstar(std::vector<int>{0}, 1.0), ParameterError);
}

TEST(Clusters, ZeroToleranceAndFullTolerance) {
  const std::vector<int> z = {0, 1, 2, 3, 4, 3, 2, 1, 0};
  const GridMetric gm = grid_dstar(z, 0.5);
  const Clusters zero = equivalence_clusters(gm, 0);
  // Mirror points of the tent are identified: {0,8} {1,7} {2,6} {3,5} {4}.
  EXPECT_EQ(zero.sizes.size(), 5u);
  EXPECT_EQ(zero.component[0], zero.component[8]);
  EXPECT_EQ(zero.component[3], zero.component[5]);
  EXPECT_NE(zero.component[3], zero.component[4]);
  EXPECT_DOUBLE_EQ(zero.fraction_in_larger_than(1), 8.0 / 9.0);
  const Clusters all = equivalence_clusters(gm, 100);
  EXPECT_EQ(all.sizes, (std::vector<int>{9}));
  EXPECT_EQ(all.exemplars, (std::vector<int>{0}));
  EXPECT_THROW(equivalence_clusters(gm, -1), ParameterError);
}

TEST(OccupationMeasure, TotalMassAndMonotone) {
  RngStream rng(58, 0);
  const LabeledExcursion x = sample_labeled_excursion(512, rng, 4096);
  const double top = *std::max_element(x.z_vals.begin(), x.z_vals.end());
  EXPECT_EQ(occupation_measure(x.z_vals, top), 1.0);
  double prev = 0;
  for (double eps = 0; eps <= top; eps += top / 50) {
    const double v = occupation_measure(x.z_vals, eps);
    EXPECT_GE(v, prev);
    prev = v;
  }
}

TEST(BallMassProfile, Limits) {
  const std::vector<int> z = {0, 1, 2, 3, 4};
  const GridMetric gm = grid_dstar(z, 1.0);
  const std::vector<double> radii = {1e-9, 1.5, 100};
  const auto mass = ball_mass_profile(gm, radii);
  EXPECT_DOUBLE_EQ(mass[0], 1.0 / 5.0);
  EXPECT_DOUBLE_EQ(mass[2], 1.0);
  // D* = |z_a - z_b| here, so balls of radius 1.5 hold 2 or 3 points.
  EXPECT_DOUBLE_EQ(mass[1], (2 + 3 + 3 + 3 + 2) / 25.0);
  const auto circ = ball_mass_profile(gm, radii, GridDistance::circ);
  EXPECT_EQ(circ, mass);
}

TEST(EstimateDimension, ExactPowerLaws) {
  RngStream rng(59, 0);
  const std::vector<double> r = {0.1, 0.2, 0.3, 0.4};
  std::vector<double> m4, m2;
  for (double x : r) {
    m4.push_back(std::pow(x, 4));
    m2.push_back(x * x);
  }
  const DimensionEstimate d4 = estimate_dimension(r, m4, rng, 200);
  EXPECT_NEAR(d4.slope, 4.0, 1e-12);
  EXPECT_NEAR(d4.ci_low, 4.0, 1e-9);
  EXPECT_NEAR(d4.ci_high, 4.0, 1e-9);
  EXPECT_NEAR(estimate_dimension(r, m2, rng, 200).slope, 2.0, 1e-12);
}
