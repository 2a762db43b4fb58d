#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "angulate/rng.hpp"

namespace angulate {

inline constexpr int kDefaultBootstrap = 1000;

struct LinearFit {
  double slope = 0;
  double intercept = 0;
};

// Ordinary least squares y = slope * x + intercept. Throws FitError when x
// is constant or fewer than two points are given.
LinearFit least_squares(std::span<const double> xs, std::span<const double> ys);

struct PowerLawFit {
  double slope = 0;
  double intercept = 0;  // log-space intercept
  double ci_low = 0;
  double ci_high = 0;
  int points = 0;
  int bootstrap = 0;  // resamples that produced a fit
};

// Least squares of log y against log x. Needs >= 3 points, all positive, and
// ys not all equal; throws FitError otherwise. Without an rng the interval
// collapses to the point estimate.
PowerLawFit fit_power_law(std::span<const double> xs, std::span<const double> ys);
PowerLawFit fit_power_law(std::span<const double> xs, std::span<const double> ys, RngStream& rng,
                          int bootstrap = kDefaultBootstrap, double level = 0.95);

// Same fit on group means, with the bootstrap resampling observations inside
// each group (replicas), which keeps every x in every resample.
PowerLawFit fit_power_law_grouped(std::span<const double> xs,
                                  const std::vector<std::vector<double>>& groups, RngStream& rng,
                                  int bootstrap = kDefaultBootstrap, double level = 0.95);

// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
double ks_distance(std::span<const double> a, std::span<const double> b);

// KS statistic between two weighted discrete distributions (weights need
// not be normalized).
double ks_distance_weighted(std::span<const double> xa, std::span<const double> wa,
                            std::span<const double> xb, std::span<const double> wb);

// Pearson statistic of counts against equal expected frequencies, and the
// upper-tail chi-square probability with counts.size()-1 degrees of freedom.
double chi_square_statistic(std::span<const std::int64_t> counts);
double chi_square_pvalue(std::span<const std::int64_t> counts);

double mean(std::span<const double> xs);

// Linear interpolation between order statistics (q in [0, 1]).
double quantile(std::span<const double> xs, double q);

}  // namespace angulate
