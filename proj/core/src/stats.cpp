#include "angulate/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>

#include "angulate/error.hpp"

namespace angulate {

LinearFit least_squares(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw FitError("least squares: x and y differ in length");
  if (xs.size() < 2) throw FitError("least squares: need at least two points");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) throw FitError("least squares: x values are all equal");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  return f;
}

namespace {

std::vector<double> logs(std::span<const double> v, const char* what) {
  std::vector<double> out;
  out.reserve(v.size());
  for (double x : v) {
    if (!(x > 0) || !std::isfinite(x)) {
      throw FitError(std::string("power-law fit: nonpositive or non-finite ") + what);
    }
    out.push_back(std::log(x));
  }
  return out;
}

void check_power_law_input(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw FitError("power-law fit: x and y differ in length");
  if (xs.size() < 3) throw FitError("power-law fit: need at least 3 points");
  if (std::all_of(ys.begin(), ys.end(), [&](double y) { return y == ys[0]; })) {
    throw FitError("power-law fit: y values are constant");
  }
}

void set_interval(PowerLawFit& fit, std::vector<double>& slopes, double level) {
  fit.bootstrap = static_cast<int>(slopes.size());
  if (slopes.empty()) {
    fit.ci_low = fit.ci_high = fit.slope;
    return;
  }
  const double tail = (1 - level) / 2;
  fit.ci_low = quantile(slopes, tail);
  fit.ci_high = quantile(slopes, 1 - tail);
}

}  // namespace

PowerLawFit fit_power_law(std::span<const double> xs, std::span<const double> ys) {
  check_power_law_input(xs, ys);
  const auto lx = logs(xs, "x");
  const auto ly = logs(ys, "y");
  const LinearFit f = least_squares(lx, ly);
  PowerLawFit out;
  out.slope = f.slope;
  out.intercept = f.intercept;
  out.ci_low = out.ci_high = f.slope;
  out.points = static_cast<int>(xs.size());
  return out;
}

PowerLawFit fit_power_law(std::span<const double> xs, std::span<const double> ys, RngStream& rng,
                          int bootstrap, double level) {
  PowerLawFit fit = fit_power_law(xs, ys);
  const auto lx = logs(xs, "x");
  const auto ly = logs(ys, "y");
  const std::size_t n = lx.size();
  std::vector<double> bx(n), by(n), slopes;
  slopes.reserve(static_cast<std::size_t>(std::max(bootstrap, 0)));
  for (int b = 0; b < bootstrap; ++b) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(rng.uniform_below(n));
      bx[i] = lx[k];
      by[i] = ly[k];
    }
    if (std::all_of(bx.begin(), bx.end(), [&](double x) { return x == bx[0]; })) continue;
    slopes.push_back(least_squares(bx, by).slope);
  }
  set_interval(fit, slopes, level);
  return fit;
}

PowerLawFit fit_power_law_grouped(std::span<const double> xs,
                                  const std::vector<std::vector<double>>& groups, RngStream& rng,
                                  int bootstrap, double level) {
  if (xs.size() != groups.size()) throw FitError("power-law fit: x and groups differ in length");
  std::vector<double> means;
  for (const auto& g : groups) {
    if (g.empty()) throw FitError("power-law fit: empty group");
    means.push_back(mean(g));
  }
  PowerLawFit fit = fit_power_law(xs, means);
  const auto lx = logs(xs, "x");
  std::vector<double> ly(xs.size()), slopes;
  for (int b = 0; b < bootstrap; ++b) {
    bool ok = true;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const auto& g = groups[i];
      double s = 0;
      for (std::size_t k = 0; k < g.size(); ++k) s += g[rng.uniform_below(g.size())];
      s /= static_cast<double>(g.size());
      if (!(s > 0)) ok = false;
      ly[i] = ok ? std::log(s) : 0;
    }
    if (ok) slopes.push_back(least_squares(lx, ly).slope);
  }
  set_interval(fit, slopes, level);
  return fit;
}

double ks_distance(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw ParameterError("ks_distance: samples must be nonempty");
  std::vector<double> x(a.begin(), a.end()), y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double na = static_cast<double>(x.size());
  const double nb = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double worst = 0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    worst = std::max(worst, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return worst;
}

double ks_distance_weighted(std::span<const double> xa, std::span<const double> wa,
                            std::span<const double> xb, std::span<const double> wb) {
  if (xa.size() != wa.size() || xb.size() != wb.size()) {
    throw ParameterError("ks_distance_weighted: values and weights differ in length");
  }
  struct Atom {
    double x;
    double w;
    int side;
  };
  std::vector<Atom> atoms;
  double ta = 0, tb = 0;
  for (std::size_t i = 0; i < xa.size(); ++i) {
    if (wa[i] < 0) throw ParameterError("ks_distance_weighted: negative weight");
    atoms.push_back({xa[i], wa[i], 0});
    ta += wa[i];
  }
  for (std::size_t i = 0; i < xb.size(); ++i) {
    if (wb[i] < 0) throw ParameterError("ks_distance_weighted: negative weight");
    atoms.push_back({xb[i], wb[i], 1});
    tb += wb[i];
  }
  if (!(ta > 0) || !(tb > 0)) throw ParameterError("ks_distance_weighted: empty distribution");
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.x < b.x; });
  double fa = 0, fb = 0, worst = 0;
  for (std::size_t i = 0; i < atoms.size();) {
    const double v = atoms[i].x;
    for (; i < atoms.size() && atoms[i].x == v; ++i) (atoms[i].side ? fb : fa) += atoms[i].w;
    worst = std::max(worst, std::abs(fa / ta - fb / tb));
  }
  return worst;
}

double chi_square_statistic(std::span<const std::int64_t> counts) {
  if (counts.size() < 2) throw ParameterError("chi-square: need at least two cells");
  const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::int64_t{0}));
  if (total <= 0) throw ParameterError("chi-square: no observations");
  const double expected = total / static_cast<double>(counts.size());
  double stat = 0;
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  return stat;
}

double chi_square_pvalue(std::span<const std::int64_t> counts) {
  const double stat = chi_square_statistic(counts);
  const boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw ParameterError("mean of an empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double quantile(std::span<const double> xs, double q) {
  if (xs.empty()) throw ParameterError("quantile of an empty sample");
  if (!(q >= 0 && q <= 1)) throw ParameterError("quantile level must lie in [0, 1]");
  std::vector<double> s(xs.begin(), xs.end());
  std::sort(s.begin(), s.end());
  const double pos = q * static_cast<double>(s.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, s.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return s[lo] + frac * (s[hi] - s[lo]);
}

}  // namespace angulate
