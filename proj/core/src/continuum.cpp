#include "angulate/continuum.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "angulate/map_metric.hpp"
#include "angulate/sampler.hpp"
#include "angulate/stats.hpp"

namespace angulate {

LabeledExcursion labeled_excursion(const ContourPair& c, int m) {
  if (m < 2) throw ParameterError("labeled excursion: m must be >= 2, got " + std::to_string(m));
  const std::size_t len = c.heights.size();
  if (len < 2 || c.labels.size() != len) {
    throw ParameterError("labeled excursion: contour pair is malformed");
  }
  auto [e, z] = reroot_at_min<int>(c.heights, c.labels);

  LabeledExcursion x;
  x.m = m;
  x.provenance.p = c.p;
  x.provenance.n = c.n;
  const ScalingConstants k(c.p);
  x.e_scale = k.contour / std::sqrt(static_cast<double>(c.n)) / 2;
  x.z_scale = k.label * std::pow(static_cast<double>(c.n), -0.25);
  const auto idx = grid_indices(static_cast<int>(len - 1), m);
  x.e_units.reserve(idx.size());
  x.z_units.reserve(idx.size());
  for (int i : idx) {
    x.e_units.push_back(e[static_cast<std::size_t>(i)]);
    x.z_units.push_back(z[static_cast<std::size_t>(i)]);
  }
  for (int v : x.e_units) x.e_vals.push_back(x.e_scale * v);
  for (int v : x.z_units) x.z_vals.push_back(x.z_scale * v);
  return x;
}

LabeledExcursion sample_labeled_excursion(int m, RngStream& rng, int generator_faces) {
  if (m < 2) throw ParameterError("labeled excursion: m must be >= 2, got " + std::to_string(m));
  if (generator_faces < 1) throw ParameterError("labeled excursion: generator size must be >= 1");
  const Mobile mob = sample_free_mobile(2, generator_faces, rng);
  LabeledExcursion x = labeled_excursion(contour(mob), m);
  x.provenance.seed = rng.master_seed();
  x.provenance.stream = rng.stream_index();
  return x;
}

namespace {

void check_pair(std::size_t size, std::size_t s, std::size_t t) {
  if (s >= size || t >= size) throw ParameterError("grid index out of range");
}

double interval_formula(std::span<const double> g, std::size_t s, std::size_t t) {
  check_pair(g.size(), s, t);
  const auto lo = std::min(s, t);
  const auto hi = std::max(s, t);
  const double m = *std::min_element(g.begin() + static_cast<std::ptrdiff_t>(lo),
                                     g.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  return g[s] + g[t] - 2 * m;
}

}  // namespace

double tree_pseudo_metric(std::span<const double> g, std::size_t s, std::size_t t) {
  return interval_formula(g, s, t);
}

double d_circ_cont(std::span<const double> z, std::size_t s, std::size_t t) {
  return interval_formula(z, s, t);
}

GridMetric grid_dstar(std::span<const int> z_units, double scale) {
  const std::size_t size = z_units.size();
  if (size < 2) throw ParameterError("grid_dstar: need at least two grid points");
  if (size > kClosureMaxPoints) {
    throw BudgetError("grid_dstar: " + std::to_string(size) + " grid points exceed the closure budget of " +
                      std::to_string(kClosureMaxPoints) + "; use a smaller --grid");
  }
  GridMetric gm;
  gm.m = static_cast<int>(size - 1);
  gm.scale = scale;
  gm.circ_units = DenseMatrix<int>(size, 0);
  for (std::size_t a = 0; a < size; ++a) {
    int low = z_units[a];
    for (std::size_t b = a; b < size; ++b) {
      low = std::min(low, z_units[b]);
      const int d = z_units[a] + z_units[b] - 2 * low;
      gm.circ_units(a, b) = d;
      gm.circ_units(b, a) = d;
    }
  }
  gm.star_units = gm.circ_units;
  shortest_path_closure(gm.star_units);
  return gm;
}

GridMetric grid_dstar(const LabeledExcursion& x) { return grid_dstar(x.z_units, x.z_scale); }

double Clusters::fraction_in_larger_than(int k) const {
  if (component.empty()) return 0;
  std::size_t inside = 0;
  for (int c : component) {
    if (sizes[static_cast<std::size_t>(c)] > k) ++inside;
  }
  return static_cast<double>(inside) / static_cast<double>(component.size());
}

Clusters equivalence_clusters(const GridMetric& gm, double tol) {
  if (!(tol >= 0)) throw ParameterError("equivalence_clusters: tol must be >= 0");
  const std::size_t size = gm.points();
  std::vector<int> parent(size);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = a + 1; b < size; ++b) {
      if (gm.d_star(a, b) > tol) continue;
      const int ra = find(static_cast<int>(a));
      const int rb = find(static_cast<int>(b));
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  Clusters out;
  out.component.assign(size, -1);
  std::vector<int> id_of_root(size, -1);
  for (std::size_t a = 0; a < size; ++a) {
    const int r = find(static_cast<int>(a));
    if (id_of_root[r] < 0) {
      id_of_root[r] = static_cast<int>(out.sizes.size());
      out.sizes.push_back(0);
      out.exemplars.push_back(static_cast<int>(a));
    }
    out.component[a] = id_of_root[r];
    ++out.sizes[static_cast<std::size_t>(id_of_root[r])];
  }
  return out;
}

double occupation_measure(std::span<const double> z, double eps) {
  if (!(eps >= 0)) throw ParameterError("occupation_measure: eps must be >= 0");
  if (z.empty()) throw ParameterError("occupation_measure: empty sequence");
  const auto hits = std::count_if(z.begin(), z.end(), [eps](double v) { return v <= eps; });
  return static_cast<double>(hits) / static_cast<double>(z.size());
}

std::vector<double> ball_mass_profile(const GridMetric& gm, std::span<const double> radii,
                                      GridDistance which) {
  for (double r : radii) {
    if (!(r > 0)) throw ParameterError("ball_mass_profile: radii must be positive");
  }
  const DenseMatrix<int>& units = which == GridDistance::star ? gm.star_units : gm.circ_units;
  const std::size_t size = gm.points();
  int top = 0;
  for (std::size_t a = 0; a < size; ++a) {
    for (int v : units.row(a)) top = std::max(top, v);
  }
  // Histogram of unit distances over all ordered pairs; mass below r is a
  // prefix sum.
  std::vector<std::int64_t> hist(static_cast<std::size_t>(top) + 1, 0);
  for (std::size_t a = 0; a < size; ++a) {
    for (int v : units.row(a)) ++hist[static_cast<std::size_t>(v)];
  }
  const double pairs = static_cast<double>(size) * static_cast<double>(size);
  std::vector<double> out;
  out.reserve(radii.size());
  for (double r : radii) {
    std::int64_t below = 0;
    for (std::size_t u = 0; u < hist.size() && gm.scale * static_cast<double>(u) < r; ++u) below += hist[u];
    out.push_back(static_cast<double>(below) / pairs);
  }
  return out;
}

DimensionEstimate estimate_dimension(std::span<const double> radii, std::span<const double> masses,
                                     RngStream& rng, int bootstrap) {
  const PowerLawFit f = fit_power_law(radii, masses, rng, bootstrap);
  return {f.slope, f.intercept, f.ci_low, f.ci_high};
}

}  // namespace angulate
