#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "angulate/dense_matrix.hpp"
#include "angulate/error.hpp"
#include "angulate/mobile.hpp"
#include "angulate/rng.hpp"

namespace angulate {

inline constexpr int kDefaultGeneratorFaces = 1 << 14;
inline constexpr int kDefaultGrid = 512;

struct Provenance {
  int p = 2;
  int n = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// Grid approximation of the re-rooted pair (e, Z) built from a rescaled
// free mobile. Values are kept both as integers (heights and label
// differences of the generating mobile) and as reals; real value =
// scale * integer, so exact identities can be checked on the integers.
struct LabeledExcursion {
  int m = 0;
  std::vector<double> e_vals;  // m+1 values
  std::vector<double> z_vals;  // m+1 values, z_vals[0] = 0 = min
  std::vector<int> e_units;    // heights H (twice the contour)
  std::vector<int> z_units;    // label minus the minimum label
  double e_scale = 0;          // c_C n^{-1/2} / 2
  double z_scale = 0;          // c_V n^{-1/4}
  Provenance provenance;
};

// Cyclic re-rooting at the first argmin of z:
//   z'_t = z_{s+t} - z_s,   e'_t = e_s + e_{s+t} - 2 min_{[s ^ s+t, s v s+t]} e
// with s+t taken cyclically on indices 0..L (L = size-1, index L
// identified with 0).
template <class T>
std::pair<std::vector<T>, std::vector<T>> reroot_at_min(std::span<const T> e, std::span<const T> z) {
  if (e.size() != z.size()) throw ParameterError("reroot_at_min: sequences differ in length");
  if (e.size() < 2) throw ParameterError("reroot_at_min: need at least two points");
  const std::size_t last = e.size() - 1;
  const std::size_t s = static_cast<std::size_t>(std::min_element(z.begin(), z.end()) - z.begin());

  // min of e over [s, u] for u >= s, and over [u, s] for u <= s.
  std::vector<T> right(e.size()), left(e.size());
  right[s] = e[s];
  for (std::size_t u = s + 1; u <= last; ++u) right[u] = std::min(right[u - 1], e[u]);
  left[s] = e[s];
  for (std::size_t u = s; u-- > 0;) left[u] = std::min(left[u + 1], e[u]);

  std::vector<T> e_out(e.size()), z_out(e.size());
  for (std::size_t t = 0; t <= last; ++t) {
    const std::size_t u = s + t <= last ? s + t : s + t - last;
    const T m = u >= s ? right[u] : left[u];
    e_out[t] = e[s] + e[u] - 2 * m;
    z_out[t] = z[u] - z[s];
  }
  return {std::move(e_out), std::move(z_out)};
}

// Deterministic part of sample_labeled_excursion: rescale, re-root and
// resample the contour pair of a free mobile onto m+1 grid points.
LabeledExcursion labeled_excursion(const ContourPair& c, int m);

// Samples a free p = 2 mobile with generator_faces black vertices and turns
// it into a LabeledExcursion on m+1 points.
LabeledExcursion sample_labeled_excursion(int m, RngStream& rng,
                                          int generator_faces = kDefaultGeneratorFaces);

// d_g(s, t) = g(s) + g(t) - 2 min_{[s^t, svt]} g.
double tree_pseudo_metric(std::span<const double> g, std::size_t s, std::size_t t);

// D°(s, t) = z_s + z_t - 2 min_{[s^t, svt]} z.
double d_circ_cont(std::span<const double> z, std::size_t s, std::size_t t);

// D° and its shortest-path closure D* on grid points, in integer label
// units; real distances are scale * units.
struct GridMetric {
  int m = 0;
  double scale = 1;
  DenseMatrix<int> circ_units;
  DenseMatrix<int> star_units;

  std::size_t points() const noexcept { return circ_units.size(); }
  double d_circ(std::size_t a, std::size_t b) const { return scale * circ_units(a, b); }
  double d_star(std::size_t a, std::size_t b) const { return scale * star_units(a, b); }
  double time(std::size_t k) const { return static_cast<double>(k) / m; }
};

// z_units must be the re-rooted label differences (minimum 0 at index 0).
// Refuses grids above kClosureMaxPoints points.
GridMetric grid_dstar(std::span<const int> z_units, double scale);
GridMetric grid_dstar(const LabeledExcursion& x);

struct Clusters {
  std::vector<int> component;   // per grid point
  std::vector<int> sizes;       // per component
  std::vector<int> exemplars;   // smallest grid index of each component

  // Fraction of grid points lying in components larger than k.
  double fraction_in_larger_than(int k) const;
};

// Connected components of {D* <= tol}.
Clusters equivalence_clusters(const GridMetric& gm, double tol);

// Fraction of points with z <= eps.
double occupation_measure(std::span<const double> z, double eps);

enum class GridDistance { star, circ };

// For each radius r: mean over centers a of the fraction of points b with
// D(a, b) < r.
std::vector<double> ball_mass_profile(const GridMetric& gm, std::span<const double> radii,
                                      GridDistance which = GridDistance::star);

struct DimensionEstimate {
  double slope = 0;
  double intercept = 0;
  double ci_low = 0;
  double ci_high = 0;
};

// Log-log least squares of mass against radius, bootstrap CI over points.
DimensionEstimate estimate_dimension(std::span<const double> radii, std::span<const double> masses,
                                     RngStream& rng, int bootstrap = 1000);

}  // namespace angulate
