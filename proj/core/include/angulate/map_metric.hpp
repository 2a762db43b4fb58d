#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "angulate/dense_matrix.hpp"
#include "angulate/mobile.hpp"
#include "angulate/planar_map.hpp"
#include "angulate/rng.hpp"

namespace angulate {

struct DistanceField {
  int source = 0;
  std::vector<int> dist;  // -1 for unreachable vertices
};

DistanceField bfs(const PlanarMap& map, int source);

// Number of vertices at graph distance <= r from center.
int ball_count(const PlanarMap& map, int center, int r);
int ball_count(const DistanceField& field, int r);

// Largest distance in the field.
int eccentricity(const DistanceField& field);

// Double-sweep lower bound on the graph diameter, starting from `start`.
int diameter_lower_bound(const PlanarMap& map, int start);

// Sparse-table range minimum over an integer sequence; O(1) queries.
class RangeMin {
 public:
  explicit RangeMin(std::span<const int> values);

  // min over the closed index range between i and j (either order).
  int min(std::size_t i, std::size_t j) const;
  std::size_t size() const noexcept { return size_; }

 private:
  std::size_t size_;
  std::vector<std::vector<int>> levels_;
};

// d°(i, j) = V_i + V_j - 2 min_{[i^j, ivj]} V + 2, by a direct scan.
int d_circ(std::span<const int> labels, std::size_t i, std::size_t j);

// The same bound backed by a RangeMin.
class ContourBound {
 public:
  explicit ContourBound(std::span<const int> labels);
  int operator()(std::size_t i, std::size_t j) const;
  std::size_t size() const noexcept { return labels_.size(); }

 private:
  std::vector<int> labels_;
  RangeMin rmq_;
};

// White-vertex map ids along the contour: vertex of contour index i.
std::vector<int> contour_vertices(const ContourPair& c);

struct Lemma31Report {
  std::int64_t pairs_checked = 0;
  std::int64_t violations = 0;
  bool exhaustive = false;
  // First violating pair, if any.
  std::int64_t first_i = -1;
  std::int64_t first_j = -1;
};

// Checks d_n(i, j) <= d°(i, j). All (pn+1)^2 pairs when that fits in
// pair_budget, else pair_budget sampled pairs: ceil(sqrt(budget)) uniform
// source indices, each paired with uniform targets from one BFS.
Lemma31Report verify_lemma31(const PlanarMap& map, const ContourPair& c,
                             std::int64_t pair_budget, RngStream& rng);

// Grid contour indices floor(pn * k / m), k = 0..m.
std::vector<int> grid_indices(int contour_length, int m);

struct GridSample {
  int m = 0;
  std::vector<int> indices;
  DenseMatrix<int> graph_distance;  // d_n between grid vertices
  double scale = 0;                 // c_V n^{-1/4}

  double scaled(std::size_t j, std::size_t k) const { return scale * graph_distance(j, k); }
};

GridSample grid_sample(const PlanarMap& map, const ContourPair& c, int m);
// Same on explicit contour indices; m = indices.size() - 1.
GridSample grid_sample(const PlanarMap& map, const ContourPair& c, std::vector<int> indices);

// Grid started at the first label minimum s: s + floor(pn k / m), wrapped
// cyclically with pn identified with 0.
// For rooted mobiles s = 0 and this equals grid_indices.
std::vector<int> grid_indices_from_min(const ContourPair& c, int m);

// Closure of d° restricted to the given contour indices. The diagonal is 0
// (empty chain) even though d°(i, i) = 2.
DenseMatrix<int> discrete_dstar(const ContourPair& c, std::span<const int> grid);

// sup over grid pairs of the difference of rescaled distances between two
// maps sharing p, each sampled at s_k = k/m.
double cross_distortion(const PlanarMap& map_a, const ContourPair& c_a,
                        const PlanarMap& map_b, const ContourPair& c_b, int m);
double cross_distortion(const GridSample& a, const GridSample& b);

// Draws k uniform vertices (root vertex included) and returns the
// k(k-1)/2 pairwise graph distances, pairs ordered (0,1), (0,2), ...
std::vector<int> two_point_samples(const PlanarMap& map, RngStream& rng, int k);

}  // namespace angulate
