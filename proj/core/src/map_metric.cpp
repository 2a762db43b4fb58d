#include "angulate/map_metric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "angulate/error.hpp"

namespace angulate {

DistanceField bfs(const PlanarMap& map, int source) {
  if (source < 0 || source >= map.vertex_count()) {
    throw ParameterError("bfs: unknown vertex " + std::to_string(source));
  }
  DistanceField field;
  field.source = source;
  field.dist.assign(static_cast<std::size_t>(map.vertex_count()), -1);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(map.vertex_count()));
  field.dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    const int next = field.dist[v] + 1;
    for (int w : map.neighbours(v)) {
      if (field.dist[w] < 0) {
        field.dist[w] = next;
        queue.push_back(w);
      }
    }
  }
  return field;
}

int ball_count(const DistanceField& field, int r) {
  if (r < 0) throw ParameterError("ball radius must be >= 0");
  return static_cast<int>(std::count_if(field.dist.begin(), field.dist.end(),
                                        [r](int d) { return d >= 0 && d <= r; }));
}

int ball_count(const PlanarMap& map, int center, int r) {
  if (r < 0) throw ParameterError("ball radius must be >= 0");
  return ball_count(bfs(map, center), r);
}

int eccentricity(const DistanceField& field) {
  return *std::max_element(field.dist.begin(), field.dist.end());
}

int diameter_lower_bound(const PlanarMap& map, int start) {
  const DistanceField first = bfs(map, start);
  const auto far = std::max_element(first.dist.begin(), first.dist.end()) - first.dist.begin();
  return eccentricity(bfs(map, static_cast<int>(far)));
}

RangeMin::RangeMin(std::span<const int> values) : size_(values.size()) {
  levels_.emplace_back(values.begin(), values.end());
  for (std::size_t width = 1; 2 * width <= size_; width *= 2) {
    const auto& prev = levels_.back();
    std::vector<int> next(size_ - 2 * width + 1);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = std::min(prev[i], prev[i + width]);
    levels_.push_back(std::move(next));
  }
}

int RangeMin::min(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (j >= size_) throw ParameterError("range-min index out of range");
  const std::size_t len = j - i + 1;
  const int level = std::bit_width(len) - 1;
  const auto& row = levels_[static_cast<std::size_t>(level)];
  return std::min(row[i], row[j + 1 - (std::size_t{1} << level)]);
}

int d_circ(std::span<const int> labels, std::size_t i, std::size_t j) {
  if (i >= labels.size() || j >= labels.size()) {
    throw ParameterError("d_circ: contour index out of range");
  }
  const auto lo = std::min(i, j);
  const auto hi = std::max(i, j);
  const int m = *std::min_element(labels.begin() + static_cast<std::ptrdiff_t>(lo),
                                  labels.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  return labels[i] + labels[j] - 2 * m + 2;
}

ContourBound::ContourBound(std::span<const int> labels)
    : labels_(labels.begin(), labels.end()), rmq_(labels_) {}

int ContourBound::operator()(std::size_t i, std::size_t j) const {
  if (i >= labels_.size() || j >= labels_.size()) {
    throw ParameterError("d_circ: contour index out of range");
  }
  return labels_[i] + labels_[j] - 2 * rmq_.min(i, j) + 2;
}

std::vector<int> contour_vertices(const ContourPair& c) {
  const PTree tree = PTree::from_heights(c.p, c.heights);
  std::vector<int> out;
  out.reserve(tree.contour().size());
  for (int w : tree.contour()) out.push_back(map_vertex(w));
  return out;
}

Lemma31Report verify_lemma31(const PlanarMap& map, const ContourPair& c,
                             std::int64_t pair_budget, RngStream& rng) {
  const std::vector<int> vertex_at = contour_vertices(c);
  if (static_cast<int>(vertex_at.size()) != map.edge_count() + 1) {
    throw ParameterError("verify_lemma31: contour does not match the map");
  }
  const ContourBound bound(c.labels);
  const auto len = static_cast<std::int64_t>(vertex_at.size());
  Lemma31Report report;
  auto check = [&](std::int64_t i, const DistanceField& field, std::int64_t j) {
    ++report.pairs_checked;
    if (field.dist[vertex_at[j]] > bound(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) {
      if (report.violations++ == 0) {
        report.first_i = i;
        report.first_j = j;
      }
    }
  };

  if (len * len <= pair_budget) {
    report.exhaustive = true;
    // One BFS per distinct white vertex, reused for all its contour indices.
    std::vector<std::vector<std::int64_t>> occurrences(static_cast<std::size_t>(map.vertex_count()));
    for (std::int64_t i = 0; i < len; ++i) occurrences[vertex_at[i]].push_back(i);
    for (int v = 0; v < map.vertex_count(); ++v) {
      if (occurrences[v].empty()) continue;
      const DistanceField field = bfs(map, v);
      for (std::int64_t i : occurrences[v]) {
        for (std::int64_t j = 0; j < len; ++j) check(i, field, j);
      }
    }
    return report;
  }

  const auto sources = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(pair_budget))));
  std::int64_t remaining = pair_budget;
  for (std::int64_t s = 0; s < sources && remaining > 0; ++s) {
    const auto i = static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(len)));
    const DistanceField field = bfs(map, vertex_at[i]);
    const std::int64_t targets = std::min(remaining, (pair_budget + sources - 1) / sources);
    for (std::int64_t t = 0; t < targets; ++t) {
      check(i, field, static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(len))));
    }
    remaining -= targets;
  }
  return report;
}

std::vector<int> grid_indices(int contour_length, int m) {
  if (m < 1) throw ParameterError("grid needs m >= 1");
  std::vector<int> out(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    out[k] = static_cast<int>(static_cast<std::int64_t>(contour_length) * k / m);
  }
  return out;
}

GridSample grid_sample(const PlanarMap& map, const ContourPair& c, int m) {
  return grid_sample(map, c, grid_indices(c.p * c.n, m));
}

GridSample grid_sample(const PlanarMap& map, const ContourPair& c, std::vector<int> indices) {
  if (indices.size() < 2) throw ParameterError("grid_sample: need at least two grid points");
  const std::vector<int> vertex_at = contour_vertices(c);
  GridSample g;
  g.m = static_cast<int>(indices.size() - 1);
  g.indices = std::move(indices);
  g.scale = ScalingConstants(c.p).label * std::pow(static_cast<double>(c.n), -0.25);
  const std::size_t size = g.indices.size();
  g.graph_distance = DenseMatrix<int>(size, 0);
  for (std::size_t j = 0; j < size; ++j) {
    if (g.indices[j] < 0 || static_cast<std::size_t>(g.indices[j]) >= vertex_at.size()) {
      throw ParameterError("grid_sample: contour index out of range");
    }
  }
  for (std::size_t j = 0; j < size; ++j) {
    const DistanceField field = bfs(map, vertex_at[g.indices[j]]);
    for (std::size_t k = 0; k < size; ++k) g.graph_distance(j, k) = field.dist[vertex_at[g.indices[k]]];
  }
  return g;
}

std::vector<int> grid_indices_from_min(const ContourPair& c, int m) {
  const int len = c.p * c.n;
  const int s = static_cast<int>(std::min_element(c.labels.begin(), c.labels.end()) - c.labels.begin());
  std::vector<int> out = grid_indices(len, m);
  for (int& i : out) i = i + s > len ? i + s - len : i + s;
  return out;
}

DenseMatrix<int> discrete_dstar(const ContourPair& c, std::span<const int> grid) {
  const ContourBound bound(c.labels);
  const std::size_t size = grid.size();
  if (size > kClosureMaxPoints) {
    throw BudgetError("discrete_dstar: grid of " + std::to_string(size) + " points exceeds " +
                      std::to_string(kClosureMaxPoints));
  }
  DenseMatrix<int> w(size, 0);
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      w(a, b) = bound(static_cast<std::size_t>(grid[a]), static_cast<std::size_t>(grid[b]));
    }
  }
  shortest_path_closure(w);
  return w;
}

double cross_distortion(const GridSample& a, const GridSample& b) {
  if (a.m != b.m) throw ParameterError("cross_distortion: grids differ in size");
  double worst = 0;
  const std::size_t size = a.indices.size();
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t k = 0; k < size; ++k) {
      worst = std::max(worst, std::abs(a.scaled(j, k) - b.scaled(j, k)));
    }
  }
  return worst;
}

double cross_distortion(const PlanarMap& map_a, const ContourPair& c_a,
                        const PlanarMap& map_b, const ContourPair& c_b, int m) {
  if (c_a.p != c_b.p) throw ParameterError("cross_distortion: maps must share p");
  if (m < 2) throw ParameterError("cross_distortion: m must be >= 2");
  return cross_distortion(grid_sample(map_a, c_a, m), grid_sample(map_b, c_b, m));
}

std::vector<int> two_point_samples(const PlanarMap& map, RngStream& rng, int k) {
  if (k < 2) throw ParameterError("two_point_samples: k must be >= 2");
  std::vector<int> points(static_cast<std::size_t>(k));
  for (int& v : points) v = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(map.vertex_count())));
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k) * (k - 1) / 2);
  for (int a = 0; a + 1 < k; ++a) {
    const DistanceField field = bfs(map, points[a]);
    for (int b = a + 1; b < k; ++b) out.push_back(field.dist[points[b]]);
  }
  return out;
}

}  // namespace angulate
