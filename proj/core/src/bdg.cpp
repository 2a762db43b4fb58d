#include <algorithm>
#include <string>

#include "angulate/error.hpp"
#include "angulate/planar_map.hpp"

namespace angulate {

// Successors are found by one backward sweep over two copies of the corner
// sequence, so each corner sees the nearest later corner (cyclically) with
// label - 1. For a rooted mobile the cyclic search never wraps past corner
// 0 = v_pn, which is exactly the "first among v_{i+1}..v_pn" rule.
PlanarMap build_from_corners(int p, int n, std::span<const int> corner_vertices,
                             std::span<const int> corner_labels) {
  if (p < 2 || n < 1) throw ParameterError("build_from_corners: need p >= 2 and n >= 1");
  const int corners = p * n;
  if (static_cast<int>(corner_vertices.size()) != corners ||
      static_cast<int>(corner_labels.size()) != corners) {
    throw ParameterError("build_from_corners: expected " + std::to_string(corners) + " corners");
  }
  const int vertex_count = (p - 1) * n + 2;
  for (int v : corner_vertices) {
    if (v <= kRootVertex || v >= vertex_count) {
      throw StructureError("corner vertex " + std::to_string(v) + " out of range");
    }
  }
  if (*std::min_element(corner_labels.begin(), corner_labels.end()) != 1) {
    throw StructureError("corner labels must have minimum 1");
  }
  const int max_label = *std::max_element(corner_labels.begin(), corner_labels.end());

  std::vector<int> target(static_cast<std::size_t>(corners), -1);
  std::vector<int> last_seen(static_cast<std::size_t>(max_label) + 1, -1);
  for (int j = 2 * corners - 1; j >= 0; --j) {
    const int c = j % corners;
    const int label = corner_labels[c];
    if (j < corners && label > 1) {
      const int pos = last_seen[label - 1];
      if (pos < 0) {
        throw StructureError("no successor for corner " + std::to_string(c));
      }
      target[c] = pos % corners;
    }
    last_seen[label] = j;
  }

  std::vector<Edge> edges(static_cast<std::size_t>(corners));
  std::vector<int> in_offset(static_cast<std::size_t>(corners) + 1, 0);
  int to_root = 0;
  for (int i = 0; i < corners; ++i) {
    edges[i].u = corner_vertices[i];
    edges[i].v = target[i] < 0 ? kRootVertex : corner_vertices[target[i]];
    if (target[i] < 0) {
      ++to_root;
    } else {
      ++in_offset[target[i] + 1];
    }
  }
  for (int c = 0; c < corners; ++c) in_offset[c + 1] += in_offset[c];
  std::vector<int> incoming(static_cast<std::size_t>(in_offset[corners]));
  {
    std::vector<int> fill(in_offset.begin(), in_offset.end() - 1);
    for (int i = 0; i < corners; ++i) {
      if (target[i] >= 0) incoming[fill[target[i]]++] = i;
    }
  }

  // Rotation around a white vertex: its corners in contour order; inside a
  // corner c, incoming edges by decreasing cyclic distance (i - c) mod pn,
  // then the edge leaving c.
  std::vector<std::vector<int>> rotation(static_cast<std::size_t>(vertex_count));
  rotation[kRootVertex].reserve(static_cast<std::size_t>(to_root));
  std::vector<int> in_corner;
  for (int c = 0; c < corners; ++c) {
    auto& rot = rotation[corner_vertices[c]];
    in_corner.assign(incoming.begin() + in_offset[c], incoming.begin() + in_offset[c + 1]);
    std::sort(in_corner.begin(), in_corner.end(), [&](int a, int b) {
      return (a - c + corners) % corners > (b - c + corners) % corners;
    });
    for (int i : in_corner) rot.push_back(2 * i + 1);
    rot.push_back(2 * c);
  }
  // Around the root vertex: by decreasing source corner.
  for (int i = corners - 1; i >= 0; --i) {
    if (target[i] < 0) rotation[kRootVertex].push_back(2 * i + 1);
  }

  return PlanarMap(p, n, vertex_count, std::move(edges), std::move(target), std::move(rotation),
                   OrientedEdge{kRootVertex, corner_vertices[0]});
}

namespace {

PlanarMap build_from_labels(const PTree& tree, std::span<const int> labels) {
  const int corners = tree.contour_length();
  const auto walk = tree.contour();
  std::vector<int> vertices(static_cast<std::size_t>(corners)), corner_labels(vertices.size());
  for (int c = 0; c < corners; ++c) {
    vertices[c] = map_vertex(walk[c]);
    corner_labels[c] = labels[walk[c]];
  }
  return build_from_corners(tree.p(), tree.black_count(), vertices, corner_labels);
}

}  // namespace

PlanarMap build_map(const Mobile& mobile) {
  if (mobile.variant() != Variant::rooted) {
    throw ParameterError("build_map needs a rooted mobile; use build_pointed_map for free ones");
  }
  require_valid(mobile);
  return build_from_labels(mobile.tree(), mobile.labels());
}

PointedMap build_pointed_map(const Mobile& mobile) {
  require_valid(mobile);
  const auto labels = mobile.labels();
  const int shift = 1 - *std::min_element(labels.begin(), labels.end());
  std::vector<int> shifted(labels.begin(), labels.end());
  for (int& l : shifted) l += shift;
  return PointedMap{build_from_labels(mobile.tree(), shifted), kRootVertex, shift};
}

}  // namespace angulate
