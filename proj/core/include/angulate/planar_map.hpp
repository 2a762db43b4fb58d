#pragma once

#include <span>
#include <string>
#include <vector>

#include "angulate/mobile.hpp"

namespace angulate {

inline constexpr int kRootVertex = 0;

// Vertex id of a white mobile vertex in the map (0 is the root vertex).
constexpr int map_vertex(int white) noexcept { return white + 1; }

struct Edge {
  int u;  // the vertex whose corner created the edge
  int v;  // its successor, or kRootVertex

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct OrientedEdge {
  int tail;
  int head;
};

// A rooted planar map given by an edge list and a rotation system.
//
// Half-edge 2k is edge k seen from edges[k].u, half-edge 2k+1 from
// edges[k].v. The rotation lists, for each vertex, its half-edges in cyclic
// order. Multi-edges are allowed; loops are not produced by the BDG
// construction but are not rejected here.
class PlanarMap {
 public:
  PlanarMap(int p, int n, int vertex_count, std::vector<Edge> edges,
            std::vector<int> corner_targets, std::vector<std::vector<int>> rotation,
            OrientedEdge root);

  int p() const noexcept { return p_; }
  int faces_expected() const noexcept { return n_; }
  int vertex_count() const noexcept { return vertex_count_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  OrientedEdge root() const noexcept { return root_; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  // corner_targets()[i] = contour index of the successor corner of corner i,
  // or -1 when corner i was joined to the root vertex.
  std::span<const int> corner_targets() const noexcept { return corner_targets_; }

  // Neighbours of v with multiplicity.
  std::span<const int> neighbours(int v) const;
  // Half-edges around v in rotation order.
  std::span<const int> rotation(int v) const;

  int halfedge_origin(int h) const { return h % 2 == 0 ? edges_[h / 2].u : edges_[h / 2].v; }
  int halfedge_target(int h) const { return halfedge_origin(h ^ 1); }
  // Next half-edge around the origin of h; -1 if h is missing from the rotation.
  int rotation_next(int h) const { return rot_next_.at(h); }

 private:
  int p_;
  int n_;
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<int> corner_targets_;
  OrientedEdge root_;
  std::vector<int> adj_offset_;
  std::vector<int> adj_;
  std::vector<int> rot_offset_;
  std::vector<int> rot_;
  std::vector<int> rot_next_;
};

struct PointedMap {
  PlanarMap map;
  int pointed_vertex = kRootVertex;
  int label_shift = 0;  // 1 - min label of the source free mobile
};

// BDG construction for a rooted mobile: corner i with label 1 is joined to
// the root vertex, any other corner to its successor, the first later corner
// carrying label - 1. Throws ValidationError on an invalid mobile.
PlanarMap build_map(const Mobile& mobile);

// Same edge rules after shifting the labels of a free mobile so the minimum
// is 1; successors are searched cyclically. The root vertex is the
// distinguished point.
PointedMap build_pointed_map(const Mobile& mobile);

// Edge and rotation rules shared by the two builders, on the corner sequence
// itself: corner_vertices[i] is the map vertex (>= 1) of corner i, and
// corner_labels[i] its label, with minimum 1. Throws StructureError when a
// corner has no successor.
PlanarMap build_from_corners(int p, int n, std::span<const int> corner_vertices,
                             std::span<const int> corner_labels);

struct Face {
  std::vector<int> halfedges;
  int degree() const noexcept { return static_cast<int>(halfedges.size()); }
};

// Orbits of h -> rotation_next(h ^ 1). Throws StructureError if the rotation
// is not a permutation of all half-edges.
std::vector<Face> faces(const PlanarMap& map);

struct MapCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct MapReport {
  std::vector<MapCheck> checks;
  bool ok() const noexcept;
  const MapCheck* first_failure() const noexcept;
};

// Vertex/edge/face counts, connectivity, label parity across edges, face
// degrees and the distance identity d(root vertex, u) = label(u) + shift,
// where shift = 1 - min label (0 for rooted mobiles).
MapReport validate_map(const PlanarMap& map, const Mobile& mobile);

// The same checks with labels given per map vertex 1..V-1 (index v-1).
MapReport validate_map(const PlanarMap& map, std::span<const int> vertex_labels);

}  // namespace angulate
