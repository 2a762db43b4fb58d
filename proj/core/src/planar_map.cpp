#include <algorithm>
#include <string>

#include "angulate/error.hpp"
#include "angulate/map_metric.hpp"
#include "angulate/planar_map.hpp"

namespace angulate {

PlanarMap::PlanarMap(int p, int n, int vertex_count, std::vector<Edge> edges,
                     std::vector<int> corner_targets, std::vector<std::vector<int>> rotation,
                     OrientedEdge root)
    : p_(p),
      n_(n),
      vertex_count_(vertex_count),
      edges_(std::move(edges)),
      corner_targets_(std::move(corner_targets)),
      root_(root) {
  if (vertex_count_ < 1) throw ParameterError("map needs at least one vertex");
  if (static_cast<int>(rotation.size()) != vertex_count_) {
    throw ParameterError("rotation system must list every vertex");
  }
  const auto vc = static_cast<std::size_t>(vertex_count_);
  adj_offset_.assign(vc + 1, 0);
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= vertex_count_ || e.v < 0 || e.v >= vertex_count_) {
      throw ParameterError("edge endpoint out of range");
    }
    ++adj_offset_[e.u + 1];
    ++adj_offset_[e.v + 1];
  }
  for (std::size_t v = 0; v < vc; ++v) adj_offset_[v + 1] += adj_offset_[v];
  adj_.resize(static_cast<std::size_t>(adj_offset_[vc]));
  std::vector<int> fill(adj_offset_.begin(), adj_offset_.end() - 1);
  for (const Edge& e : edges_) {
    adj_[fill[e.u]++] = e.v;
    adj_[fill[e.v]++] = e.u;
  }

  rot_offset_.assign(vc + 1, 0);
  for (std::size_t v = 0; v < vc; ++v) {
    rot_offset_[v + 1] = rot_offset_[v] + static_cast<int>(rotation[v].size());
  }
  rot_.reserve(static_cast<std::size_t>(rot_offset_[vc]));
  rot_next_.assign(edges_.size() * 2, -1);
  for (std::size_t v = 0; v < vc; ++v) {
    const auto& r = rotation[v];
    for (std::size_t k = 0; k < r.size(); ++k) {
      const int h = r[k];
      if (h < 0 || h >= static_cast<int>(rot_next_.size())) {
        throw StructureError("rotation references unknown half-edge " + std::to_string(h));
      }
      rot_.push_back(h);
      rot_next_[h] = r[(k + 1) % r.size()];
    }
  }
}

std::span<const int> PlanarMap::neighbours(int v) const {
  if (v < 0 || v >= vertex_count_) throw ParameterError("vertex out of range");
  return std::span<const int>(adj_).subspan(
      static_cast<std::size_t>(adj_offset_[v]),
      static_cast<std::size_t>(adj_offset_[v + 1] - adj_offset_[v]));
}

std::span<const int> PlanarMap::rotation(int v) const {
  if (v < 0 || v >= vertex_count_) throw ParameterError("vertex out of range");
  return std::span<const int>(rot_).subspan(
      static_cast<std::size_t>(rot_offset_[v]),
      static_cast<std::size_t>(rot_offset_[v + 1] - rot_offset_[v]));
}

std::vector<Face> faces(const PlanarMap& map) {
  const int halfedges = 2 * map.edge_count();
  // The rotation must be a permutation of the half-edges, each listed at its
  // own origin.
  std::vector<char> listed(static_cast<std::size_t>(halfedges), 0);
  for (int v = 0; v < map.vertex_count(); ++v) {
    for (int h : map.rotation(v)) {
      if (listed[h]) throw StructureError("half-edge " + std::to_string(h) + " listed twice");
      if (map.halfedge_origin(h) != v) {
        throw StructureError("half-edge " + std::to_string(h) + " listed at vertex " +
                             std::to_string(v) + " but starts at " +
                             std::to_string(map.halfedge_origin(h)));
      }
      listed[h] = 1;
    }
  }
  for (int h = 0; h < halfedges; ++h) {
    if (!listed[h]) throw StructureError("half-edge " + std::to_string(h) + " missing from rotation");
  }

  std::vector<Face> out;
  std::vector<char> used(static_cast<std::size_t>(halfedges), 0);
  for (int start = 0; start < halfedges; ++start) {
    if (used[start]) continue;
    Face f;
    int h = start;
    do {
      used[h] = 1;
      f.halfedges.push_back(h);
      h = map.rotation_next(h ^ 1);
      if (static_cast<int>(f.halfedges.size()) > halfedges) {
        throw StructureError("face traversal does not close");
      }
    } while (h != start);
    out.push_back(std::move(f));
  }
  return out;
}

bool MapReport::ok() const noexcept { return first_failure() == nullptr; }

const MapCheck* MapReport::first_failure() const noexcept {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

MapReport validate_map(const PlanarMap& map, const Mobile& mobile) {
  if (map.p() != mobile.p() || map.faces_expected() != mobile.black_count()) {
    MapReport report;
    report.checks.push_back({"size", false, "map and mobile differ in p or n"});
    return report;
  }
  return validate_map(map, mobile.labels());
}

MapReport validate_map(const PlanarMap& map, std::span<const int> labels) {
  MapReport report;
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };
  const int p = map.p();
  const int n = map.faces_expected();

  const int want_vertices = (p - 1) * n + 2;
  add("vertex_count", map.vertex_count() == want_vertices,
      std::to_string(map.vertex_count()) + " vs " + std::to_string(want_vertices));
  add("edge_count", map.edge_count() == p * n,
      std::to_string(map.edge_count()) + " vs " + std::to_string(p * n));

  const DistanceField from_root = bfs(map, kRootVertex);
  const bool connected =
      std::none_of(from_root.dist.begin(), from_root.dist.end(), [](int d) { return d < 0; });
  add("connected", connected, connected ? "" : "some vertex unreachable from the root vertex");

  const bool labels_fit = static_cast<int>(labels.size()) + 1 == map.vertex_count();
  const int shift = labels.empty() ? 0 : 1 - *std::min_element(labels.begin(), labels.end());
  auto shifted = [&](int v) { return v == kRootVertex ? 0 : labels[v - 1] + shift; };

  {
    int bad = -1;
    if (labels_fit) {
      for (int k = 0; k < map.edge_count() && bad < 0; ++k) {
        const Edge e = map.edges()[k];
        if (std::abs(shifted(e.u) - shifted(e.v)) != 1) bad = k;
      }
    }
    add("label_parity", labels_fit && bad < 0,
        !labels_fit ? "label count does not match vertex count"
        : bad < 0   ? ""
                    : "edge " + std::to_string(bad) + " joins labels not differing by 1");
  }

  try {
    const auto fs = faces(map);
    add("face_count", static_cast<int>(fs.size()) == n,
        std::to_string(fs.size()) + " vs " + std::to_string(n));
    int bad = -1;
    for (std::size_t f = 0; f < fs.size() && bad < 0; ++f) {
      if (fs[f].degree() != 2 * p) bad = static_cast<int>(f);
    }
    add("face_degree", bad < 0,
        bad < 0 ? "" : "face " + std::to_string(bad) + " has degree " +
                           std::to_string(fs[bad].degree()));
  } catch (const StructureError& e) {
    add("face_count", false, e.what());
    add("face_degree", false, e.what());
  }

  {
    int bad = -1;
    if (labels_fit && connected) {
      for (int v = 1; v < map.vertex_count() && bad < 0; ++v) {
        if (from_root.dist[v] != shifted(v)) bad = v;
      }
    }
    add("root_distance", labels_fit && connected && bad < 0,
        bad < 0 ? "" : "vertex " + std::to_string(bad) + " at distance " +
                           std::to_string(from_root.dist[bad]) + ", label " +
                           std::to_string(shifted(bad)));
  }
  return report;
}

}  // namespace angulate
