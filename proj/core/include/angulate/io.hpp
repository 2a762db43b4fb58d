#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "angulate/continuum.hpp"
#include "angulate/mobile.hpp"
#include "angulate/planar_map.hpp"

namespace angulate {

// PMOBILE 1:
//   PMOBILE 1
//   p <p> n <n> variant <rooted|free>
//   H <pn+1 integers>
//   V <pn+1 integers>
void write_mobile(std::ostream& out, const Mobile& mobile);
Mobile read_mobile(std::istream& in);

// PMAP 1:
//   PMAP 1
//   p <p> n <n> vertices <V> edges <E>
//   root 0 <v0>
//   e <u> <v>      one line per edge, in source corner order
void write_map(std::ostream& out, const PlanarMap& map);

struct MapFile {
  int p = 0;
  int n = 0;
  int vertices = 0;
  OrientedEdge root;
  std::vector<Edge> edges;
};

// Syntax-level parse; counts are not checked against each other.
MapFile read_map(std::istream& in);

// Rebuilds the rotation system from the edge list: the source of edge i is
// the vertex of corner i, and corner labels are graph distances from vertex
// 0. Throws StructureError when the counts are inconsistent or the rebuilt
// edges differ from the file.
PlanarMap rebuild_map(const MapFile& file);

// rebuild_map followed by validate_map against the distance labels. Parse
// level problems become failed checks instead of exceptions.
MapReport validate_map_file(const MapFile& file);

// Integers print without exponent; other values in the shortest decimal form
// that reads back to the same double.
std::string format_number(double value);

// CSV with columns t,e,z.
void write_excursion_csv(std::ostream& out, const LabeledExcursion& x);

// Square matrix of real distances, one row per line.
void write_matrix_csv(std::ostream& out, const GridMetric& gm, GridDistance which);

}  // namespace angulate
