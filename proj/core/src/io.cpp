#include "angulate/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "angulate/error.hpp"
#include "angulate/map_metric.hpp"

namespace angulate {

namespace {

std::string next_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError(std::string("unexpected end of file, expected ") + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

void expect_word(std::istringstream& ss, const char* word, const std::string& line) {
  std::string got;
  if (!(ss >> got) || got != word) {
    throw FormatError(std::string("expected '") + word + "' in line: " + line);
  }
}

int read_int(std::istringstream& ss, const std::string& line) {
  long long v = 0;
  if (!(ss >> v) || v < -2147483647LL || v > 2147483647LL) {
    throw FormatError("expected an integer in line: " + line);
  }
  return static_cast<int>(v);
}

void expect_end(std::istringstream& ss, const std::string& line) {
  std::string extra;
  if (ss >> extra) throw FormatError("trailing text in line: " + line);
}

std::vector<int> read_sequence(std::istream& in, const char* tag) {
  const std::string line = next_line(in, tag);
  std::istringstream ss(line);
  expect_word(ss, tag, line);
  std::vector<int> out;
  long long v = 0;
  while (ss >> v) out.push_back(static_cast<int>(v));
  if (!ss.eof()) throw FormatError(std::string("bad integer in ") + tag + " line");
  return out;
}

void write_sequence(std::ostream& out, const char* tag, std::span<const int> values) {
  out << tag;
  for (int v : values) out << ' ' << v;
  out << '\n';
}

}  // namespace

void write_mobile(std::ostream& out, const Mobile& mobile) {
  const ContourPair c = contour(mobile);
  out << "PMOBILE 1\n";
  out << "p " << c.p << " n " << c.n << " variant " << to_string(mobile.variant()) << '\n';
  write_sequence(out, "H", c.heights);
  write_sequence(out, "V", c.labels);
}

Mobile read_mobile(std::istream& in) {
  const std::string header = next_line(in, "PMOBILE header");
  if (header != "PMOBILE 1") throw FormatError("not a PMOBILE 1 file: " + header);
  const std::string line = next_line(in, "size line");
  std::istringstream ss(line);
  ContourPair c;
  expect_word(ss, "p", line);
  c.p = read_int(ss, line);
  expect_word(ss, "n", line);
  c.n = read_int(ss, line);
  expect_word(ss, "variant", line);
  std::string variant;
  if (!(ss >> variant)) throw FormatError("missing variant in line: " + line);
  expect_end(ss, line);
  Variant v;
  try {
    v = parse_variant(variant);
  } catch (const ParameterError& e) {
    throw FormatError(e.what());
  }
  c.heights = read_sequence(in, "H");
  c.labels = read_sequence(in, "V");
  if (c.p < 2 || c.n < 1) throw FormatError("PMOBILE needs p >= 2 and n >= 1");
  const auto want = static_cast<std::size_t>(c.p) * static_cast<std::size_t>(c.n) + 1;
  if (c.heights.size() != want || c.labels.size() != want) {
    throw FormatError("PMOBILE sequences must have pn+1 = " + std::to_string(want) + " entries");
  }
  return mobile_from_contour(c, v);
}

void write_map(std::ostream& out, const PlanarMap& map) {
  out << "PMAP 1\n";
  out << "p " << map.p() << " n " << map.faces_expected() << " vertices " << map.vertex_count()
      << " edges " << map.edge_count() << '\n';
  out << "root " << map.root().tail << ' ' << map.root().head << '\n';
  for (const Edge& e : map.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

MapFile read_map(std::istream& in) {
  const std::string header = next_line(in, "PMAP header");
  if (header != "PMAP 1") throw FormatError("not a PMAP 1 file: " + header);
  MapFile f;
  int edges = 0;
  {
    const std::string line = next_line(in, "size line");
    std::istringstream ss(line);
    expect_word(ss, "p", line);
    f.p = read_int(ss, line);
    expect_word(ss, "n", line);
    f.n = read_int(ss, line);
    expect_word(ss, "vertices", line);
    f.vertices = read_int(ss, line);
    expect_word(ss, "edges", line);
    edges = read_int(ss, line);
    expect_end(ss, line);
    if (f.vertices < 1 || edges < 0) throw FormatError("PMAP counts must be positive");
  }
  {
    const std::string line = next_line(in, "root line");
    std::istringstream ss(line);
    expect_word(ss, "root", line);
    f.root.tail = read_int(ss, line);
    f.root.head = read_int(ss, line);
    expect_end(ss, line);
  }
  f.edges.reserve(static_cast<std::size_t>(edges));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    expect_word(ss, "e", line);
    Edge e;
    e.u = read_int(ss, line);
    e.v = read_int(ss, line);
    expect_end(ss, line);
    if (e.u < 0 || e.u >= f.vertices || e.v < 0 || e.v >= f.vertices) {
      throw FormatError("edge endpoint out of range in line: " + line);
    }
    f.edges.push_back(e);
  }
  if (static_cast<int>(f.edges.size()) != edges) {
    throw FormatError("PMAP declares " + std::to_string(edges) + " edges but lists " +
                      std::to_string(f.edges.size()));
  }
  return f;
}

PlanarMap rebuild_map(const MapFile& file) {
  if (file.p < 2 || file.n < 1) throw StructureError("map file needs p >= 2 and n >= 1");
  const int corners = file.p * file.n;
  if (static_cast<int>(file.edges.size()) != corners) {
    throw StructureError("map file has " + std::to_string(file.edges.size()) + " edges, expected pn = " +
                         std::to_string(corners));
  }
  if (file.vertices != (file.p - 1) * file.n + 2) {
    throw StructureError("map file has " + std::to_string(file.vertices) + " vertices, expected (p-1)n+2 = " +
                         std::to_string((file.p - 1) * file.n + 2));
  }
  // Plain adjacency for the distance labels.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(file.vertices));
  for (const Edge& e : file.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> dist(adj.size(), -1), queue{kRootVertex};
  dist[kRootVertex] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int w : adj[queue[head]]) {
      if (dist[w] < 0) {
        dist[w] = dist[queue[head]] + 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> vertices(static_cast<std::size_t>(corners)), labels(vertices.size());
  for (int i = 0; i < corners; ++i) {
    const int u = file.edges[i].u;
    if (u == kRootVertex || dist[u] < 0) {
      throw StructureError("edge " + std::to_string(i) + " does not start at a reachable corner vertex");
    }
    vertices[i] = u;
    labels[i] = dist[u];
  }
  PlanarMap map = build_from_corners(file.p, file.n, vertices, labels);
  for (int i = 0; i < corners; ++i) {
    const Edge a = map.edges()[i];
    const Edge b = file.edges[i];
    if (a.u != b.u || a.v != b.v) {
      throw StructureError("edge " + std::to_string(i) + " is (" + std::to_string(b.u) + "," +
                           std::to_string(b.v) + ") but its corner's successor gives (" +
                           std::to_string(a.u) + "," + std::to_string(a.v) + ")");
    }
  }
  if (file.root.tail != map.root().tail || file.root.head != map.root().head) {
    throw StructureError("root line does not match the first corner");
  }
  return map;
}

MapReport validate_map_file(const MapFile& file) {
  try {
    const PlanarMap map = rebuild_map(file);
    std::vector<int> labels(static_cast<std::size_t>(map.vertex_count() - 1));
    const DistanceField d = bfs(map, kRootVertex);
    for (int v = 1; v < map.vertex_count(); ++v) labels[v - 1] = d.dist[v];
    MapReport report = validate_map(map, labels);
    report.checks.insert(report.checks.begin(), MapCheck{"rebuild", true, ""});
    return report;
  } catch (const StructureError& e) {
    MapReport report;
    report.checks.push_back({"rebuild", false, e.what()});
    return report;
  }
}

std::string format_number(double value) {
  if (value == std::trunc(value) && std::abs(value) < 9.007199254740992e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

void write_excursion_csv(std::ostream& out, const LabeledExcursion& x) {
  out << "t,e,z\n";
  for (int k = 0; k <= x.m; ++k) {
    out << format_number(static_cast<double>(k) / x.m) << ',' << format_number(x.e_vals[k]) << ','
        << format_number(x.z_vals[k]) << '\n';
  }
}

void write_matrix_csv(std::ostream& out, const GridMetric& gm, GridDistance which) {
  const std::size_t size = gm.points();
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (b) out << ',';
      out << format_number(which == GridDistance::star ? gm.d_star(a, b) : gm.d_circ(a, b));
    }
    out << '\n';
  }
}

}  // namespace angulate
