#include "curvpool/io.hpp"

#include "curvpool/errors.hpp"
#include "curvpool/generators.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>

namespace curvpool::io {

namespace {

using nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool skippable(std::string_view line) { return line.empty() || line.front() == '#'; }

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    pos = end;
  }
  return out;
}

std::uint64_t parse_index(std::string_view token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, std::string("expected non-negative integer ") + what + ", got '" +
                               std::string(token) + "'");
  return value;
}

double parse_real(std::string_view token, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "expected a real number, got '" + std::string(token) + "'");
  if (!std::isfinite(value)) throw ParseError(line, "non-finite value '" + std::string(token) + "'");
  return value;
}

} // namespace

std::string format_double(double v) {
  char buf[40];
  const int len = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

Graph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (skippable(line)) continue;
    const auto tokens = split_ws(line);
    if (!n) {
      if (tokens.size() != 2 || tokens[0] != "n")
        throw ParseError(line_no, "expected header 'n <count>'");
      n = parse_index(tokens[1], line_no, "node count");
      if (*n > UINT32_MAX) throw ParseError(line_no, "node count exceeds 32-bit index range");
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected an edge 'u v'");
    const auto u = parse_index(tokens[0], line_no, "node index");
    const auto v = parse_index(tokens[1], line_no, "node index");
    if (u >= *n || v >= *n)
      throw IndexOutOfRange("line " + std::to_string(line_no) + ": edge (" + std::to_string(u) +
                            "," + std::to_string(v) + ") out of range for " + std::to_string(*n) +
                            " nodes");
    if (u == v)
      throw SelfLoopRejected("line " + std::to_string(line_no) + ": self-loop on node " +
                             std::to_string(u));
    edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v)});
  }
  if (!n) throw ParseError(line_no, "missing header 'n <count>'");
  return build_graph(*n, std::span<const Edge>(edges));
}

Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.num_nodes()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

FeatureMatrix read_features(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t rows = 0;
  std::optional<std::size_t> cols;
  std::vector<double> values;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (skippable(line)) continue;
    std::size_t count = 0;
    std::size_t pos = 0;
    while (true) {
      const auto comma = line.find(',', pos);
      const auto cell = trim(line.substr(pos, comma == std::string_view::npos ? line.npos : comma - pos));
      values.push_back(parse_real(cell, line_no));
      ++count;
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (cols && *cols != count)
      throw ParseError(line_no, "row has " + std::to_string(count) + " values, expected " +
                                    std::to_string(*cols));
    cols = count;
    ++rows;
  }
  return FeatureMatrix(rows, cols.value_or(0), std::move(values));
}

FeatureMatrix read_features(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_features(in);
}

std::string write_features(const FeatureMatrix& feats) {
  std::string out;
  for (std::size_t r = 0; r < feats.rows(); ++r) {
    const auto row = feats.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += format_double(row[c]);
    }
    out += '\n';
  }
  return out;
}

PoolAssignment read_pools(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(0, std::string("pools: malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("pools") || !doc["pools"].is_array())
    throw ParseError(0, "pools: expected an object with a \"pools\" array");

  std::vector<std::vector<NodeId>> pools;
  std::size_t n = 0;
  for (std::size_t p = 0; p < doc["pools"].size(); ++p) {
    const auto& arr = doc["pools"][p];
    if (!arr.is_array()) throw ParseError(0, "pools[" + std::to_string(p) + "] is not an array");
    if (arr.empty()) throw InvariantViolation("pools[" + std::to_string(p) + "] is empty");
    std::vector<NodeId> members;
    for (const auto& x : arr) {
      if (!x.is_number_unsigned() || x.get<std::uint64_t>() > UINT32_MAX)
        throw ParseError(0, "pools[" + std::to_string(p) + "] holds a non-index value");
      members.push_back(x.get<NodeId>());
    }
    for (std::size_t k = 1; k < members.size(); ++k) {
      if (members[k - 1] == members[k])
        throw InvariantViolation("overlap: node " + std::to_string(members[k]) +
                                 " repeated in pools[" + std::to_string(p) + "]");
      if (members[k - 1] > members[k])
        throw InvariantViolation("pools[" + std::to_string(p) + "] is not sorted ascending");
    }
    if (!pools.empty() && pools.back().front() > members.front())
      throw InvariantViolation("pools[" + std::to_string(p) +
                               "] breaks ordering by minimum member");
    n += members.size();
    pools.push_back(std::move(members));
  }

  std::vector<char> seen(n, 0);
  for (std::size_t p = 0; p < pools.size(); ++p)
    for (NodeId x : pools[p]) {
      if (x >= n)
        throw InvariantViolation("gap: pools cover " + std::to_string(n) +
                                 " slots but pools[" + std::to_string(p) + "] names node " +
                                 std::to_string(x));
      if (seen[x])
        throw InvariantViolation("overlap: node " + std::to_string(x) + " appears again in pools[" +
                                 std::to_string(p) + "]");
      seen[x] = 1;
    }
  return PoolAssignment::from_pools(n, std::move(pools));
}

std::string write_pools(const PoolAssignment& pools) {
  std::string out = "{\"pools\": [";
  for (std::size_t p = 0; p < pools.num_pools(); ++p) {
    if (p > 0) out += ',';
    out += '[';
    const auto members = pools.pool(p);
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k > 0) out += ',';
      out += std::to_string(members[k]);
    }
    out += ']';
  }
  out += "]}\n";
  return out;
}

EdgeCurvature read_curvature(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::vector<Edge> edges;
  std::vector<double> values;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (skippable(line)) continue;
    const auto tokens = split_ws(line);
    if (tokens.size() != 3) throw ParseError(line_no, "expected 'u v value'");
    const auto u = parse_index(tokens[0], line_no, "node index");
    const auto v = parse_index(tokens[1], line_no, "node index");
    if (u >= v) throw ParseError(line_no, "edge must be canonical (u < v)");
    if (v > UINT32_MAX) throw ParseError(line_no, "node index exceeds 32-bit range");
    const Edge e{static_cast<NodeId>(u), static_cast<NodeId>(v)};
    if (!edges.empty() && !(edges.back() < e))
      throw ParseError(line_no, "edges must be strictly ascending in lexicographic order");
    edges.push_back(e);
    values.push_back(parse_real(tokens[2], line_no));
  }
  return EdgeCurvature(std::move(edges), std::move(values));
}

EdgeCurvature read_curvature(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_curvature(in);
}

std::string write_curvature(const EdgeCurvature& curv) {
  std::string out;
  const auto edges = curv.edges();
  const auto values = curv.values();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    out += std::to_string(edges[k].u);
    out += ' ';
    out += std::to_string(edges[k].v);
    out += ' ';
    out += format_double(values[k]);
    out += '\n';
  }
  return out;
}

PoolingReport read_report(std::string_view text) {
  try {
    const auto doc = ordered_json::parse(text);
    PoolingReport r;
    r.nodes_before = doc.at("nodes_before").get<std::size_t>();
    r.nodes_after = doc.at("nodes_after").get<std::size_t>();
    r.edges_before = doc.at("edges_before").get<std::size_t>();
    r.edges_after = doc.at("edges_after").get<std::size_t>();
    if (!doc.at("mean_curv_before").is_null()) r.mean_curv_before = doc["mean_curv_before"].get<double>();
    if (!doc.at("mean_curv_after").is_null()) r.mean_curv_after = doc["mean_curv_after"].get<double>();
    for (const auto& [size, count] : doc.at("pool_size_histogram").items())
      r.pool_size_histogram[std::stoull(size)] = count.get<std::size_t>();
    if (r.nodes_after > r.nodes_before || r.edges_after > r.edges_before)
      throw InvariantViolation("report: after-counts exceed before-counts");
    std::size_t covered = 0;
    for (const auto& [size, count] : r.pool_size_histogram) covered += size * count;
    if (covered != r.nodes_before)
      throw InvariantViolation("report: pool sizes sum to " + std::to_string(covered) +
                               ", expected nodes_before=" + std::to_string(r.nodes_before));
    return r;
  } catch (const ordered_json::exception& e) {
    throw ParseError(0, std::string("report: ") + e.what());
  }
}

std::string write_report(const PoolingReport& report) {
  ordered_json doc;
  doc["nodes_before"] = report.nodes_before;
  doc["nodes_after"] = report.nodes_after;
  doc["edges_before"] = report.edges_before;
  doc["edges_after"] = report.edges_after;
  doc["mean_curv_before"] = report.mean_curv_before ? ordered_json(*report.mean_curv_before) : ordered_json();
  doc["mean_curv_after"] = report.mean_curv_after ? ordered_json(*report.mean_curv_after) : ordered_json();
  ordered_json sizes = ordered_json::object();
  for (const auto& [size, count] : report.pool_size_histogram) sizes[std::to_string(size)] = count;
  doc["pool_size_histogram"] = std::move(sizes);
  return doc.dump(2) + "\n";
}

std::string write_histogram_text(const CurvatureHistogram& h) {
  std::string out = "# bin_center count\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    out += format_double((h.bin_edges[b] + h.bin_edges[b + 1]) / 2.0);
    out += ' ';
    out += std::to_string(h.counts[b]);
    out += '\n';
  }
  return out;
}

DatasetManifest parse_manifest(std::string_view text) {
  try {
    const auto doc = ordered_json::parse(text);
    DatasetManifest m;
    m.name = doc.at("name").get<std::string>();
    const auto& graphs = doc.at("graphs");
    if (!graphs.is_array()) throw ParseError(0, "manifest: \"graphs\" must be an array");
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      const auto& g = graphs[k];
      DatasetEntry e;
      e.graph = g.at("graph").get<std::string>();
      e.features = g.contains("features") ? g["features"].get<std::string>()
                                          : std::string(kDegreeFeatures);
      e.label = g.at("label").get<std::int64_t>();
      if (e.label < 0)
        throw InvariantViolation("manifest: graphs[" + std::to_string(k) + "] has negative label");
      m.graphs.push_back(std::move(e));
    }
    return m;
  } catch (const ordered_json::exception& e) {
    throw ParseError(0, std::string("manifest: ") + e.what());
  }
}

std::string write_manifest(const DatasetManifest& manifest) {
  ordered_json doc;
  doc["name"] = manifest.name;
  doc["graphs"] = ordered_json::array();
  for (const auto& e : manifest.graphs)
    doc["graphs"].push_back({{"graph", e.graph}, {"features", e.features}, {"label", e.label}});
  return doc.dump(2) + "\n";
}

DatasetManifest read_manifest(const std::filesystem::path& path) {
  DatasetManifest m = parse_manifest(read_file(path));
  const auto base = path.parent_path();
  for (std::size_t k = 0; k < m.graphs.size(); ++k) {
    const auto& e = m.graphs[k];
    if (!std::filesystem::exists(base / e.graph))
      throw IoError("manifest graphs[" + std::to_string(k) + "]: missing graph file " +
                    (base / e.graph).string());
    if (e.features != kDegreeFeatures && !std::filesystem::exists(base / e.features))
      throw IoError("manifest graphs[" + std::to_string(k) + "]: missing feature file " +
                    (base / e.features).string());
  }
  return m;
}

FeatureMatrix load_features(const std::filesystem::path& base_dir, std::string_view spec,
                            const Graph& g) {
  if (spec == kDegreeFeatures) return degree_features(g);
  FeatureMatrix feats = read_features(read_file(base_dir / spec));
  if (feats.rows() != g.num_nodes())
    throw ShapeMismatch("feature file " + std::string(spec) + " has " +
                        std::to_string(feats.rows()) + " rows for a graph of " +
                        std::to_string(g.num_nodes()) + " nodes");
  return feats;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

} // namespace curvpool::io
