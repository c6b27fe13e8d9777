#pragma once

#include "curvpool/analysis.hpp"
#include "curvpool/curvature.hpp"
#include "curvpool/graph.hpp"
#include "curvpool/pooling.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace curvpool::io {

// Edge list:
//   n <count>
//   u v
//   ...
// Blank lines and lines starting with '#' are ignored. Indices are zero-based.
// The canonical writer emits edges (u < v) in lexicographic order.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// Features: one node per line, comma-separated values.
FeatureMatrix read_features(std::istream& in);
FeatureMatrix read_features(std::string_view text);
std::string write_features(const FeatureMatrix& feats);

// {"pools": [[0,1,2],[3,4]]}
PoolAssignment read_pools(std::string_view text);
std::string write_pools(const PoolAssignment& pools);

// "u v value" per line, u < v, lexicographic; values carry 17 significant
// digits so doubles round-trip exactly.
EdgeCurvature read_curvature(std::istream& in);
EdgeCurvature read_curvature(std::string_view text);
std::string write_curvature(const EdgeCurvature& curv);

PoolingReport read_report(std::string_view text);
std::string write_report(const PoolingReport& report);

// Two columns "bin_center count" after a '#' header line.
std::string write_histogram_text(const CurvatureHistogram& h);

// Token standing in for a feature file: use node degrees.
inline constexpr std::string_view kDegreeFeatures = "degrees";

struct DatasetEntry {
  std::string graph;    // path, relative to the manifest directory
  std::string features; // path or kDegreeFeatures
  std::int64_t label = 0;

  friend bool operator==(const DatasetEntry&, const DatasetEntry&) = default;
};

struct DatasetManifest {
  std::string name;
  std::vector<DatasetEntry> graphs;

  friend bool operator==(const DatasetManifest&, const DatasetManifest&) = default;
};

// {"name": "...", "graphs": [{"graph": "...", "features": "degrees", "label": 0}]}
DatasetManifest parse_manifest(std::string_view text);
std::string write_manifest(const DatasetManifest& manifest);
// Parses and checks that every referenced file exists relative to the
// manifest's directory.
DatasetManifest read_manifest(const std::filesystem::path& path);

// Loads an entry's features: degree features for kDegreeFeatures, otherwise
// the referenced file. Rows must match the graph (ShapeMismatch).
FeatureMatrix load_features(const std::filesystem::path& base_dir, std::string_view spec,
                            const Graph& g);

// "%.17g": enough digits for any double to parse back bit-identically.
std::string format_double(double v);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

} // namespace curvpool::io
