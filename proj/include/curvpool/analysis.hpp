#pragma once

#include "curvpool/curvature.hpp"
#include "curvpool/graph.hpp"
#include "curvpool/pooling.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace curvpool {

// Uniform histogram over [min, max]. Bins are right-open except the last,
// which is right-closed. When every value is equal the range is widened to
// [v - 0.5, v + 0.5] so bin edges stay strictly increasing.
struct CurvatureHistogram {
  std::vector<double> bin_edges; // counts.size() + 1 entries
  std::vector<std::size_t> counts;
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double median = 0.0;

  std::size_t total() const noexcept;
};

// Throws EmptyInput when values is empty or num_bins is 0.
CurvatureHistogram histogram(std::span<const double> values, std::size_t num_bins);
inline CurvatureHistogram histogram(const EdgeCurvature& curv, std::size_t num_bins) {
  return histogram(curv.values(), num_bins);
}

// Median of the values, the threshold splitting them into two halves. Even
// counts average the two central values. Throws EmptyInput.
double recommend_threshold(std::span<const double> values);

// True when all values coincide; a strict threshold at the median then selects
// no edge at all.
bool threshold_is_degenerate(std::span<const double> values);

struct PoolingReport {
  std::size_t nodes_before = 0;
  std::size_t nodes_after = 0;
  std::size_t edges_before = 0;
  std::size_t edges_after = 0;
  std::optional<double> mean_curv_before; // absent for an edgeless graph
  std::optional<double> mean_curv_after;
  std::map<std::size_t, std::size_t> pool_size_histogram; // pool size -> count

  friend bool operator==(const PoolingReport&, const PoolingReport&) = default;
};

// curv_after must be computed on g_after. Throws ShapeMismatch when curvature
// maps or pools do not line up with the graphs.
PoolingReport pooling_report(const Graph& g_before, const EdgeCurvature& curv_before,
                             const Graph& g_after, const EdgeCurvature& curv_after,
                             const PoolAssignment& pools);

} // namespace curvpool
