#include "curvpool/analysis.hpp"

#include "curvpool/errors.hpp"

#include <algorithm>
#include <numeric>

namespace curvpool {

std::size_t CurvatureHistogram::total() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

CurvatureHistogram histogram(std::span<const double> values, std::size_t num_bins) {
  if (values.empty()) throw EmptyInput("histogram of zero curvature values");
  if (num_bins == 0) throw EmptyInput("histogram needs at least one bin");

  CurvatureHistogram h;
  const auto [lo, hi] = std::ranges::minmax(values);
  h.min = lo;
  h.max = hi;
  h.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  h.median = recommend_threshold(values);

  const double left = lo < hi ? lo : lo - 0.5;
  const double right = lo < hi ? hi : hi + 0.5;
  const double width = (right - left) / static_cast<double>(num_bins);
  h.bin_edges.resize(num_bins + 1);
  for (std::size_t b = 0; b <= num_bins; ++b) h.bin_edges[b] = left + width * static_cast<double>(b);
  h.bin_edges.back() = right;

  h.counts.assign(num_bins, 0);
  for (double v : values) {
    auto bin = static_cast<std::size_t>(std::clamp((v - left) / width, 0.0,
                                                   static_cast<double>(num_bins - 1)));
    // Settle rounding against the stored edges.
    while (bin > 0 && v < h.bin_edges[bin]) --bin;
    while (bin + 1 < num_bins && v >= h.bin_edges[bin + 1]) ++bin;
    ++h.counts[bin];
  }
  return h;
}

double recommend_threshold(std::span<const double> values) {
  if (values.empty()) throw EmptyInput("threshold recommendation needs at least one value");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  if (sorted.size() % 2 == 1) return sorted[mid];
  return (sorted[mid - 1] + sorted[mid]) / 2.0;
}

bool threshold_is_degenerate(std::span<const double> values) {
  if (values.empty()) return true;
  return std::ranges::all_of(values, [&](double v) { return v == values.front(); });
}

PoolingReport pooling_report(const Graph& g_before, const EdgeCurvature& curv_before,
                             const Graph& g_after, const EdgeCurvature& curv_after,
                             const PoolAssignment& pools) {
  if (!curv_before.covers(g_before))
    throw ShapeMismatch("curvature before pooling does not match the original graph");
  if (!curv_after.covers(g_after))
    throw ShapeMismatch("curvature after pooling does not match the pooled graph");
  if (pools.num_nodes() != g_before.num_nodes() || pools.num_pools() != g_after.num_nodes())
    throw ShapeMismatch("pool assignment does not map the original graph onto the pooled graph");

  PoolingReport r;
  r.nodes_before = g_before.num_nodes();
  r.nodes_after = g_after.num_nodes();
  r.edges_before = g_before.num_edges();
  r.edges_after = g_after.num_edges();
  r.mean_curv_before = mean_curvature(curv_before);
  r.mean_curv_after = mean_curvature(curv_after);
  for (const auto& p : pools.pools()) ++r.pool_size_histogram[p.size()];
  return r;
}

} // namespace curvpool
