#pragma once

#include "curvpool/curvature.hpp"
#include "curvpool/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace curvpool {

enum class StrategyKind { High, Low, Mixed };

// Which edges seed a pool:
//   High   BFC > t_high
//   Low    BFC < t_low
//   Mixed  BFC < t_low or BFC > t_high, with t_low <= t_high
// Comparisons are strict, so an edge sitting exactly on a threshold never
// pools.
struct Strategy {
  StrategyKind kind = StrategyKind::High;
  double t_low = 0.0;
  double t_high = 0.0;

  static Strategy high(double t_high) { return {StrategyKind::High, 0.0, t_high}; }
  static Strategy low(double t_low) { return {StrategyKind::Low, t_low, 0.0}; }
  static Strategy mixed(double t_low, double t_high) { return {StrategyKind::Mixed, t_low, t_high}; }

  // Throws InvalidThresholds for NaN thresholds or Mixed with t_low > t_high.
  void validate() const;
};

enum class Aggregator { Sum, Avg, Max };

StrategyKind parse_strategy_kind(std::string_view name);
Aggregator parse_aggregator(std::string_view name);
std::string_view to_string(StrategyKind kind);
std::string_view to_string(Aggregator agg);

// Disjoint, covering partition of nodes 0..n-1. Each pool is sorted
// ascending and pools are ordered by their smallest member.
class PoolAssignment {
public:
  PoolAssignment() = default;

  // Normalizes member and pool order, then validates. Throws
  // InvariantViolation on an empty pool, an out-of-range node, an overlap or
  // a node left uncovered.
  static PoolAssignment from_pools(std::size_t num_nodes, std::vector<std::vector<NodeId>> pools);
  static PoolAssignment singletons(std::size_t num_nodes);

  std::size_t num_nodes() const noexcept { return pool_of_.size(); }
  std::size_t num_pools() const noexcept { return pools_.size(); }
  const std::vector<std::vector<NodeId>>& pools() const noexcept { return pools_; }
  std::span<const NodeId> pool(std::size_t p) const { return pools_.at(p); }
  std::uint32_t pool_of(NodeId i) const { return pool_of_.at(i); }

  friend bool operator==(const PoolAssignment&, const PoolAssignment&) = default;

private:
  std::vector<std::vector<NodeId>> pools_;
  std::vector<std::uint32_t> pool_of_;
};

// True when every pool induces a connected subgraph of g.
bool pools_induce_connected(const Graph& g, const PoolAssignment& pools);

struct PooledGraph {
  Graph graph;
  PoolAssignment origin;
};

struct PoolingResult {
  PooledGraph pooled;
  FeatureMatrix features;
};

// Edges whose curvature satisfies the strategy, in ascending edge order.
std::vector<Edge> candidate_pairs(const EdgeCurvature& curv, const Strategy& strategy);

// Connected components of (V, pairs); nodes outside every pair stay
// singletons.
PoolAssignment merge_pools(std::size_t n, std::span<const Edge> pairs);

FeatureMatrix aggregate_features(const FeatureMatrix& feats, const PoolAssignment& pools,
                                 Aggregator agg);

// One pooled edge between distinct pools a and b iff some original edge
// crosses them; intra-pool edges vanish.
PooledGraph remap_edges(const Graph& g, const PoolAssignment& pools);

// Full pipeline. When precomputed is non-null it must cover exactly the edges
// of g (ShapeMismatch otherwise) and curvature is not recomputed.
PoolingResult curvpool(const Graph& g, const FeatureMatrix& feats, const Strategy& strategy,
                       Aggregator agg, const EdgeCurvature* precomputed = nullptr,
                       unsigned threads = 1);

} // namespace curvpool
