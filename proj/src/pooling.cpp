#include "curvpool/pooling.hpp"

#include "curvpool/errors.hpp"
#include "curvpool/union_find.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace curvpool {

void Strategy::validate() const {
  const bool uses_low = kind != StrategyKind::High;
  const bool uses_high = kind != StrategyKind::Low;
  if ((uses_low && std::isnan(t_low)) || (uses_high && std::isnan(t_high)))
    throw InvalidThresholds("threshold is NaN");
  if (kind == StrategyKind::Mixed && t_low > t_high)
    throw InvalidThresholds("mixed strategy needs t_low <= t_high (got t_low=" +
                            std::to_string(t_low) + ", t_high=" + std::to_string(t_high) + ")");
}

StrategyKind parse_strategy_kind(std::string_view name) {
  if (name == "high") return StrategyKind::High;
  if (name == "low") return StrategyKind::Low;
  if (name == "mixed") return StrategyKind::Mixed;
  throw InvalidThresholds("unknown strategy '" + std::string(name) + "'");
}

Aggregator parse_aggregator(std::string_view name) {
  if (name == "sum") return Aggregator::Sum;
  if (name == "avg") return Aggregator::Avg;
  if (name == "max") return Aggregator::Max;
  throw InvalidSpec("unknown aggregator '" + std::string(name) + "'");
}

std::string_view to_string(StrategyKind kind) {
  switch (kind) {
  case StrategyKind::High: return "high";
  case StrategyKind::Low: return "low";
  case StrategyKind::Mixed: return "mixed";
  }
  return "?";
}

std::string_view to_string(Aggregator agg) {
  switch (agg) {
  case Aggregator::Sum: return "sum";
  case Aggregator::Avg: return "avg";
  case Aggregator::Max: return "max";
  }
  return "?";
}

PoolAssignment PoolAssignment::from_pools(std::size_t num_nodes,
                                          std::vector<std::vector<NodeId>> pools) {
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  for (auto& p : pools) {
    if (p.empty()) throw InvariantViolation("empty pool");
    std::sort(p.begin(), p.end());
  }
  std::sort(pools.begin(), pools.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  PoolAssignment out;
  out.pool_of_.assign(num_nodes, unset);
  for (std::size_t p = 0; p < pools.size(); ++p) {
    for (std::size_t k = 0; k < pools[p].size(); ++k) {
      const NodeId x = pools[p][k];
      if (x >= num_nodes)
        throw InvariantViolation("pool " + std::to_string(p) + " holds node " + std::to_string(x) +
                                 " outside 0.." + std::to_string(num_nodes));
      if (out.pool_of_[x] != unset)
        throw InvariantViolation("pools overlap: node " + std::to_string(x) + " appears twice");
      out.pool_of_[x] = static_cast<std::uint32_t>(p);
    }
  }
  for (std::size_t x = 0; x < num_nodes; ++x)
    if (out.pool_of_[x] == unset)
      throw InvariantViolation("pools leave node " + std::to_string(x) + " uncovered");
  out.pools_ = std::move(pools);
  return out;
}

PoolAssignment PoolAssignment::singletons(std::size_t num_nodes) {
  PoolAssignment out;
  out.pools_.resize(num_nodes);
  out.pool_of_.resize(num_nodes);
  for (std::size_t x = 0; x < num_nodes; ++x) {
    out.pools_[x] = {static_cast<NodeId>(x)};
    out.pool_of_[x] = static_cast<std::uint32_t>(x);
  }
  return out;
}

bool pools_induce_connected(const Graph& g, const PoolAssignment& pools) {
  if (pools.num_nodes() != g.num_nodes()) return false;
  std::vector<char> seen(g.num_nodes(), 0);
  std::queue<NodeId> frontier;
  for (std::size_t p = 0; p < pools.num_pools(); ++p) {
    const auto members = pools.pool(p);
    std::size_t reached = 1;
    seen[members.front()] = 1;
    frontier.push(members.front());
    while (!frontier.empty()) {
      const NodeId x = frontier.front();
      frontier.pop();
      for (NodeId y : g.neighbors(x))
        if (!seen[y] && pools.pool_of(y) == p) {
          seen[y] = 1;
          ++reached;
          frontier.push(y);
        }
    }
    if (reached != members.size()) return false;
  }
  return true;
}

std::vector<Edge> candidate_pairs(const EdgeCurvature& curv, const Strategy& strategy) {
  strategy.validate();
  std::vector<Edge> out;
  const auto edges = curv.edges();
  const auto values = curv.values();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const double c = values[k];
    bool take = false;
    switch (strategy.kind) {
    case StrategyKind::High: take = c > strategy.t_high; break;
    case StrategyKind::Low: take = c < strategy.t_low; break;
    case StrategyKind::Mixed: take = c < strategy.t_low || c > strategy.t_high; break;
    }
    if (take) out.push_back(edges[k]);
  }
  return out;
}

PoolAssignment merge_pools(std::size_t n, std::span<const Edge> pairs) {
  UnionFind uf(n);
  for (const Edge& e : pairs) {
    if (e.u >= n || e.v >= n)
      throw IndexOutOfRange("pair (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") out of range for " + std::to_string(n) + " nodes");
    uf.unite(e.u, e.v);
  }
  // Scanning nodes in ascending order opens pools in order of their minimum
  // member and appends members already sorted.
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> pool_of_root(n, unset);
  std::vector<std::vector<NodeId>> pools;
  for (NodeId x = 0; x < n; ++x) {
    const std::uint32_t root = uf.find(x);
    if (pool_of_root[root] == unset) {
      pool_of_root[root] = static_cast<std::uint32_t>(pools.size());
      pools.emplace_back();
    }
    pools[pool_of_root[root]].push_back(x);
  }
  return PoolAssignment::from_pools(n, std::move(pools));
}

FeatureMatrix aggregate_features(const FeatureMatrix& feats, const PoolAssignment& pools,
                                 Aggregator agg) {
  if (feats.rows() != pools.num_nodes())
    throw ShapeMismatch("feature matrix has " + std::to_string(feats.rows()) +
                        " rows, pooling covers " + std::to_string(pools.num_nodes()) + " nodes");
  const std::size_t cols = feats.cols();
  FeatureMatrix out(pools.num_pools(), cols);
  for (std::size_t p = 0; p < pools.num_pools(); ++p) {
    const auto members = pools.pool(p);
    auto dst = out.row(p);
    std::ranges::copy(feats.row(members.front()), dst.begin());
    for (std::size_t m = 1; m < members.size(); ++m) {
      const auto src = feats.row(members[m]);
      for (std::size_t c = 0; c < cols; ++c)
        dst[c] = agg == Aggregator::Max ? std::max(dst[c], src[c]) : dst[c] + src[c];
    }
    if (agg == Aggregator::Avg)
      for (double& v : dst) v /= static_cast<double>(members.size());
  }
  return out;
}

PooledGraph remap_edges(const Graph& g, const PoolAssignment& pools) {
  if (pools.num_nodes() != g.num_nodes())
    throw ShapeMismatch("pooling covers " + std::to_string(pools.num_nodes()) +
                        " nodes, graph has " + std::to_string(g.num_nodes()));
  std::vector<Edge> crossing;
  for (const Edge& e : g.edges()) {
    const NodeId a = pools.pool_of(e.u);
    const NodeId b = pools.pool_of(e.v);
    if (a != b) crossing.push_back(canonical_edge(a, b));
  }
  return {build_graph(pools.num_pools(), std::span<const Edge>(crossing)), pools};
}

PoolingResult curvpool(const Graph& g, const FeatureMatrix& feats, const Strategy& strategy,
                       Aggregator agg, const EdgeCurvature* precomputed, unsigned threads) {
  strategy.validate();
  if (feats.rows() != g.num_nodes())
    throw ShapeMismatch("feature matrix has " + std::to_string(feats.rows()) + " rows, graph has " +
                        std::to_string(g.num_nodes()) + " nodes");
  EdgeCurvature computed;
  if (precomputed == nullptr) {
    computed = bfc_all(g, threads);
    precomputed = &computed;
  } else if (!precomputed->covers(g)) {
    throw ShapeMismatch("precomputed curvature does not match the graph's edge set");
  }
  const auto pairs = candidate_pairs(*precomputed, strategy);
  PoolAssignment pools = merge_pools(g.num_nodes(), pairs);
  FeatureMatrix pooled_feats = aggregate_features(feats, pools, agg);
  return {remap_edges(g, pools), std::move(pooled_feats)};
}

} // namespace curvpool
