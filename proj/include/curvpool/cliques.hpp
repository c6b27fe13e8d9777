#pragma once

#include "curvpool/graph.hpp"
#include "curvpool/pooling.hpp"

#include <vector>

namespace curvpool {

// Every maximal clique of g (isolated nodes yield singleton cliques). Each
// clique is sorted; the list is in ascending lexicographic order.
using CliqueSet = std::vector<std::vector<NodeId>>;

// Bron-Kerbosch with Tomita pivoting.
CliqueSet maximal_cliques(const Graph& g);

// CliquePool dedup: cliques ordered by size descending, then lexicographically;
// each node stays only in the first clique holding it; emptied cliques drop.
PoolAssignment clique_pools(const Graph& g);

PoolingResult clique_pool(const Graph& g, const FeatureMatrix& feats, Aggregator agg);

} // namespace curvpool
