#include "curvpool/cliques.hpp"

#include "curvpool/errors.hpp"

#include <algorithm>
#include <iterator>

namespace curvpool {

namespace {

using NodeList = std::vector<NodeId>;

NodeList intersect(const NodeList& a, std::span<const NodeId> b) {
  NodeList out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class BronKerbosch {
public:
  explicit BronKerbosch(const Graph& g) : g_(g) {}

  CliqueSet run() {
    NodeList all(g_.num_nodes());
    for (NodeId v = 0; v < g_.num_nodes(); ++v) all[v] = v;
    NodeList r;
    expand(r, std::move(all), {});
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

private:
  void expand(NodeList& r, NodeList p, NodeList x) {
    if (p.empty()) {
      if (x.empty()) {
        NodeList clique = r;
        std::sort(clique.begin(), clique.end());
        out_.push_back(std::move(clique));
      }
      return;
    }
    // Pivot on the node of P u X covering most of P.
    NodeId pivot = p.front();
    std::size_t best = intersect(p, g_.neighbors(pivot)).size();
    auto consider = [&](NodeId u) {
      const std::size_t hits = intersect(p, g_.neighbors(u)).size();
      if (hits > best) {
        best = hits;
        pivot = u;
      }
    };
    for (NodeId u : p) consider(u);
    for (NodeId u : x) consider(u);

    NodeList branch;
    const auto np = g_.neighbors(pivot);
    std::set_difference(p.begin(), p.end(), np.begin(), np.end(), std::back_inserter(branch));
    for (NodeId v : branch) {
      const auto nv = g_.neighbors(v);
      r.push_back(v);
      expand(r, intersect(p, nv), intersect(x, nv));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  const Graph& g_;
  CliqueSet out_;
};

} // namespace

CliqueSet maximal_cliques(const Graph& g) { return BronKerbosch(g).run(); }

PoolAssignment clique_pools(const Graph& g) {
  CliqueSet cliques = maximal_cliques(g);
  std::stable_sort(cliques.begin(), cliques.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<char> taken(g.num_nodes(), 0);
  std::vector<std::vector<NodeId>> pools;
  for (const auto& clique : cliques) {
    std::vector<NodeId> kept;
    for (NodeId v : clique)
      if (!taken[v]) {
        taken[v] = 1;
        kept.push_back(v);
      }
    if (!kept.empty()) pools.push_back(std::move(kept));
  }
  return PoolAssignment::from_pools(g.num_nodes(), std::move(pools));
}

PoolingResult clique_pool(const Graph& g, const FeatureMatrix& feats, Aggregator agg) {
  if (feats.rows() != g.num_nodes())
    throw ShapeMismatch("feature matrix has " + std::to_string(feats.rows()) + " rows, graph has " +
                        std::to_string(g.num_nodes()) + " nodes");
  PoolAssignment pools = clique_pools(g);
  FeatureMatrix pooled_feats = aggregate_features(feats, pools, agg);
  return {remap_edges(g, pools), std::move(pooled_feats)};
}

} // namespace curvpool
