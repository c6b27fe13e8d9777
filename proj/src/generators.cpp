#include "curvpool/generators.hpp"

#include "curvpool/errors.hpp"
#include "curvpool/random.hpp"

#include <set>
#include <string>
#include <vector>

namespace curvpool {

void CavemanSpec::validate() const {
  if (num_cliques < 2)
    throw InvalidSpec("caveman needs at least 2 cliques, got " + std::to_string(num_cliques));
  if (clique_size < 3)
    throw InvalidSpec("caveman needs clique size >= 3, got " + std::to_string(clique_size));
}

Graph caveman(const CavemanSpec& spec) {
  spec.validate();
  const std::size_t l = spec.num_cliques;
  const std::size_t k = spec.clique_size;
  Rng rng(spec.seed);

  std::set<Edge> edges;
  for (std::size_t c = 0; c < l; ++c) {
    const auto base = static_cast<NodeId>(c * k);
    for (NodeId a = 0; a < k; ++a)
      for (NodeId b = a + 1; b < k; ++b) edges.insert({base + a, base + b});
  }

  for (std::size_t c = 0; c < l; ++c) {
    const auto base = static_cast<NodeId>(c * k);
    const auto next = static_cast<NodeId>(((c + 1) % l) * k);

    // Pick the internal edge by rank among the k(k-1)/2 pairs.
    std::uint64_t rank = rng.below(k * (k - 1) / 2);
    NodeId a = 0;
    while (rank >= k - 1 - a) {
      rank -= k - 1 - a;
      ++a;
    }
    const NodeId b = a + 1 + static_cast<NodeId>(rank);
    edges.erase({base + a, base + b});
    const NodeId from = base + (rng.below(2) == 0 ? a : b);

    // Only a two-clique ring can collide with the opposite bridge; redraw.
    Edge bridge;
    do {
      bridge = canonical_edge(from, next + static_cast<NodeId>(rng.below(k)));
    } while (edges.contains(bridge));
    edges.insert(bridge);
  }

  const std::vector<Edge> list(edges.begin(), edges.end());
  return build_graph(l * k, std::span<const Edge>(list));
}

Graph complete(std::size_t n) {
  if (n < 1) throw InvalidSpec("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) edges.push_back({a, b});
  return build_graph(n, std::span<const Edge>(edges));
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidSpec("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (NodeId a = 0; a < n; ++a) edges.push_back(canonical_edge(a, static_cast<NodeId>((a + 1) % n)));
  return build_graph(n, std::span<const Edge>(edges));
}

Graph path(std::size_t n) {
  if (n < 1) throw InvalidSpec("path needs n >= 1");
  std::vector<Edge> edges;
  for (NodeId a = 0; a + 1 < n; ++a) edges.push_back({a, a + 1});
  return build_graph(n, std::span<const Edge>(edges));
}

Graph star(std::size_t n) {
  if (n < 1) throw InvalidSpec("star needs n >= 1");
  std::vector<Edge> edges;
  for (NodeId leaf = 1; leaf < n; ++leaf) edges.push_back({0, leaf});
  return build_graph(n, std::span<const Edge>(edges));
}

Graph barbell(std::size_t k) {
  if (k < 3) throw InvalidSpec("barbell needs clique size >= 3");
  std::vector<Edge> edges;
  for (NodeId side = 0; side < 2; ++side) {
    const auto base = static_cast<NodeId>(side * k);
    for (NodeId a = 0; a < k; ++a)
      for (NodeId b = a + 1; b < k; ++b) edges.push_back({base + a, base + b});
  }
  edges.push_back({static_cast<NodeId>(k - 1), static_cast<NodeId>(k)});
  return build_graph(2 * k, std::span<const Edge>(edges));
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidSpec("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      if (rng.unit() < p) edges.push_back({a, b});
  return build_graph(n, std::span<const Edge>(edges));
}

FeatureMatrix degree_features(const Graph& g) {
  FeatureMatrix out(g.num_nodes(), 1);
  for (NodeId i = 0; i < g.num_nodes(); ++i) out(i, 0) = static_cast<double>(g.degree(i));
  return out;
}

} // namespace curvpool
