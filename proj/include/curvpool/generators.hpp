#pragma once

#include "curvpool/graph.hpp"

#include <cstddef>
#include <cstdint>

namespace curvpool {

struct CavemanSpec {
  std::size_t num_cliques = 2; // >= 2
  std::size_t clique_size = 3; // >= 3
  std::uint64_t seed = 0;

  void validate() const; // throws InvalidSpec
};

// Connected caveman graph: num_cliques copies of K_clique_size on consecutive
// node blocks, arranged in a ring. In every clique c one internal edge,
// chosen by the seeded RNG, is removed and one of its endpoints (also chosen
// at random) is bridged to a random node of clique (c + 1) mod num_cliques.
// Result: l*k nodes, l*k*(k-1)/2 edges, exactly l bridges, connected.
Graph caveman(const CavemanSpec& spec);

Graph complete(std::size_t n);      // n >= 1
Graph cycle(std::size_t n);         // n >= 3
Graph path(std::size_t n);          // n >= 1
Graph star(std::size_t n);          // n >= 1, node 0 is the center
// Two K_k on nodes [0,k) and [k,2k) joined by the bridge (k-1, k); k >= 3.
Graph barbell(std::size_t k);
// G(n, p) with every pair decided by one unit draw in lexicographic order.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

// n x 1 matrix whose row i is the degree of node i.
FeatureMatrix degree_features(const Graph& g);

} // namespace curvpool
