#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvpool/errors.hpp"
#include "curvpool/generators.hpp"
#include "curvpool/graph.hpp"
#include "oracles.hpp"

#include <random>

using namespace curvpool;

namespace {

std::vector<NodeId> adj(const Graph& g, NodeId i) {
  auto n = g.neighbors(i);
  return {n.begin(), n.end()};
}

} // namespace

TEST_CASE("build_graph dedups and symmetrizes") {
  const Graph g = build_graph(3, {{0, 1}, {1, 2}, {1, 0}});
  CHECK(g.num_nodes() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(adj(g, 0) == std::vector<NodeId>{1});
  CHECK(adj(g, 1) == std::vector<NodeId>{0, 2});
  CHECK(adj(g, 2) == std::vector<NodeId>{1});
}

TEST_CASE("isolated nodes and empty graphs") {
  const Graph g = build_graph(2, {});
  CHECK(g.num_edges() == 0);
  CHECK(degree(g, 0) == 0);
  CHECK(degree(g, 1) == 0);
  CHECK(build_graph(0, {}).num_nodes() == 0);
}

TEST_CASE("degree queries") {
  const Graph k4 = complete(4);
  for (NodeId i = 0; i < 4; ++i) CHECK(degree(k4, i) == 3);
  CHECK(degree(path(3), 1) == 2);
  CHECK(k4.max_degree() == 3);
  CHECK_THROWS_AS(degree(k4, 4), IndexOutOfRange);
}

TEST_CASE("build_graph rejects bad input") {
  CHECK_THROWS_AS(build_graph(2, {{0, 0}}), SelfLoopRejected);
  CHECK_THROWS_AS(build_graph(2, {{0, 2}}), IndexOutOfRange);
}

TEST_CASE("common_neighbors") {
  CHECK(common_neighbors(complete(4), 0, 1) == std::vector<NodeId>{2, 3});
  CHECK(common_neighbors(cycle(4), 0, 1).empty());
  CHECK(common_neighbors(star(5), 0, 3).empty());
  CHECK_THROWS_AS(common_neighbors(complete(3), 0, 7), IndexOutOfRange);
}

TEST_CASE("has_edge and edges() are canonical") {
  const Graph g = build_graph(4, {{3, 1}, {2, 0}, {1, 0}});
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(2, 3));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
}

TEST_CASE("feature matrix shape and finiteness") {
  FeatureMatrix m(2, 2, {1, 2, 3, 4});
  CHECK(m(1, 0) == 3);
  CHECK(m.row(1)[1] == 4);
  CHECK_THROWS_AS(FeatureMatrix(2, 2, {1, 2, 3}), ShapeMismatch);
  CHECK_THROWS_AS(FeatureMatrix(1, 1, {std::numeric_limits<double>::infinity()}), InvariantViolation);
}

TEST_CASE("component labels") {
  const Graph g = build_graph(5, {{0, 2}, {3, 4}});
  CHECK(component_labels(g) == std::vector<std::uint32_t>{0, 1, 0, 2, 2});
}

TEST_CASE("property: graph invariants on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const Graph g = oracle::random_graph(rng, n, 0.3);
    std::size_t degree_sum = 0;
    for (NodeId i = 0; i < n; ++i) {
      const auto nb = g.neighbors(i);
      degree_sum += nb.size();
      for (std::size_t k = 0; k < nb.size(); ++k) {
        CHECK(nb[k] != i);
        CHECK(nb[k] < n);
        if (k > 0) CHECK(nb[k - 1] < nb[k]);
        CHECK(g.has_edge(nb[k], i));
      }
    }
    CHECK(degree_sum == 2 * g.num_edges());

    const auto edges = g.edges();
    CHECK(build_graph(n, std::span<const Edge>(edges)) == g);

    if (n >= 2) {
      const NodeId a = static_cast<NodeId>(rng() % n);
      const NodeId b = static_cast<NodeId>((a + 1 + rng() % (n - 1)) % n);
      CHECK(common_neighbors(g, a, b) == common_neighbors(g, b, a));
    }
  }
}
