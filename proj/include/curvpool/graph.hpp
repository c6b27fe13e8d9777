#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace curvpool {

using NodeId = std::uint32_t;

// Undirected edge in canonical form (u < v).
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Returns the canonical (min, max) form of an unordered pair.
constexpr Edge canonical_edge(NodeId a, NodeId b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected unweighted graph stored as CSR with every adjacency list
// sorted ascending. Immutable once built; use build_graph() to construct.
class Graph {
public:
  Graph() = default;

  std::size_t num_nodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId i) const;
  std::size_t degree(NodeId i) const;
  std::size_t max_degree() const noexcept;
  bool has_edge(NodeId u, NodeId v) const;

  // All edges in canonical form, ascending lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);

  void check_node(NodeId i) const;

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

// Builds a graph on nodes 0..n-1. Duplicate and reversed pairs collapse to one
// edge. Throws IndexOutOfRange or SelfLoopRejected.
Graph build_graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges);
Graph build_graph(std::size_t n, std::span<const Edge> edges);
Graph build_graph(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> edges);

inline std::size_t degree(const Graph& g, NodeId i) { return g.degree(i); }

// Sorted intersection of the adjacency lists of i and j.
std::vector<NodeId> common_neighbors(const Graph& g, NodeId i, NodeId j);

// Per-node connected-component label; labels are assigned in order of the
// smallest node of each component.
std::vector<std::uint32_t> component_labels(const Graph& g);

// Dense row-major matrix of per-node features. All entries finite.
class FeatureMatrix {
public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t cols);
  FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::span<const double> row(std::size_t r) const;
  std::span<double> row(std::size_t r);
  double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }

  std::span<const double> values() const noexcept { return values_; }

  friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

} // namespace curvpool
