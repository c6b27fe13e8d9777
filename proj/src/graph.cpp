#include "curvpool/graph.hpp"

#include "curvpool/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace curvpool {

std::span<const NodeId> Graph::neighbors(NodeId i) const {
  check_node(i);
  return std::span<const NodeId>(targets_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
}

std::size_t Graph::degree(NodeId i) const {
  check_node(i);
  return offsets_[i + 1] - offsets_[i];
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t i = 0; i + 1 < offsets_.size(); ++i)
    best = std::max(best, offsets_[i + 1] - offsets_[i]);
  return best;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto nu = neighbors(u);
  check_node(v);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u)
    for (NodeId v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

void Graph::check_node(NodeId i) const {
  if (i >= num_nodes())
    throw IndexOutOfRange("node " + std::to_string(i) + " out of range for graph with " +
                          std::to_string(num_nodes()) + " nodes");
}

Graph build_graph(std::size_t n, std::span<const Edge> input) {
  std::vector<Edge> edges;
  edges.reserve(input.size());
  for (const Edge& e : input) {
    if (e.u >= n || e.v >= n)
      throw IndexOutOfRange("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") out of range for " + std::to_string(n) + " nodes");
    if (e.u == e.v) throw SelfLoopRejected("self-loop on node " + std::to_string(e.u));
    edges.push_back(canonical_edge(e.u, e.v));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(g.offsets_[n]);

  // With edges sorted by (u, v): the first pass appends every smaller
  // neighbor in ascending order, the second every larger one.
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) g.targets_[cursor[e.v]++] = e.u;
  for (const Edge& e : edges) g.targets_[cursor[e.u]++] = e.v;
  return g;
}

Graph build_graph(std::size_t n, std::span<const std::pair<NodeId, NodeId>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) edges.push_back({a, b});
  return build_graph(n, std::span<const Edge>(edges));
}

Graph build_graph(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> pairs) {
  return build_graph(n, std::span<const std::pair<NodeId, NodeId>>(pairs.begin(), pairs.size()));
}

std::vector<NodeId> common_neighbors(const Graph& g, NodeId i, NodeId j) {
  auto ni = g.neighbors(i);
  auto nj = g.neighbors(j);
  std::vector<NodeId> out;
  std::set_intersection(ni.begin(), ni.end(), nj.begin(), nj.end(), std::back_inserter(out));
  return out;
}

std::vector<std::uint32_t> component_labels(const Graph& g) {
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> label(g.num_nodes(), unset);
  std::uint32_t next = 0;
  std::queue<NodeId> frontier;
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    if (label[s] != unset) continue;
    label[s] = next;
    frontier.push(s);
    while (!frontier.empty()) {
      NodeId x = frontier.front();
      frontier.pop();
      for (NodeId y : g.neighbors(x))
        if (label[y] == unset) {
          label[y] = next;
          frontier.push(y);
        }
    }
    ++next;
  }
  return label;
}

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_)
    throw ShapeMismatch("feature matrix " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                        " given " + std::to_string(values_.size()) + " values");
  for (std::size_t k = 0; k < values_.size(); ++k)
    if (!std::isfinite(values_[k]))
      throw InvariantViolation("non-finite feature at row " + std::to_string(k / cols_) +
                               ", column " + std::to_string(k % cols_));
}

std::span<const double> FeatureMatrix::row(std::size_t r) const {
  if (r >= rows_) throw IndexOutOfRange("feature row " + std::to_string(r) + " out of range");
  return std::span<const double>(values_).subspan(r * cols_, cols_);
}

std::span<double> FeatureMatrix::row(std::size_t r) {
  if (r >= rows_) throw IndexOutOfRange("feature row " + std::to_string(r) + " out of range");
  return std::span<double>(values_).subspan(r * cols_, cols_);
}

} // namespace curvpool
