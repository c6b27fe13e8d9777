#pragma once

#include "curvpool/graph.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace curvpool {

// Diagonal-free 4-cycle statistics of an edge (i, j).
//   sq_i      number of neighbors k of i that lie on a 4-cycle i-j-w-k with
//             neither diagonal (i,w) nor (j,k) present
//   sq_j      the same count for neighbors w of j
//   gamma_max largest number of such cycles passing through one k or one w
struct SquareStats {
  std::size_t sq_i = 0;
  std::size_t sq_j = 0;
  std::size_t gamma_max = 0;

  friend bool operator==(const SquareStats&, const SquareStats&) = default;
};

// Balanced Forman curvature keyed by canonical edge. Edges are stored in
// ascending lexicographic order, the same order as Graph::edges().
class EdgeCurvature {
public:
  EdgeCurvature() = default;
  // Throws InvariantViolation unless edges are canonical, strictly ascending
  // and the two vectors have the same length.
  EdgeCurvature(std::vector<Edge> edges, std::vector<double> values);

  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const double> values() const noexcept { return values_; }

  // Either endpoint order is accepted.
  std::optional<double> find(NodeId a, NodeId b) const;
  double at(NodeId a, NodeId b) const;

  // True when the key set is exactly the edge set of g.
  bool covers(const Graph& g) const;

  friend bool operator==(const EdgeCurvature&, const EdgeCurvature&) = default;

private:
  std::vector<Edge> edges_;
  std::vector<double> values_;
};

SquareStats square_stats(const Graph& g, NodeId i, NodeId j);

// Curvature of a single existing edge; throws EdgeNotPresent otherwise.
double bfc_edge(const Graph& g, NodeId i, NodeId j);

// Curvature of every edge. threads == 0 uses all hardware threads; the result
// does not depend on the thread count.
EdgeCurvature bfc_all(const Graph& g, unsigned threads = 1);

// Arithmetic mean over edges, empty for an edgeless graph.
std::optional<double> mean_curvature(const EdgeCurvature& curv);

} // namespace curvpool
