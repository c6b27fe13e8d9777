#include "curvpool/curvature.hpp"

#include "curvpool/errors.hpp"
#include "curvpool/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace curvpool {

namespace {

struct EdgeCounts {
  std::size_t triangles = 0;
  SquareStats squares;
};

// Scratch for evaluating many edges of one graph in O(d_max^2) each. Marks
// are generation-stamped so they never need clearing.
class EdgeScratch {
public:
  explicit EdgeScratch(std::size_t n) : in_i_(n, 0), in_j_(n, 0), cycles_through_(n, 0) {}

  EdgeCounts count(const Graph& g, NodeId i, NodeId j) {
    ++stamp_;
    const auto ni = g.neighbors(i);
    const auto nj = g.neighbors(j);
    for (NodeId k : ni) in_i_[k] = stamp_;
    for (NodeId w : nj) in_j_[w] = stamp_;

    EdgeCounts out;
    for (NodeId w : nj)
      if (in_i_[w] == stamp_) ++out.triangles;

    // Cycle i-j-w-k-i: k in N_i \ (N_j + j), w in N_k and N_j \ (N_i + i).
    for (NodeId k : ni) {
      if (k == j || in_j_[k] == stamp_) continue;
      std::size_t through_k = 0;
      for (NodeId w : g.neighbors(k)) {
        if (w == i || in_j_[w] != stamp_ || in_i_[w] == stamp_) continue;
        ++through_k;
        if (cycles_through_[w]++ == 0) touched_.push_back(w);
      }
      if (through_k > 0) {
        ++out.squares.sq_i;
        out.squares.gamma_max = std::max(out.squares.gamma_max, through_k);
      }
    }
    out.squares.sq_j = touched_.size();
    for (NodeId w : touched_) {
      out.squares.gamma_max = std::max<std::size_t>(out.squares.gamma_max, cycles_through_[w]);
      cycles_through_[w] = 0;
    }
    touched_.clear();
    return out;
  }

private:
  std::uint64_t stamp_ = 0;
  std::vector<std::uint64_t> in_i_;
  std::vector<std::uint64_t> in_j_;
  std::vector<std::uint32_t> cycles_through_;
  std::vector<NodeId> touched_;
};

double curvature_from_counts(std::size_t di, std::size_t dj, const EdgeCounts& c) {
  const double dmin = static_cast<double>(std::min(di, dj));
  const double dmax = static_cast<double>(std::max(di, dj));
  if (dmin <= 1.0) return 0.0;
  const double tri = static_cast<double>(c.triangles);
  double value = 2.0 / static_cast<double>(di) + 2.0 / static_cast<double>(dj) - 2.0 +
                 2.0 * tri / dmax + tri / dmin;
  // No diagonal-free 4-cycle means both square counts vanish; the term is 0.
  if (c.squares.gamma_max > 0)
    value += static_cast<double>(c.squares.sq_i + c.squares.sq_j) /
             (static_cast<double>(c.squares.gamma_max) * dmax);
  return value;
}

void require_edge(const Graph& g, NodeId i, NodeId j) {
  if (!g.has_edge(i, j))
    throw EdgeNotPresent("(" + std::to_string(i) + "," + std::to_string(j) + ") is not an edge");
}

} // namespace

EdgeCurvature::EdgeCurvature(std::vector<Edge> edges, std::vector<double> values)
    : edges_(std::move(edges)), values_(std::move(values)) {
  if (edges_.size() != values_.size())
    throw InvariantViolation("curvature map has " + std::to_string(edges_.size()) + " edges but " +
                             std::to_string(values_.size()) + " values");
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (edges_[k].u >= edges_[k].v)
      throw InvariantViolation("curvature entry " + std::to_string(k) + " is not canonical (u < v)");
    if (k > 0 && !(edges_[k - 1] < edges_[k]))
      throw InvariantViolation("curvature entry " + std::to_string(k) +
                               " breaks strictly ascending edge order");
  }
}

std::optional<double> EdgeCurvature::find(NodeId a, NodeId b) const {
  const Edge key = canonical_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return values_[static_cast<std::size_t>(it - edges_.begin())];
}

double EdgeCurvature::at(NodeId a, NodeId b) const {
  if (auto v = find(a, b)) return *v;
  throw EdgeNotPresent("no curvature for (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

bool EdgeCurvature::covers(const Graph& g) const {
  if (edges_.size() != g.num_edges()) return false;
  return std::ranges::equal(edges_, g.edges());
}

SquareStats square_stats(const Graph& g, NodeId i, NodeId j) {
  require_edge(g, i, j);
  EdgeScratch scratch(g.num_nodes());
  return scratch.count(g, i, j).squares;
}

double bfc_edge(const Graph& g, NodeId i, NodeId j) {
  require_edge(g, i, j);
  EdgeScratch scratch(g.num_nodes());
  return curvature_from_counts(g.degree(i), g.degree(j), scratch.count(g, i, j));
}

EdgeCurvature bfc_all(const Graph& g, unsigned threads) {
  std::vector<Edge> edges = g.edges();
  std::vector<double> values(edges.size());
  parallel_chunks(edges.size(), threads, [&](std::size_t begin, std::size_t end) {
    EdgeScratch scratch(g.num_nodes());
    for (std::size_t k = begin; k < end; ++k) {
      const Edge e = edges[k];
      values[k] = curvature_from_counts(g.degree(e.u), g.degree(e.v), scratch.count(g, e.u, e.v));
    }
  });
  return EdgeCurvature(std::move(edges), std::move(values));
}

std::optional<double> mean_curvature(const EdgeCurvature& curv) {
  if (curv.empty()) return std::nullopt;
  double total = 0.0;
  for (double v : curv.values()) total += v;
  return total / static_cast<double>(curv.size());
}

} // namespace curvpool
