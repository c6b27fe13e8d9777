#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvpool/curvature.hpp"
#include "curvpool/errors.hpp"
#include "curvpool/generators.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace curvpool;
using doctest::Approx;

namespace {

constexpr double kTol = 1e-9;

void check_against_oracle(const Graph& g) {
  const auto d = oracle::dense(g);
  const EdgeCurvature all = bfc_all(g);
  REQUIRE(all.size() == g.num_edges());
  for (const Edge& e : g.edges()) {
    const auto s = square_stats(g, e.u, e.v);
    const auto o = oracle::squares(d, e.u, e.v);
    CHECK(s.sq_i == o.sq_i);
    CHECK(s.sq_j == o.sq_j);
    CHECK(s.gamma_max == o.gamma_max);
    const double expected = oracle::bfc(d, e.u, e.v);
    CHECK(std::abs(bfc_edge(g, e.u, e.v) - expected) <= kTol);
    CHECK(all.at(e.u, e.v) == bfc_edge(g, e.u, e.v));
  }
}

} // namespace

TEST_CASE("square_stats on fixtures") {
  CHECK(square_stats(cycle(4), 0, 1) == SquareStats{1, 1, 1});
  CHECK(square_stats(complete(4), 0, 1) == SquareStats{0, 0, 0});
  CHECK(square_stats(path(4), 1, 2) == SquareStats{0, 0, 0});
  CHECK_THROWS_AS(square_stats(path(4), 0, 2), EdgeNotPresent);
}

TEST_CASE("square_stats: gamma_max counts cycles through one node") {
  // K_{2,3} with edge (0,2): the two sides are {0,1} and {2,3,4}. From 0 the
  // 4-cycles 0-2-1-3 and 0-2-1-4 both pass through w = 1.
  const Graph g = build_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  const auto s = square_stats(g, 0, 2);
  const auto o = oracle::squares(oracle::dense(g), 0, 2);
  CHECK(s.sq_i == 2); // k in {3, 4}
  CHECK(s.sq_j == 1); // w = 1
  CHECK(s.gamma_max == 2);
  CHECK(s.sq_i == o.sq_i);
  CHECK(s.gamma_max == o.gamma_max);
}

TEST_CASE("bfc_edge closed forms") {
  CHECK(bfc_edge(star(5), 0, 2) == 0.0);
  CHECK(bfc_edge(path(6), 2, 3) == Approx(0.0).epsilon(kTol));
  CHECK(bfc_edge(complete(4), 0, 1) == Approx(4.0 / 3.0).epsilon(kTol));
  CHECK(bfc_edge(cycle(4), 0, 1) == Approx(1.0).epsilon(kTol));
  CHECK_THROWS_AS(bfc_edge(cycle(4), 0, 2), EdgeNotPresent);
}

TEST_CASE("bfc_all fixtures") {
  CHECK(bfc_all(build_graph(3, {})).empty());
  const auto k3 = bfc_all(complete(3));
  CHECK(k3.size() == 3);
  for (double v : k3.values()) CHECK(v == Approx(1.5).epsilon(kTol));

  const Graph bb = barbell(4);
  const auto curv = bfc_all(bb);
  CHECK(curv.at(3, 4) == Approx(-1.0).epsilon(kTol));
  for (const Edge& e : bb.edges())
    if (!(e == Edge{3, 4})) CHECK(curv.at(e.u, e.v) > 0.0);
}

TEST_CASE("complete graphs: n/(n-1)") {
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto curv = bfc_all(complete(n));
    for (double v : curv.values())
      CHECK(std::abs(v - static_cast<double>(n) / static_cast<double>(n - 1)) <= kTol);
  }
}

TEST_CASE("EdgeCurvature lookup and validation") {
  const auto curv = bfc_all(cycle(5));
  CHECK(curv.find(4, 0).has_value());
  CHECK_FALSE(curv.find(0, 2).has_value());
  CHECK_THROWS_AS(curv.at(0, 2), EdgeNotPresent);
  CHECK(curv.covers(cycle(5)));
  CHECK_FALSE(curv.covers(path(5)));
  CHECK_THROWS_AS(EdgeCurvature({{1, 0}}, {0.0}), InvariantViolation);
  CHECK_THROWS_AS(EdgeCurvature({{0, 2}, {0, 1}}, {0.0, 0.0}), InvariantViolation);
  CHECK_THROWS_AS(EdgeCurvature({{0, 1}}, {}), InvariantViolation);
}

TEST_CASE("mean_curvature is absent for edgeless graphs") {
  CHECK_FALSE(mean_curvature(bfc_all(build_graph(4, {}))).has_value());
  CHECK(*mean_curvature(bfc_all(cycle(4))) == Approx(1.0));
}

TEST_CASE("property: oracle equivalence on small random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng() % 7;
    check_against_oracle(oracle::random_graph(rng, n, 0.5));
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    check_against_oracle(cycle(n));
    check_against_oracle(path(n));
    check_against_oracle(star(n));
  }
}

TEST_CASE("property: lower bound and degree-1 rule") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 4 + rng() % 20, 0.25);
    const auto curv = bfc_all(g);
    for (std::size_t k = 0; k < curv.size(); ++k) {
      const Edge e = curv.edges()[k];
      const double v = curv.values()[k];
      const double di = static_cast<double>(g.degree(e.u)), dj = static_cast<double>(g.degree(e.v));
      CHECK(v > -2.0);
      if (std::min(di, dj) == 1.0)
        CHECK(v == 0.0);
      else
        CHECK(v >= 2.0 / di + 2.0 / dj - 2.0 - kTol);
    }
  }
}

TEST_CASE("property: permutation equivariance") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 15;
    const Graph g = oracle::random_graph(rng, n, 0.35);
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = oracle::relabel(g, perm);
    const auto cg = bfc_all(g);
    const auto ch = bfc_all(h);
    for (const Edge& e : g.edges())
      CHECK(std::abs(cg.at(e.u, e.v) - ch.at(perm[e.u], perm[e.v])) <= kTol);
  }
}

TEST_CASE("property: disconnected graph equals union of components") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph a = oracle::random_graph(rng, 2 + rng() % 10, 0.4);
    const Graph b = oracle::random_graph(rng, 2 + rng() % 10, 0.4);
    const Graph u = oracle::disjoint_union(a, b);
    const auto ca = bfc_all(a), cb = bfc_all(b), cu = bfc_all(u);
    CHECK(cu.size() == ca.size() + cb.size());
    for (const Edge& e : a.edges()) CHECK(cu.at(e.u, e.v) == ca.at(e.u, e.v));
    const auto shift = static_cast<NodeId>(a.num_nodes());
    for (const Edge& e : b.edges()) CHECK(cu.at(e.u + shift, e.v + shift) == cb.at(e.u, e.v));
  }
}

TEST_CASE("bfc_all is bit-identical across thread counts") {
  const Graph g = caveman({30, 6, 3});
  const auto one = bfc_all(g, 1);
  for (unsigned t : {2u, 3u, 8u}) CHECK(bfc_all(g, t) == one);
}
