#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvpool/errors.hpp"
#include "curvpool/generators.hpp"
#include "curvpool/io.hpp"
#include "oracles.hpp"

#include <filesystem>
#include <random>
#include <sstream>

using namespace curvpool;
namespace fs = std::filesystem;

namespace {

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

} // namespace

TEST_CASE("edge list reading") {
  const Graph g = io::read_edge_list("# triangle\nn 3\n\n0 1\n1 2\n# closing edge\n2 0\n");
  CHECK(g == complete(3));
  CHECK(io::read_edge_list("n 0\n").num_nodes() == 0);
  CHECK(io::read_edge_list("n 4\n").num_edges() == 0);
  CHECK(io::read_edge_list("n 2\n0 1\n1 0\n").num_edges() == 1);
  std::istringstream in("n 2\n0 1\n");
  CHECK(io::read_edge_list(in).num_edges() == 1);
}

TEST_CASE("edge list errors cite the line") {
  CHECK_THROWS_AS(io::read_edge_list("0 1\n"), ParseError);
  CHECK_THROWS_AS(io::read_edge_list(""), ParseError);
  CHECK_THROWS_AS(io::read_edge_list("n -3\n"), ParseError);
  try {
    io::read_edge_list("n 3\n0 1\n1 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(error_of([] { io::read_edge_list("n 3\n0 1\n2 2\n"); }).find("line 3") != std::string::npos);
  CHECK(error_of([] { io::read_edge_list("n 3\n0 5\n"); }).find("line 2") != std::string::npos);
  CHECK_THROWS(io::read_edge_list("n 3\n0 1 2\n"));
}

TEST_CASE("edge list writing") {
  CHECK(io::write_edge_list(build_graph(2, {})) == "n 2\n");
  CHECK(io::write_edge_list(complete(3)) == "n 3\n0 1\n0 2\n1 2\n");
  CHECK(io::write_edge_list(build_graph(3, {{2, 1}, {1, 0}})) == "n 3\n0 1\n1 2\n");
}

TEST_CASE("property: edge list round trip") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, rng() % 20, 0.3);
    const std::string text = io::write_edge_list(g);
    CHECK(io::read_edge_list(text) == g);
    CHECK(io::write_edge_list(io::read_edge_list(text)) == text);
  }
}

TEST_CASE("pools format") {
  const auto pools = PoolAssignment::from_pools(5, {{0, 1, 2}, {3, 4}});
  CHECK(io::write_pools(pools) == "{\"pools\": [[0,1,2],[3,4]]}\n");
  CHECK(io::read_pools("{\"pools\": [[0,1,2],[3,4]]}") == pools);
  CHECK(io::read_pools(io::write_pools(PoolAssignment::singletons(3))) == PoolAssignment::singletons(3));
  CHECK_THROWS_AS(io::read_pools("{\"pools\": [[0,1],[1,2]]}"), InvariantViolation);
  CHECK_THROWS_AS(io::read_pools("{\"pools\": [[0,2]]}"), InvariantViolation);
  CHECK_THROWS_AS(io::read_pools("{\"pools\": [[1,0]]}"), InvariantViolation);
  CHECK_THROWS_AS(io::read_pools("{\"pools\": [[2],[0,1]]}"), InvariantViolation);
  CHECK_THROWS_AS(io::read_pools("{\"pools\": [[0,"), ParseError);
  CHECK_THROWS_AS(io::read_pools("{\"groups\": []}"), ParseError);
}

TEST_CASE("curvature format") {
  const auto k3 = bfc_all(complete(3));
  const std::string text = io::write_curvature(k3);
  CHECK(text == "0 1 1.5\n0 2 1.5\n1 2 1.5\n");
  CHECK(io::read_curvature(text) == k3);
  CHECK(io::write_curvature(EdgeCurvature{}).empty());
  CHECK(io::read_curvature("").empty());
  CHECK_THROWS_AS(io::read_curvature("0 1 x\n"), ParseError);
  CHECK_THROWS(io::read_curvature("1 0 0.5\n"));
}

TEST_CASE("property: curvature round trip is bit-exact") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + rng() % 25, 0.3);
    const auto curv = bfc_all(g);
    const auto back = io::read_curvature(io::write_curvature(curv));
    REQUIRE(back.size() == curv.size());
    for (std::size_t e = 0; e < curv.size(); ++e) CHECK(back.values()[e] == curv.values()[e]);
  }
}

TEST_CASE("features format") {
  const FeatureMatrix f(2, 2, {1.0, 0.1, -3.5, 1e300});
  CHECK(io::read_features(io::write_features(f)) == f);
  CHECK(io::read_features("1,2\n3,4\n") == FeatureMatrix(2, 2, {1, 2, 3, 4}));
  CHECK(io::write_features(FeatureMatrix(2, 1, {13, 13})) == "13\n13\n");
  CHECK_THROWS_AS(io::read_features("1,2\n3\n"), ParseError);
  CHECK_THROWS_AS(io::read_features("1,a\n"), ParseError);
}

TEST_CASE("report format") {
  PoolingReport r{8, 2, 13, 1, 12.0 / 13.0, std::nullopt, {{4, 2}}};
  const std::string text = io::write_report(r);
  CHECK(text.find("null") != std::string::npos);
  CHECK(io::read_report(text) == r);
}

TEST_CASE("manifest format") {
  const io::DatasetManifest m{"toy", {{"a.edges", "degrees", 0}, {"b.edges", "b.csv", 1}}};
  CHECK(io::parse_manifest(io::write_manifest(m)) == m);
  CHECK_THROWS(io::parse_manifest("{\"name\": 3}"));

  const fs::path dir = fs::temp_directory_path() / "curvpool_test_io_manifest";
  fs::remove_all(dir);
  fs::create_directories(dir);
  io::write_file(dir / "manifest.json", io::write_manifest(m));
  CHECK_THROWS_AS(io::read_manifest(dir / "manifest.json"), IoError);
  io::write_file(dir / "a.edges", "n 2\n0 1\n");
  io::write_file(dir / "b.edges", "n 2\n0 1\n");
  io::write_file(dir / "b.csv", "1\n2\n");
  CHECK(io::read_manifest(dir / "manifest.json") == m);
  const Graph g = io::read_edge_list(io::read_file(dir / "b.edges"));
  CHECK(io::load_features(dir, "b.csv", g) == FeatureMatrix(2, 1, {1, 2}));
  CHECK(io::load_features(dir, "degrees", g) == FeatureMatrix(2, 1, {1, 1}));
  io::write_file(dir / "b.csv", "1\n");
  CHECK_THROWS_AS(io::load_features(dir, "b.csv", g), ShapeMismatch);
  CHECK_THROWS_AS(io::read_file(dir / "missing"), IoError);
  fs::remove_all(dir);
}
