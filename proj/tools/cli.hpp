#pragma once

#include "curvpool/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace curvpool::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kDataError = 2;

// Entry point of the `curvpool` tool. Subcommands: curvature, pool,
// cliquepool, generate, stats, bench.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct LadderRow {
  std::size_t num_cliques = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  double curvature_seconds = 0.0; // one bfc_all call
  double pool_seconds = 0.0;      // one curvpool call on precomputed curvature
};

// Times bfc_all and curvpool (High, t_high = 0, Sum, degree features) on
// caveman graphs with a fixed clique size. Each figure is the fastest single
// call out of at least `repeats` calls spanning repeats * min_trial_seconds.
std::vector<LadderRow> measure_ladder(std::size_t clique_size,
                                      const std::vector<std::size_t>& ladder, std::size_t repeats,
                                      double min_trial_seconds, unsigned threads,
                                      std::uint64_t seed);

// Wall-clock seconds to compute curvature for every graph of a caveman
// dataset generated in memory.
double time_dataset_precompute(std::size_t count, std::size_t num_cliques, std::size_t clique_size,
                               std::uint64_t seed, unsigned threads);

} // namespace curvpool::cli
