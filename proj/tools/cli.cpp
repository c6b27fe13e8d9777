#include "cli.hpp"

#include "curvpool/analysis.hpp"
#include "curvpool/cliques.hpp"
#include "curvpool/curvature.hpp"
#include "curvpool/errors.hpp"
#include "curvpool/generators.hpp"
#include "curvpool/io.hpp"
#include "curvpool/parallel.hpp"
#include "curvpool/pooling.hpp"
#include "curvpool/random.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>

namespace curvpool::cli {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

void print_timing(std::ostream& out, const std::string& dataset, const char* stage, double s) {
  out << "dataset=" << dataset << " stage=" << stage << " seconds=" << format_seconds(s) << "\n";
}

// One graph to process, resolved from either a single edge list or a
// manifest entry.
struct Item {
  std::string name;
  fs::path graph_path;
  std::string features;
  fs::path base_dir;
  std::int64_t label = 0;
};

struct Input {
  std::string dataset;
  bool is_manifest = false;
  std::vector<Item> items;
};

Input resolve_input(const fs::path& in, const std::string& features) {
  Input input;
  if (in.extension() == ".json") {
    const io::DatasetManifest m = io::read_manifest(in);
    input.dataset = m.name;
    input.is_manifest = true;
    for (const auto& e : m.graphs)
      input.items.push_back({fs::path(e.graph).stem().string(), in.parent_path() / e.graph,
                             e.features, in.parent_path(), e.label});
  } else {
    if (!fs::exists(in)) throw IoError("input not found: " + in.string());
    input.dataset = in.stem().string();
    // A relative feature path on the command line is taken as given.
    input.items.push_back({in.stem().string(), in, features, fs::path(), 0});
  }
  return input;
}

// Runs body(index, inner_threads) over every item. A dataset parallelizes
// across graphs; a lone graph gets all threads itself.
template <class Body>
void for_each_item(const Input& input, unsigned threads, Body&& body) {
  if (input.items.size() == 1) {
    body(std::size_t{0}, threads);
    return;
  }
  parallel_chunks(input.items.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) body(k, 1u);
  });
}

struct CommonFlags {
  std::string in;
  std::string features = std::string(io::kDegreeFeatures);
  unsigned threads = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--in", flags.in, "Edge list, or dataset manifest (.json)")->required();
  cmd->add_option("--threads", flags.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

// ---- curvature ------------------------------------------------------------

struct CurvatureFlags {
  CommonFlags common;
  std::string out;
};

int cmd_curvature(const CurvatureFlags& f, std::ostream& out) {
  const Input input = resolve_input(f.common.in, f.common.features);
  const auto start = Clock::now();
  std::vector<std::string> texts(input.items.size());
  for_each_item(input, f.common.threads, [&](std::size_t k, unsigned inner) {
    const Graph g = io::read_edge_list(io::read_file(input.items[k].graph_path));
    texts[k] = io::write_curvature(bfc_all(g, inner));
  });
  const double elapsed = seconds_since(start);

  if (input.is_manifest) {
    fs::create_directories(f.out);
    for (std::size_t k = 0; k < texts.size(); ++k)
      io::write_file(fs::path(f.out) / (input.items[k].name + ".curv"), texts[k]);
  } else {
    if (fs::path(f.out).has_parent_path()) fs::create_directories(fs::path(f.out).parent_path());
    io::write_file(f.out, texts.front());
  }
  print_timing(out, input.dataset, "pre", elapsed);
  return kOk;
}

// ---- pool / cliquepool ----------------------------------------------------

struct PoolFlags {
  CommonFlags common;
  std::string strategy;
  std::optional<double> t_low;
  std::optional<double> t_high;
  std::string agg = "sum";
  std::string curvature;
  std::string out_dir;
};

struct PoolOutputs {
  std::string graph;
  std::string features;
  std::string pools;
  std::string report;
};

PoolOutputs render(const Graph& g, const EdgeCurvature& curv_before, const PoolingResult& result,
                   unsigned threads) {
  const EdgeCurvature curv_after = bfc_all(result.pooled.graph, threads);
  const PoolingReport report =
      pooling_report(g, curv_before, result.pooled.graph, curv_after, result.pooled.origin);
  return {io::write_edge_list(result.pooled.graph), io::write_features(result.features),
          io::write_pools(result.pooled.origin), io::write_report(report)};
}

void write_pool_outputs(const Input& input, const std::vector<PoolOutputs>& outputs,
                        const fs::path& out_dir) {
  fs::create_directories(out_dir);
  io::DatasetManifest pooled{input.dataset + "_pooled", {}};
  for (std::size_t k = 0; k < outputs.size(); ++k) {
    const std::string& stem = input.items[k].name;
    io::write_file(out_dir / (stem + ".pooled.edges"), outputs[k].graph);
    io::write_file(out_dir / (stem + ".features.csv"), outputs[k].features);
    io::write_file(out_dir / (stem + ".pools.json"), outputs[k].pools);
    io::write_file(out_dir / (stem + ".report.json"), outputs[k].report);
    pooled.graphs.push_back({stem + ".pooled.edges", stem + ".features.csv", input.items[k].label});
  }
  if (input.is_manifest) io::write_file(out_dir / "manifest.json", io::write_manifest(pooled));
}

Strategy strategy_from_flags(const PoolFlags& f) {
  Strategy s;
  s.kind = parse_strategy_kind(f.strategy);
  if (s.kind != StrategyKind::High) {
    if (!f.t_low) throw InvalidThresholds("--t-low is required for strategy " + f.strategy);
    s.t_low = *f.t_low;
  }
  if (s.kind != StrategyKind::Low) {
    if (!f.t_high) throw InvalidThresholds("--t-high is required for strategy " + f.strategy);
    s.t_high = *f.t_high;
  }
  s.validate();
  return s;
}

fs::path precomputed_path(const PoolFlags& f, const Input& input, std::size_t k) {
  if (!input.is_manifest) return f.curvature;
  return fs::path(f.curvature) / (input.items[k].name + ".curv");
}

int cmd_pool(const PoolFlags& f, std::ostream& out) {
  const Strategy strategy = strategy_from_flags(f);
  const Aggregator agg = parse_aggregator(f.agg);
  const Input input = resolve_input(f.common.in, f.common.features);

  std::vector<Graph> graphs(input.items.size());
  std::vector<EdgeCurvature> curvs(input.items.size());
  const auto pre_start = Clock::now();
  for_each_item(input, f.common.threads, [&](std::size_t k, unsigned inner) {
    graphs[k] = io::read_edge_list(io::read_file(input.items[k].graph_path));
    if (f.curvature.empty()) {
      curvs[k] = bfc_all(graphs[k], inner);
    } else {
      curvs[k] = io::read_curvature(io::read_file(precomputed_path(f, input, k)));
      if (!curvs[k].covers(graphs[k]))
        throw ShapeMismatch("curvature file for " + input.items[k].name +
                            " does not match the graph's edge set");
    }
  });
  const double pre_seconds = seconds_since(pre_start);

  std::vector<PoolOutputs> outputs(input.items.size());
  const auto pool_start = Clock::now();
  for_each_item(input, f.common.threads, [&](std::size_t k, unsigned inner) {
    const Item& item = input.items[k];
    const FeatureMatrix feats = io::load_features(item.base_dir, item.features, graphs[k]);
    const PoolingResult result = curvpool(graphs[k], feats, strategy, agg, &curvs[k], inner);
    outputs[k] = render(graphs[k], curvs[k], result, inner);
  });
  const double pool_seconds = seconds_since(pool_start);

  write_pool_outputs(input, outputs, f.out_dir);
  print_timing(out, input.dataset, f.curvature.empty() ? "pre" : "load", pre_seconds);
  print_timing(out, input.dataset, "pool", pool_seconds);
  return kOk;
}

int cmd_cliquepool(const PoolFlags& f, std::ostream& out) {
  const Aggregator agg = parse_aggregator(f.agg);
  const Input input = resolve_input(f.common.in, f.common.features);
  std::vector<PoolOutputs> outputs(input.items.size());
  const auto start = Clock::now();
  for_each_item(input, f.common.threads, [&](std::size_t k, unsigned inner) {
    const Item& item = input.items[k];
    const Graph g = io::read_edge_list(io::read_file(item.graph_path));
    const FeatureMatrix feats = io::load_features(item.base_dir, item.features, g);
    const PoolingResult result = clique_pool(g, feats, agg);
    outputs[k] = render(g, bfc_all(g, inner), result, inner);
  });
  const double elapsed = seconds_since(start);
  write_pool_outputs(input, outputs, f.out_dir);
  print_timing(out, input.dataset, "pre", elapsed);
  return kOk;
}

// ---- generate -------------------------------------------------------------

struct GenerateFlags {
  std::size_t cliques = 0;
  std::size_t clique_size = 0;
  std::optional<std::size_t> cliques_alt;
  std::optional<std::size_t> clique_size_alt;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string name = "artificial";
  std::string out_dir;
};

// Graph g of the dataset gets label g % 2. Label 0 uses (cliques,
// clique_size); label 1 uses the *_alt values, defaulting to one extra
// clique of the same size. Each graph has its own seed derived from --seed.
int cmd_generate(const GenerateFlags& f, std::ostream& out) {
  const CavemanSpec class0{f.cliques, f.clique_size, 0};
  const CavemanSpec class1{f.cliques_alt.value_or(f.cliques + 1),
                           f.clique_size_alt.value_or(f.clique_size), 0};
  class0.validate();
  class1.validate();

  fs::create_directories(f.out_dir);
  io::DatasetManifest manifest{f.name, {}};
  for (std::size_t g = 0; g < f.count; ++g) {
    CavemanSpec spec = g % 2 == 0 ? class0 : class1;
    spec.seed = derive_seed(f.seed, g);
    char file[32];
    std::snprintf(file, sizeof file, "graph_%05zu.edges", g);
    io::write_file(fs::path(f.out_dir) / file, io::write_edge_list(caveman(spec)));
    manifest.graphs.push_back({file, std::string(io::kDegreeFeatures), static_cast<std::int64_t>(g % 2)});
  }
  io::write_file(fs::path(f.out_dir) / "manifest.json", io::write_manifest(manifest));
  out << "dataset=" << f.name << " graphs=" << f.count << "\n";
  return kOk;
}

// ---- stats ----------------------------------------------------------------

struct StatsFlags {
  CommonFlags common;
  std::size_t bins = 40;
  std::string curvature;
  std::string hist_out;
};

std::string optional_real(const std::optional<double>& v) {
  return v ? io::format_double(*v) : std::string("none");
}

int cmd_stats(const StatsFlags& f, std::ostream& out, std::ostream& err) {
  const Input input = resolve_input(f.common.in, f.common.features);
  std::vector<Graph> graphs(input.items.size());
  std::vector<EdgeCurvature> curvs(input.items.size());
  for_each_item(input, f.common.threads, [&](std::size_t k, unsigned inner) {
    graphs[k] = io::read_edge_list(io::read_file(input.items[k].graph_path));
    if (f.curvature.empty()) {
      curvs[k] = bfc_all(graphs[k], inner);
    } else {
      const fs::path p = input.is_manifest ? fs::path(f.curvature) / (input.items[k].name + ".curv")
                                           : fs::path(f.curvature);
      curvs[k] = io::read_curvature(io::read_file(p));
      if (!curvs[k].covers(graphs[k]))
        throw ShapeMismatch("curvature file for " + input.items[k].name +
                            " does not match the graph's edge set");
    }
  });

  std::vector<double> all;
  for (std::size_t k = 0; k < curvs.size(); ++k) {
    const auto values = curvs[k].values();
    all.insert(all.end(), values.begin(), values.end());
    if (input.is_manifest) {
      out << "graph=" << input.items[k].name << " label=" << input.items[k].label
          << " nodes=" << graphs[k].num_nodes() << " edges=" << graphs[k].num_edges()
          << " mean_curv=" << optional_real(mean_curvature(curvs[k])) << "\n";
    }
  }

  const CurvatureHistogram h = histogram(std::span<const double>(all), f.bins);
  out << "dataset=" << input.dataset << " edges=" << all.size() << " min=" << io::format_double(h.min)
      << " max=" << io::format_double(h.max) << " mean=" << io::format_double(h.mean)
      << " median=" << io::format_double(h.median) << "\n";
  out << "recommended_threshold=" << io::format_double(recommend_threshold(all)) << "\n";
  if (threshold_is_degenerate(all))
    err << "warning: all curvature values are equal; a strict threshold at the median selects no edge\n";
  const std::string hist = io::write_histogram_text(h);
  if (f.hist_out.empty())
    out << hist;
  else
    io::write_file(f.hist_out, hist);
  return kOk;
}

// ---- bench ----------------------------------------------------------------

struct BenchFlags {
  std::size_t clique_size = 6;
  std::vector<std::size_t> ladder{50, 100, 200, 400};
  std::size_t repeats = 5;
  double min_trial = 0.02;
  std::size_t dataset_count = 0;
  std::size_t dataset_cliques = 10;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

int cmd_bench(const BenchFlags& f, std::ostream& out) {
  const auto rows = measure_ladder(f.clique_size, f.ladder, f.repeats, f.min_trial, f.threads, f.seed);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string name = "caveman_l" + std::to_string(row.num_cliques) + "_k" +
                             std::to_string(f.clique_size);
    out << "dataset=" << name << " nodes=" << row.nodes << " edges=" << row.edges
        << " max_degree=" << row.max_degree << "\n";
    print_timing(out, name, "pre", row.curvature_seconds);
    print_timing(out, name, "pool", row.pool_seconds);
    if (r > 0) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3f", row.curvature_seconds / rows[r - 1].curvature_seconds);
      out << "dataset=" << name << " edge_ratio=" << io::format_double(static_cast<double>(row.edges) / rows[r - 1].edges)
          << " pre_time_ratio=" << buf << "\n";
    }
  }
  if (f.dataset_count > 0) {
    const double s = time_dataset_precompute(f.dataset_count, f.dataset_cliques, f.clique_size,
                                             f.seed, f.threads);
    print_timing(out, "caveman_dataset_" + std::to_string(f.dataset_count), "pre", s);
  }
  return kOk;
}

int dispatch(CLI::App& app, const CurvatureFlags& curv, const PoolFlags& pool,
             const PoolFlags& clique, const GenerateFlags& gen, const StatsFlags& stats,
             const BenchFlags& bench, std::ostream& out, std::ostream& err) {
  if (app.got_subcommand("curvature")) return cmd_curvature(curv, out);
  if (app.got_subcommand("pool")) return cmd_pool(pool, out);
  if (app.got_subcommand("cliquepool")) return cmd_cliquepool(clique, out);
  if (app.got_subcommand("generate")) return cmd_generate(gen, out);
  if (app.got_subcommand("stats")) return cmd_stats(stats, out, err);
  if (app.got_subcommand("bench")) return cmd_bench(bench, out);
  return kUsageError;
}

} // namespace

std::vector<LadderRow> measure_ladder(std::size_t clique_size, const std::vector<std::size_t>& ladder,
                                      std::size_t repeats, double min_trial_seconds, unsigned threads,
                                      std::uint64_t seed) {
  std::vector<LadderRow> rows;
  for (std::size_t l : ladder) {
    const Graph g = caveman({l, clique_size, seed});
    const FeatureMatrix feats = degree_features(g);
    const EdgeCurvature curv = bfc_all(g, threads);
    const Strategy strategy = Strategy::high(0.0);

    // Fastest single call, sampled until both `repeats` calls and
    // repeats * min_trial_seconds of wall time have been spent.
    auto best_of = [&](auto&& call) {
      const double budget = static_cast<double>(std::max<std::size_t>(repeats, 1)) * min_trial_seconds;
      const auto start = Clock::now();
      double best = 0.0;
      for (std::size_t r = 0; r < repeats || r == 0 || seconds_since(start) < budget; ++r) {
        const auto t0 = Clock::now();
        call();
        const double t = seconds_since(t0);
        if (r == 0 || t < best) best = t;
      }
      return best;
    };

    LadderRow row;
    row.num_cliques = l;
    row.nodes = g.num_nodes();
    row.edges = g.num_edges();
    row.max_degree = g.max_degree();
    row.curvature_seconds = best_of([&] { (void)bfc_all(g, threads); });
    row.pool_seconds = best_of([&] { (void)curvpool(g, feats, strategy, Aggregator::Sum, &curv, threads); });
    rows.push_back(row);
  }
  return rows;
}

double time_dataset_precompute(std::size_t count, std::size_t num_cliques, std::size_t clique_size,
                               std::uint64_t seed, unsigned threads) {
  std::vector<Graph> graphs;
  graphs.reserve(count);
  for (std::size_t g = 0; g < count; ++g)
    graphs.push_back(caveman({num_cliques, clique_size, derive_seed(seed, g)}));
  std::vector<EdgeCurvature> curvs(count);
  const auto start = Clock::now();
  parallel_chunks(count, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) curvs[k] = bfc_all(graphs[k], 1);
  });
  return seconds_since(start);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature-based graph pooling toolkit", "curvpool"};
  app.require_subcommand(1);

  CurvatureFlags curv;
  auto* c = app.add_subcommand("curvature", "Compute Balanced Forman curvature of every edge");
  add_common(c, curv.common);
  c->add_option("--out", curv.out, "Curvature file, or directory for a dataset")->required();

  PoolFlags pool;
  auto* p = app.add_subcommand("pool", "Curvature-threshold pooling");
  add_common(p, pool.common);
  p->add_option("--features", pool.common.features, "Feature CSV or 'degrees'")->capture_default_str();
  p->add_option("--strategy", pool.strategy, "high | low | mixed")
      ->required()
      ->check(CLI::IsMember({"high", "low", "mixed"}));
  p->add_option("--t-low", pool.t_low, "Lower threshold (low, mixed)");
  p->add_option("--t-high", pool.t_high, "Upper threshold (high, mixed)");
  p->add_option("--agg", pool.agg, "sum | avg | max")
      ->capture_default_str()
      ->check(CLI::IsMember({"sum", "avg", "max"}));
  p->add_option("--curvature", pool.curvature, "Precomputed curvature file or directory");
  p->add_option("--out-dir", pool.out_dir, "Output directory")->required();

  PoolFlags clique;
  auto* q = app.add_subcommand("cliquepool", "CliquePool baseline");
  add_common(q, clique.common);
  q->add_option("--features", clique.common.features, "Feature CSV or 'degrees'")->capture_default_str();
  q->add_option("--agg", clique.agg, "sum | avg | max")
      ->capture_default_str()
      ->check(CLI::IsMember({"sum", "avg", "max"}));
  q->add_option("--out-dir", clique.out_dir, "Output directory")->required();

  GenerateFlags gen;
  auto* g = app.add_subcommand("generate", "Generate a connected-caveman dataset");
  g->add_option("--cliques", gen.cliques, "Cliques per graph, label 0")->required();
  g->add_option("--clique-size", gen.clique_size, "Clique size, label 0")->required();
  g->add_option("--cliques-alt", gen.cliques_alt, "Cliques per graph, label 1 (default cliques+1)");
  g->add_option("--clique-size-alt", gen.clique_size_alt, "Clique size, label 1 (default clique-size)");
  g->add_option("--count", gen.count, "Number of graphs")->required();
  g->add_option("--seed", gen.seed, "Dataset seed")->capture_default_str();
  g->add_option("--name", gen.name, "Dataset name")->capture_default_str();
  g->add_option("--out-dir", gen.out_dir, "Output directory")->required();

  StatsFlags stats;
  auto* s = app.add_subcommand("stats", "Curvature histogram and threshold recommendation");
  add_common(s, stats.common);
  s->add_option("--bins", stats.bins, "Histogram bins")->capture_default_str()->check(CLI::PositiveNumber);
  s->add_option("--curvature", stats.curvature, "Precomputed curvature file or directory");
  s->add_option("--hist-out", stats.hist_out, "Write the two-column histogram here instead of stdout");

  BenchFlags bench;
  auto* b = app.add_subcommand("bench", "Time curvature precompute and pooling on a caveman ladder");
  b->add_option("--clique-size", bench.clique_size, "Clique size")->capture_default_str();
  b->add_option("--ladder", bench.ladder, "Clique counts")->delimiter(',')->capture_default_str();
  b->add_option("--repeats", bench.repeats, "Trials per measurement")->capture_default_str();
  b->add_option("--min-trial", bench.min_trial, "Minimum seconds per trial")->capture_default_str();
  b->add_option("--dataset-count", bench.dataset_count, "Also time a dataset of this many graphs");
  b->add_option("--dataset-cliques", bench.dataset_cliques, "Cliques per dataset graph")->capture_default_str();
  b->add_option("--seed", bench.seed, "Generator seed")->capture_default_str();
  b->add_option("--threads", bench.threads, "Worker threads (0 = all cores)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    return dispatch(app, curv, pool, clique, gen, stats, bench, out, err);
  } catch (const InvalidThresholds& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"curvpool"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace curvpool::cli
