#pragma once

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphfx/graphfx.hpp"

namespace graphfx::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kDataError = 3 };

struct Settings {
  std::string graph;
  std::string source = "random";
  std::uint64_t seed = 1;
  int threads = 0;
  std::string output = "table";
  std::string output_file;
  std::size_t iters = 10;
  bool no_warmup = false;
  bool directed = false;

  std::string strategy = "auto";
  std::size_t small_cut = 32;
  std::size_t large_cut = 256;
  std::size_t chunk_size = 4096;
  std::size_t items_per_chunk = 256;

  std::string direction = "push";
  double do_a = 0.001;
  double do_b = 0.2;
  bool edge_ratio = false;
  bool idempotent = false;

  std::int64_t delta = 0;
  bool no_priority_queue = false;
  std::vector<weight_t> weights;

  bool atomic_reduction = false;
  double damping = 0.85;
  double epsilon = 1e-6;
  std::size_t max_iters = 1;

  std::vector<double> do_a_values{1e-4, 1e-3, 1e-2, 1e-1, 1.0};
  std::vector<double> do_b_values{0.01, 0.05, 0.1, 0.2, 0.5};
  std::size_t sweep_runs = 25;

  std::string convert_out;
};

inline void add_graph_options(CLI::App* cmd, Settings& s) {
  cmd->add_option("--graph", s.graph, "Graph: file path, rmat:SCALE,EDGE_FACTOR or rgg:SCALE[,T]")
      ->required();
  cmd->add_option("--seed", s.seed, "Seed for generators, weights and random sources");
  cmd->add_flag("--directed", s.directed, "Keep edge direction of a file graph");
  cmd->add_option("--threads", s.threads, "Worker threads (default: hardware parallelism)");
}

inline void add_run_options(CLI::App* cmd, Settings& s, bool with_source) {
  add_graph_options(cmd, s);
  if (with_source) cmd->add_option("--source", s.source, "Source vertex id or 'random'");
  cmd->add_option("--output", s.output, "Report format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_option("--output-file", s.output_file, "Write the report here instead of stdout");
  cmd->add_option("--iters", s.iters, "Timed repetitions");
  cmd->add_flag("--no-warmup", s.no_warmup, "Skip the untimed warmup run");
  cmd->add_option("--traversal-mode,--strategy", s.strategy, "Load-balance strategy")
      ->check(CLI::IsMember({"thread_expand", "twc", "lb", "lb_light", "lb_cull", "auto"}));
  cmd->add_option("--small-cut", s.small_cut, "TWC small/medium boundary");
  cmd->add_option("--large-cut", s.large_cut, "TWC medium/large boundary");
  cmd->add_option("--chunk-size", s.chunk_size, "LB output slots per chunk");
  cmd->add_option("--items-per-chunk", s.items_per_chunk, "LB_LIGHT input items per chunk");
}

inline void add_direction_options(CLI::App* cmd, Settings& s) {
  cmd->add_option("--do-a", s.do_a, "Push to pull threshold multiplier");
  cmd->add_option("--do-b", s.do_b, "Pull to push threshold multiplier");
  cmd->add_flag("--edge-ratio", s.edge_ratio, "Estimate unvisited edges as n_u*m/(n-n_u)");
}

inline LoadBalanceConfig lb_config(const Settings& s) {
  LoadBalanceConfig lb;
  lb.strategy = parse_strategy(s.strategy);
  lb.small_cut = s.small_cut;
  lb.large_cut = s.large_cut;
  lb.output_chunk = s.chunk_size;
  lb.items_per_chunk = s.items_per_chunk;
  if (lb.small_cut == 0 || lb.small_cut >= lb.large_cut) {
    throw ConfigError("--small-cut must be positive and below --large-cut");
  }
  if (lb.output_chunk == 0 || lb.items_per_chunk == 0) {
    throw ConfigError("chunk sizes must be positive");
  }
  return lb;
}

inline DirectionConfig direction_config(const Settings& s) {
  if (!(s.do_a > 0) || !(s.do_b > 0)) throw ConfigError("--do-a and --do-b must be positive");
  DirectionConfig d;
  d.do_a = s.do_a;
  d.do_b = s.do_b;
  d.estimate = s.edge_ratio ? UnvisitedEstimate::EdgeRatio : UnvisitedEstimate::VertexRatio;
  return d;
}

inline CsrGraph<weight_t> load(const Settings& s) {
  if (s.threads < 0) throw ConfigError("--threads must be non-negative");
  if (s.threads > 0) detail::set_worker_count(s.threads);
  return materialize(parse_graph_spec(s.graph), s.seed, s.directed);
}

/// Weighted view for sssp: --weights LO,HI draws fresh weights; otherwise an
/// unweighted input gets uniform weights in [1, 64].
inline CsrGraph<weight_t> with_sssp_weights(const CsrGraph<weight_t>& g, const Settings& s) {
  if (!s.weights.empty()) {
    if (s.weights.size() != 2) throw ConfigError("--weights expects LO,HI");
    if (s.weights[0] < 1 || s.weights[0] > s.weights[1]) {
      throw ConfigError("--weights needs 1 <= LO <= HI");
    }
    return assign_random_weights(g, s.weights[0], s.weights[1], s.seed);
  }
  if (g.weighted()) return g;
  return assign_random_weights<weight_t>(g, 1, 64, s.seed);
}

inline std::string graph_label(const Settings& s) { return s.graph; }

class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError("cannot write output file '" + path + "'");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

inline int run_primitive_command(Primitive p, const Settings& s, std::ostream& out) {
  BenchmarkConfig cfg;
  cfg.primitive = p;
  cfg.repetitions = s.iters;
  cfg.warmup = !s.no_warmup;
  cfg.seed = s.seed;
  cfg.graph_name = graph_label(s);
  cfg.lb = lb_config(s);
  const auto format = parse_output_format(s.output);
  if (needs_source(p) && s.source != "random") {
    cfg.source = detail::parse_number<vertex_t>(s.source, "source");
  }
  cfg.bfs.direction = parse_direction(s.direction);
  cfg.bfs.direction_config = direction_config(s);
  cfg.bfs.idempotent = s.idempotent;
  cfg.sssp.use_priority_queue = !s.no_priority_queue;
  if (s.delta < 0) throw ConfigError("--delta must be positive");
  if (s.delta > 0) cfg.sssp.delta = static_cast<std::uint64_t>(s.delta);
  cfg.bc.deterministic_reduction = !s.atomic_reduction;
  cfg.pr.deterministic_reduction = !s.atomic_reduction;
  cfg.pr.damping = s.damping;
  cfg.pr.epsilon = s.epsilon;
  cfg.pr.max_iters = s.max_iters;
  if (s.max_iters == 0) throw ConfigError("--max-iters must be at least 1");

  OutputTarget target(s.output_file, out);
  auto g = load(s);
  if (p == Primitive::SSSP) g = with_sssp_weights(g, s);
  const auto report = run_benchmark(g, cfg);
  emit_report(target.stream(), report, format);
  return kOk;
}

inline int run_sweep_command(const Settings& s, std::ostream& out) {
  BfsOptions base;
  base.lb = lb_config(s);
  base.idempotent = s.idempotent;
  base.direction_config = direction_config(s);
  OutputTarget target(s.output_file, out);
  const auto g = load(s);
  emit_sweep_csv(target.stream(),
                 sweep_direction(g, s.do_a_values, s.do_b_values, s.sweep_runs, s.seed, base));
  return kOk;
}

inline int run_convert_command(const Settings& s) {
  const auto g = load(s);
  std::ofstream file(s.convert_out, std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + s.convert_out + "'");
  write_binary_csr(file, g);
  if (!file) throw DataError("write to '" + s.convert_out + "' failed");
  return kOk;
}

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"graphfx: frontier-based graph analytics benchmarks"};
  app.require_subcommand(1);
  Settings s;

  struct Entry {
    Primitive primitive;
    const char* name;
    const char* help;
  };
  const Entry entries[] = {
      {Primitive::BFS, "bfs", "Breadth-first search"},
      {Primitive::SSSP, "sssp", "Single-source shortest paths"},
      {Primitive::BC, "bc", "Betweenness centrality from one source"},
      {Primitive::CC, "cc", "Connected components"},
      {Primitive::PageRank, "pr", "PageRank"},
      {Primitive::TC, "tc", "Triangle counting"},
  };
  std::vector<std::pair<CLI::App*, Primitive>> commands;
  for (const auto& e : entries) {
    auto* cmd = app.add_subcommand(e.name, e.help);
    add_run_options(cmd, s, needs_source(e.primitive));
    switch (e.primitive) {
      case Primitive::BFS:
        cmd->add_option("--direction", s.direction, "Traversal direction")
            ->check(CLI::IsMember({"push", "pull", "auto"}));
        add_direction_options(cmd, s);
        cmd->add_flag("--idempotent", s.idempotent, "Atomic-free discovery");
        break;
      case Primitive::SSSP:
        cmd->add_option("--delta", s.delta, "Near/far bucket width");
        cmd->add_flag("--no-priority-queue", s.no_priority_queue, "Disable near/far splitting");
        cmd->add_option("--weights", s.weights, "Random weights LO,HI")->delimiter(',');
        break;
      case Primitive::BC:
        cmd->add_flag("--atomic-reduction", s.atomic_reduction, "Atomic-add accumulation");
        break;
      case Primitive::PageRank:
        cmd->add_option("--damping", s.damping, "Damping factor");
        cmd->add_option("--epsilon", s.epsilon, "Per-vertex convergence threshold");
        cmd->add_option("--max-iters", s.max_iters, "Iteration cap");
        cmd->add_flag("--atomic-reduction", s.atomic_reduction, "Atomic-add accumulation");
        break;
      default: break;
    }
    commands.emplace_back(cmd, e.primitive);
  }

  auto* sweep = app.add_subcommand("sweep", "BFS do_a x do_b grid, CSV output");
  add_graph_options(sweep, s);
  add_direction_options(sweep, s);
  sweep->add_option("--do-a-values", s.do_a_values, "Grid values of do_a")->delimiter(',');
  sweep->add_option("--do-b-values", s.do_b_values, "Grid values of do_b")->delimiter(',');
  sweep->add_option("--runs", s.sweep_runs, "BFS runs per grid cell");
  sweep->add_flag("--idempotent", s.idempotent, "Atomic-free discovery");
  sweep->add_option("--traversal-mode,--strategy", s.strategy, "Load-balance strategy")
      ->check(CLI::IsMember({"thread_expand", "twc", "lb", "lb_light", "lb_cull", "auto"}));
  sweep->add_option("--output-file", s.output_file, "Write the CSV here instead of stdout");

  auto* convert = app.add_subcommand("convert", "Write a graph as a binary CSR cache");
  add_graph_options(convert, s);
  convert->add_option("--out", s.convert_out, "Output .gfx path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    for (const auto& [cmd, primitive] : commands) {
      if (cmd->parsed()) return run_primitive_command(primitive, s, out);
    }
    if (sweep->parsed()) return run_sweep_command(s, out);
    if (convert->parsed()) return run_convert_command(s);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  }
  return kConfigError;
}

}  // namespace graphfx::cli
