#pragma once

#include <random>
#include <vector>

#include "graphfx/bench/report.hpp"
#include "graphfx/primitives/bc.hpp"
#include "graphfx/primitives/bfs.hpp"
#include "graphfx/primitives/cc.hpp"
#include "graphfx/primitives/pagerank.hpp"
#include "graphfx/primitives/sssp.hpp"
#include "graphfx/primitives/tc.hpp"

namespace graphfx {

struct BenchmarkConfig {
  Primitive primitive = Primitive::BFS;
  std::size_t repetitions = 10;
  /// One untimed run before the measured repetitions.
  bool warmup = true;
  /// Fixed source; when empty a random source is drawn for every run.
  std::optional<vertex_t> source;
  std::uint64_t seed = 1;
  std::string graph_name;
  /// Copied into the options of whichever primitive runs.
  LoadBalanceConfig lb;
  BfsOptions bfs;
  SsspOptions<weight_t> sssp;
  BcOptions bc;
  PagerankOptions pr;
  TcOptions tc;
};

inline bool needs_source(Primitive p) noexcept {
  return p == Primitive::BFS || p == Primitive::SSSP || p == Primitive::BC;
}

/// Uniform random vertex with at least one out-edge, or any vertex when the
/// graph has no edges. Isolated sources make empty runs.
template <typename Weight>
vertex_t random_source(const CsrGraph<Weight>& g, std::mt19937_64& rng) {
  const vertex_t n = g.num_vertices();
  if (n == 0) throw ConfigError("cannot pick a source in an empty graph");
  std::uniform_int_distribution<vertex_t> pick(0, n - 1);
  if (g.num_edges() == 0) return pick(rng);
  for (;;) {
    const vertex_t v = pick(rng);
    if (g.degree(v) > 0) return v;
  }
}

template <typename Weight>
RunStats run_primitive(const CsrGraph<Weight>& g, const BenchmarkConfig& cfg,
                       std::optional<vertex_t> source) {
  switch (cfg.primitive) {
    case Primitive::BFS: {
      auto o = cfg.bfs;
      o.lb = cfg.lb;
      return bfs(g, *source, o).stats;
    }
    case Primitive::SSSP: {
      if constexpr (std::is_same_v<Weight, weight_t>) {
        auto o = cfg.sssp;
        o.lb = cfg.lb;
        return sssp(g, *source, o).stats;
      } else {
        throw ConfigError("sssp benchmark requires integer weights");
      }
    }
    case Primitive::BC: {
      auto o = cfg.bc;
      o.lb = cfg.lb;
      return bc(g, *source, o).stats;
    }
    case Primitive::CC: return cc(g, CcOptions{cfg.lb}).stats;
    case Primitive::PageRank: {
      auto o = cfg.pr;
      o.lb = cfg.lb;
      return pagerank(g, o).stats;
    }
    case Primitive::TC: {
      auto o = cfg.tc;
      o.lb = cfg.lb;
      return tc(g, o).stats;
    }
  }
  throw ConfigError("unknown primitive");
}

/// Warmup plus cfg.repetitions timed runs; reports every run and the means.
/// The mean MTEPS is the mean of per-run values and is absent when any run
/// has none.
template <typename Weight>
BenchmarkReport run_benchmark(const CsrGraph<Weight>& g, const BenchmarkConfig& cfg) {
  if (cfg.repetitions == 0) throw ConfigError("repetitions must be at least 1");
  if (cfg.source) detail::check_source(g, *cfg.source);
  std::mt19937_64 rng(cfg.seed);
  auto next_source = [&]() -> std::optional<vertex_t> {
    if (!needs_source(cfg.primitive)) return std::nullopt;
    if (cfg.source) return cfg.source;
    return random_source(g, rng);
  };

  BenchmarkReport r;
  r.primitive = std::string(to_string(cfg.primitive));
  r.graph = cfg.graph_name;
  r.num_vertices = g.num_vertices();
  r.num_edges = g.num_edges();
  r.strategy = std::string(to_string(cfg.lb.strategy));
  r.direction = cfg.primitive == Primitive::BFS ? std::string(to_string(cfg.bfs.direction))
                                                : std::string("push");
  r.threads = static_cast<std::size_t>(detail::worker_count());
  r.repetitions = cfg.repetitions;

  std::vector<std::optional<vertex_t>> sources(cfg.repetitions);
  for (auto& s : sources) s = next_source();
  if (cfg.warmup) run_primitive(g, cfg, sources.front());

  double mteps_sum = 0;
  bool all_mteps = true;
  for (std::size_t i = 0; i < cfg.repetitions; ++i) {
    RunRecord rec{i, sources[i], run_primitive(g, cfg, sources[i])};
    r.mean_runtime_ms += rec.stats.total_runtime_ms;
    r.mean_preprocessing_ms += rec.stats.preprocessing_ms;
    if (rec.stats.mteps) {
      mteps_sum += *rec.stats.mteps;
    } else {
      all_mteps = false;
    }
    r.runs.push_back(std::move(rec));
  }
  const double reps = static_cast<double>(cfg.repetitions);
  r.mean_runtime_ms /= reps;
  r.mean_preprocessing_ms /= reps;
  if (all_mteps) r.mean_mteps = mteps_sum / reps;
  return r;
}

/// Direction-optimizing BFS over a do_a x do_b grid; every cell averages
/// runs_per_cell BFS runs from random sources. Rows are ordered with do_a
/// as the outer loop.
template <typename Weight>
std::vector<SweepRow> sweep_direction(const CsrGraph<Weight>& g, const std::vector<double>& do_a,
                                      const std::vector<double>& do_b, std::size_t runs_per_cell,
                                      std::uint64_t seed, BfsOptions base = {}) {
  if (runs_per_cell == 0) throw ConfigError("sweep needs at least one run per cell");
  std::vector<SweepRow> rows;
  base.direction = Direction::Auto;
  g.reverse();
  for (double a : do_a) {
    for (double b : do_b) {
      if (!(a > 0) || !(b > 0)) throw ConfigError("do_a and do_b must be positive");
      BenchmarkConfig cfg;
      cfg.primitive = Primitive::BFS;
      cfg.repetitions = runs_per_cell;
      cfg.warmup = false;
      cfg.seed = seed;
      cfg.lb = base.lb;
      cfg.bfs = base;
      cfg.bfs.direction_config.do_a = a;
      cfg.bfs.direction_config.do_b = b;
      const auto report = run_benchmark(g, cfg);
      rows.push_back({a, b, runs_per_cell, report.mean_runtime_ms, report.mean_mteps});
    }
  }
  return rows;
}

}  // namespace graphfx
