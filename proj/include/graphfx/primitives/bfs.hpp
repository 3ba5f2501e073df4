#pragma once

#include <algorithm>
#include <vector>

#include "graphfx/primitives/common.hpp"
#include "graphfx/traversal/direction.hpp"

namespace graphfx {

struct BfsOptions {
  /// Discover vertices with plain reads/writes instead of compare-and-set;
  /// duplicates are then culled by the inexact filter.
  bool idempotent = false;
  Direction direction = Direction::Push;
  DirectionConfig direction_config;
  LoadBalanceConfig lb;
};

struct BfsResult {
  /// Hop distance from the source; unvisited<depth_t>() when unreachable.
  std::vector<depth_t> labels;
  /// A BFS-tree parent per reached vertex; kInvalidVertex for the source and
  /// for unreachable vertices.
  std::vector<vertex_t> preds;
  RunStats stats;
};

/// Level-synchronous BFS: each iteration is an advance that labels newly
/// discovered vertices followed by a filter; with direction = Auto the push
/// or pull decision is re-evaluated every iteration.
template <typename Weight>
BfsResult bfs(const CsrGraph<Weight>& g, vertex_t source, const BfsOptions& opts = {}) {
  detail::check_source(g, source);
  const vertex_t n = g.num_vertices();
  BfsResult r;
  r.labels.assign(n, unvisited<depth_t>());
  r.preds.assign(n, kInvalidVertex);
  auto& labels = r.labels;
  auto& preds = r.preds;

  if (opts.direction != Direction::Push) {
    Timer prep;
    g.reverse();
    r.stats.preprocessing_ms = prep.elapsed_ms();
  }

  Timer total;
  labels[source] = 0;
  VertexFrontier active{source};
  VertexFrontier unvisited_frontier;
  TraversalMode mode = TraversalMode::Push;
  double n_u = n;
  const auto adv = detail::advance_options(opts.lb, opts.idempotent);
  const auto filter_mode = opts.idempotent ? FilterMode::inexact() : FilterMode::exact();

  for (depth_t depth = 0; !active.empty(); ++depth) {
    Timer step;
    IterationStats it;
    it.iteration = depth;
    it.frontier_in = active.size();
    n_u = std::max(0.0, n_u - static_cast<double>(active.size()));

    TraversalMode next_mode = TraversalMode::Push;
    if (opts.direction == Direction::Auto) {
      DirectionState state{mode,
                           n_u,
                           static_cast<double>(active.size()),
                           static_cast<double>(g.num_edges()),
                           static_cast<double>(n),
                           opts.direction_config.do_a,
                           opts.direction_config.do_b};
      next_mode = decide_direction(state, opts.direction_config.estimate);
      it.unvisited_estimate = n_u;
    } else if (opts.direction == Direction::Pull && depth > 0) {
      next_mode = TraversalMode::Pull;
    }
    const depth_t next_depth = depth + 1;

    if (next_mode == TraversalMode::Push) {
      auto claim = [&](vertex_t, vertex_t d, edge_t) {
        if (opts.idempotent) return atomic_load(labels[d]) == unvisited<depth_t>();
        return atomic_load(labels[d]) == unvisited<depth_t>() &&
               compare_and_set(labels[d], unvisited<depth_t>(), next_depth);
      };
      auto visit = [&](vertex_t s, vertex_t d, edge_t) {
        if (opts.idempotent) atomic_store(labels[d], next_depth);
        atomic_store(preds[d], s);
      };
      auto functors = make_functors(claim, visit);
      if (resolve_strategy(opts.lb.strategy, g.num_edges(), n, active.size(), opts.lb) ==
          Strategy::LB_CULL) {
        active = advance_filter_fused<AdvanceKind::V2V>(g, active, functors, always_true,
                                                        filter_mode, adv);
      } else {
        auto discovered = advance<AdvanceKind::V2V>(g, active, functors, adv);
        active = filter(discovered, always_true, filter_mode);
      }
    } else {
      if (mode == TraversalMode::Push) {
        unvisited_frontier = generate_unvisited_frontier(std::span<const depth_t>(labels));
      }
      auto visited_parent = [&](vertex_t u, vertex_t, edge_t) {
        return atomic_load(labels[u]) <= depth;
      };
      auto visit = [&](vertex_t u, vertex_t v, edge_t) {
        atomic_store(labels[v], next_depth);
        atomic_store(preds[v], u);
      };
      auto step_result = pull_step(g, unvisited_frontier, make_functors(visited_parent, visit));
      active = std::move(step_result.active);
      unvisited_frontier = std::move(step_result.unvisited);
    }
    if (next_mode != mode) ++r.stats.direction_switches;
    mode = next_mode;

    it.mode = next_mode;
    it.frontier_out = active.size();
    it.runtime_ms = step.elapsed_ms();
    r.stats.per_iteration.push_back(it);
  }
  r.stats.total_runtime_ms = total.elapsed_ms();
  r.stats.iterations = r.stats.per_iteration.size();
  r.stats.edges_traversed = detail::reached_edges(g, labels);
  r.stats.mteps = compute_mteps(Primitive::BFS, r.stats.edges_traversed, r.stats.total_runtime_ms);
  return r;
}

}  // namespace graphfx
