#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "graphfx/primitives/common.hpp"
#include "graphfx/queue/near_far.hpp"

namespace graphfx {

template <typename Weight>
struct SsspOptions {
  using distance_type = distance_for_t<Weight>;

  LoadBalanceConfig lb;
  /// Split each output frontier into near/far slices (delta-stepping).
  bool use_priority_queue = true;
  /// Bucket width; defaults to ceil(32 * mean edge weight).
  std::optional<distance_type> delta;
  /// Recompute predecessors after convergence so that every pred lies on a
  /// shortest path (racing relaxations can leave stale ones).
  bool mark_predecessors = true;
};

template <typename Weight>
struct SsspResult {
  std::vector<distance_for_t<Weight>> labels;
  std::vector<vertex_t> preds;
  RunStats stats;
};

template <typename Weight>
distance_for_t<Weight> default_delta(const CsrGraph<Weight>& g) {
  using D = distance_for_t<Weight>;
  if (g.num_edges() == 0) return D{1};
  double sum = 0;
  for (edge_t e = 0; e < g.num_edges(); ++e) sum += static_cast<double>(g.weight(e));
  const double delta = std::ceil(32.0 * sum / static_cast<double>(g.num_edges()));
  return std::max<D>(D{1}, static_cast<D>(delta));
}

/// Frontier SSSP: advance relaxes edges with atomic-min and stamps improved
/// vertices with the iteration's queue id, the filter keeps one copy of each
/// stamped vertex, and the near/far pile postpones distant vertices.
template <typename Weight>
SsspResult<Weight> sssp(const CsrGraph<Weight>& g, vertex_t source,
                        const SsspOptions<Weight>& opts = {}) {
  using D = distance_for_t<Weight>;
  detail::check_source(g, source);
  if constexpr (!std::is_integral_v<Weight>) {
    for (auto w : g.edge_weights()) {
      if (w < Weight{0}) throw DataError("sssp: negative edge weight");
    }
  }
  const vertex_t n = g.num_vertices();
  SsspResult<Weight> r;
  r.labels.assign(n, unvisited<D>());
  r.preds.assign(n, kInvalidVertex);
  auto& labels = r.labels;
  auto& preds = r.preds;
  std::vector<std::uint64_t> queue_ids(n, 0);

  const D delta = opts.delta ? *opts.delta : default_delta(g);
  if (!(delta > D{0})) throw ConfigError("sssp: delta must be positive");
  const auto adv = detail::advance_options(opts.lb);
  auto key = [&](vertex_t v) { return atomic_load(labels[v]); };

  Timer total;
  labels[source] = D{0};
  NearFarPile<D> pile(delta, delta);
  VertexFrontier frontier{source};
  std::uint64_t queue_id = 0;

  while (true) {
    if (frontier.empty()) {
      if (!opts.use_priority_queue) break;
      while (pile.near().empty() && !pile.far().empty()) pile.advance_bucket(key);
      if (pile.near().empty()) break;
      frontier = std::move(pile.near());
      pile.near().clear();
    }
    Timer step;
    IterationStats it;
    it.iteration = r.stats.per_iteration.size();
    it.frontier_in = frontier.size();
    ++queue_id;
    const std::uint64_t stamp = 2 * queue_id;

    auto update_label = [&](vertex_t s, vertex_t d, edge_t e) {
      const D candidate = atomic_load(labels[s]) + static_cast<D>(g.weight(e));
      return candidate < atomic_min(labels[d], candidate);
    };
    auto set_pred = [&](vertex_t s, vertex_t d, edge_t) {
      atomic_store(preds[d], s);
      atomic_store(queue_ids[d], stamp);
    };
    // The first copy of a stamped vertex claims it; later copies are redundant.
    auto remove_redundant = [&](vertex_t v) {
      return compare_and_set(queue_ids[v], stamp, stamp + 1);
    };
    auto functors = make_functors(update_label, set_pred);
    VertexFrontier next;
    if (resolve_strategy(opts.lb.strategy, g.num_edges(), n, frontier.size(), opts.lb) ==
        Strategy::LB_CULL) {
      next = advance_filter_fused<AdvanceKind::V2V>(g, frontier, functors, remove_redundant,
                                                    FilterMode::exact(), adv);
    } else {
      next = filter(advance<AdvanceKind::V2V>(g, frontier, functors, adv), remove_redundant);
    }
    if (opts.use_priority_queue) {
      pile.split_into(next, key);
      frontier = std::move(pile.near());
      pile.near().clear();
    } else {
      frontier = std::move(next);
    }
    it.frontier_out = frontier.size();
    it.runtime_ms = step.elapsed_ms();
    r.stats.per_iteration.push_back(it);
  }

  if (opts.mark_predecessors) {
    std::fill(preds.begin(), preds.end(), kInvalidVertex);
    auto on_shortest_path = [&](vertex_t s, vertex_t d, edge_t e) {
      const D ds = labels[s];
      return d != source && ds != unvisited<D>() &&
             ds + static_cast<D>(g.weight(e)) == labels[d];
    };
    auto mark = [&](vertex_t s, vertex_t d, edge_t) {
      compare_and_set(preds[d], kInvalidVertex, s);
    };
    advance<AdvanceKind::V2V>(g, all_vertices(n), make_functors(on_shortest_path, mark), adv);
  }

  r.stats.total_runtime_ms = total.elapsed_ms();
  r.stats.iterations = r.stats.per_iteration.size();
  r.stats.edges_traversed = detail::reached_edges(g, labels);
  r.stats.mteps = compute_mteps(Primitive::SSSP, r.stats.edges_traversed, r.stats.total_runtime_ms);
  return r;
}

}  // namespace graphfx
