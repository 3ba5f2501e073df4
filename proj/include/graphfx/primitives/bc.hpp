#pragma once

#include <span>
#include <vector>

#include "graphfx/primitives/common.hpp"

namespace graphfx {

struct BcOptions {
  LoadBalanceConfig lb;
  /// Accumulate dependencies through per-edge slots reduced in a fixed
  /// order, so results are bitwise reproducible across strategies and
  /// thread counts. When false, contributions are summed with atomic adds.
  bool deterministic_reduction = true;
};

struct BcResult {
  /// Sum over the sources of each vertex's dependency (sources excluded).
  std::vector<double> bc_values;
  /// Shortest-path counts and depths of the last source processed.
  std::vector<double> sigma;
  std::vector<depth_t> labels;
  RunStats stats;
};

/// Betweenness centrality from a set of sources. Per source, a forward
/// BFS-style advance counts shortest paths (sigma) level by level, saving
/// each level's frontier; a backward pass advances over the saved levels in
/// reverse depth order accumulating
///   delta[v] = sum over successors w of sigma[v] / sigma[w] * (1 + delta[w]).
template <typename Weight>
BcResult bc(const CsrGraph<Weight>& g, std::span<const vertex_t> sources,
            const BcOptions& opts = {}) {
  for (auto s : sources) detail::check_source(g, s);
  const vertex_t n = g.num_vertices();
  BcResult r;
  r.bc_values.assign(n, 0.0);
  auto& sigma = r.sigma;
  auto& labels = r.labels;
  std::vector<double> delta(n);
  std::vector<double> contrib(opts.deterministic_reduction ? g.num_edges() : 0);
  const auto adv = detail::advance_options(opts.lb);
  const auto offsets = g.row_offsets();
  const auto cols = g.column_indices();

  Timer total;
  for (const vertex_t source : sources) {
    sigma.assign(n, 0.0);
    labels.assign(n, unvisited<depth_t>());
    std::fill(delta.begin(), delta.end(), 0.0);
    labels[source] = 0;
    sigma[source] = 1.0;

    std::vector<VertexFrontier> levels;
    VertexFrontier frontier{source};
    for (depth_t depth = 0; !frontier.empty(); ++depth) {
      Timer step;
      IterationStats it;
      it.iteration = r.stats.per_iteration.size();
      it.frontier_in = frontier.size();
      const depth_t next_depth = depth + 1;
      // sigma[s] is final: s sits on the current level.
      auto count_paths = [&](vertex_t s, vertex_t d, edge_t) {
        const bool discovered = compare_and_set(labels[d], unvisited<depth_t>(), next_depth);
        if (atomic_load(labels[d]) == next_depth) atomic_add(sigma[d], atomic_load(sigma[s]));
        return discovered;
      };
      auto next = filter(advance<AdvanceKind::V2V>(g, frontier, make_functors(count_paths), adv),
                         always_true);
      levels.push_back(std::move(frontier));
      frontier = std::move(next);
      it.frontier_out = frontier.size();
      it.runtime_ms = step.elapsed_ms();
      r.stats.per_iteration.push_back(it);
    }

    for (auto level = levels.rbegin(); level != levels.rend(); ++level) {
      Timer step;
      IterationStats it;
      it.iteration = r.stats.per_iteration.size();
      it.frontier_in = level->size();
      if (opts.deterministic_reduction) {
        auto dependency = [&](vertex_t v, vertex_t w, edge_t e) {
          if (labels[w] == labels[v] + 1) contrib[e] = sigma[v] / sigma[w] * (1.0 + delta[w]);
          return false;
        };
        advance<AdvanceKind::V2V>(g, *level, make_functors(dependency), adv);
        compute(*level, [&](vertex_t v) {
          double sum = 0.0;
          for (edge_t e = offsets[v]; e < offsets[v + 1]; ++e) {
            if (labels[cols[e]] == labels[v] + 1) sum += contrib[e];
          }
          delta[v] = sum;
        });
      } else {
        auto dependency = [&](vertex_t v, vertex_t w, edge_t) {
          if (labels[w] == labels[v] + 1) {
            atomic_add(delta[v], sigma[v] / sigma[w] * (1.0 + delta[w]));
          }
          return false;
        };
        advance<AdvanceKind::V2V>(g, *level, make_functors(dependency), adv);
      }
      compute(*level, [&](vertex_t v) {
        if (v != source) r.bc_values[v] += delta[v];
      });
      it.runtime_ms = step.elapsed_ms();
      r.stats.per_iteration.push_back(it);
    }
    r.stats.edges_traversed += detail::reached_edges(g, labels);
  }
  r.stats.total_runtime_ms = total.elapsed_ms();
  r.stats.iterations = r.stats.per_iteration.size();
  r.stats.mteps = compute_mteps(Primitive::BC, r.stats.edges_traversed, r.stats.total_runtime_ms);
  return r;
}

template <typename Weight>
BcResult bc(const CsrGraph<Weight>& g, vertex_t source, const BcOptions& opts = {}) {
  const vertex_t sources[] = {source};
  return bc(g, std::span<const vertex_t>(sources), opts);
}

}  // namespace graphfx
