#pragma once

#include <cmath>
#include <vector>

#include "graphfx/primitives/common.hpp"

namespace graphfx {

struct PagerankOptions {
  double damping = 0.85;
  /// Per-vertex absolute change below which a vertex counts as converged.
  double epsilon = 1e-6;
  std::size_t max_iters = 100;
  LoadBalanceConfig lb;
  /// Reduce per-edge contributions in a fixed order (bitwise reproducible)
  /// instead of atomic adds.
  bool deterministic_reduction = true;
};

struct PagerankResult {
  std::vector<double> rank;
  RunStats stats;
};

/// PageRank. Ranks start uniform with every vertex in the frontier. Each
/// iteration advances over all vertices to scatter rank[u] / outdeg(u) to
/// neighbors, adds the teleport and the uniformly spread dangling mass, then
/// filters converged vertices out of the frontier. Stops when the frontier is
/// empty or after max_iters iterations. Every iteration is one synchronous
/// power-iteration step.
template <typename Weight>
PagerankResult pagerank(const CsrGraph<Weight>& g, const PagerankOptions& opts = {}) {
  if (!(opts.damping > 0.0 && opts.damping < 1.0)) {
    throw ConfigError("pagerank: damping must lie in (0, 1)");
  }
  if (!(opts.epsilon > 0.0)) throw ConfigError("pagerank: epsilon must be positive");
  const vertex_t n = g.num_vertices();
  PagerankResult r;
  if (n == 0) return r;

  if (opts.deterministic_reduction) {
    Timer prep;
    g.reverse();
    r.stats.preprocessing_ms = prep.elapsed_ms();
  }
  const auto adv = detail::advance_options(opts.lb);
  const double inv_n = 1.0 / n;
  std::vector<double> rank(n, inv_n);
  std::vector<double> next(n, 0.0);
  std::vector<double> contrib(opts.deterministic_reduction ? g.num_edges() : 0);
  const VertexFrontier everyone = all_vertices(n);
  VertexFrontier active = everyone;

  Timer total;
  while (!active.empty() && r.stats.per_iteration.size() < opts.max_iters) {
    Timer step;
    IterationStats it;
    it.iteration = r.stats.per_iteration.size();
    it.frontier_in = active.size();

    double dangling = 0.0;
    for (vertex_t v = 0; v < n; ++v) {
      if (g.degree(v) == 0) dangling += rank[v];
    }
    std::fill(next.begin(), next.end(), 0.0);
    if (opts.deterministic_reduction) {
      auto scatter = [&](vertex_t u, vertex_t, edge_t e) {
        contrib[e] = rank[u] / static_cast<double>(g.degree(u));
        return false;
      };
      advance<AdvanceKind::V2V>(g, everyone, make_functors(scatter), adv);
      const auto& rev = g.reverse();
      compute(everyone, [&](vertex_t v) {
        double sum = 0.0;
        for (edge_t k = rev.offsets[v]; k < rev.offsets[v + 1]; ++k) sum += contrib[rev.edge_ids[k]];
        next[v] = sum;
      });
    } else {
      auto scatter = [&](vertex_t u, vertex_t d, edge_t) {
        atomic_add(next[d], rank[u] / static_cast<double>(g.degree(u)));
        return false;
      };
      advance<AdvanceKind::V2V>(g, everyone, make_functors(scatter), adv);
    }
    const double base = (1.0 - opts.damping) * inv_n + opts.damping * dangling * inv_n;
    compute(everyone, [&](vertex_t v) { next[v] = base + opts.damping * next[v]; });
    active = filter(active, [&](vertex_t v) { return std::abs(next[v] - rank[v]) >= opts.epsilon; });
    rank.swap(next);

    r.stats.edges_traversed += g.num_edges();
    it.frontier_out = active.size();
    it.runtime_ms = step.elapsed_ms();
    r.stats.per_iteration.push_back(it);
  }
  r.stats.total_runtime_ms = total.elapsed_ms();
  r.stats.iterations = r.stats.per_iteration.size();
  r.stats.mteps =
      compute_mteps(Primitive::PageRank, r.stats.edges_traversed, r.stats.total_runtime_ms);
  r.rank = std::move(rank);
  return r;
}

}  // namespace graphfx
