#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "graphfx/operators/intersect.hpp"
#include "graphfx/primitives/common.hpp"

namespace graphfx {

struct TcOptions {
  LoadBalanceConfig lb;
  IntersectOptions intersect{64, false};
};

struct TcResult {
  std::uint64_t total_triangles = 0;
  /// Orientation of the input: one directed edge per undirected edge,
  /// pointing from the higher-degree endpoint to the lower-degree one.
  CsrGraph<weight_t> oriented;
  /// Triangles closed by each oriented edge, indexed by oriented edge id.
  std::vector<edge_t> per_edge_counts;
  RunStats stats;
};

/// True when (u, v) keeps its direction: u has the larger degree, ties going
/// to the smaller vertex id.
template <typename Weight>
bool orient_forward(const CsrGraph<Weight>& g, vertex_t u, vertex_t v) {
  const edge_t du = g.degree(u), dv = g.degree(v);
  return du > dv || (du == dv && u < v);
}

/// Keeps one direction of every undirected edge (an advance over all
/// vertices producing an edge frontier). The result has exactly m/2 edges.
template <typename Weight>
CsrGraph<weight_t> orient_by_degree(const CsrGraph<Weight>& g, const LoadBalanceConfig& lb = {}) {
  if (!g.undirected()) throw DataError("tc: requires an undirected graph");
  const vertex_t n = g.num_vertices();
  auto keep = [&](vertex_t u, vertex_t v, edge_t) { return orient_forward(g, u, v); };
  auto kept = advance<AdvanceKind::V2E>(g, all_vertices(n), make_functors(keep),
                                        detail::advance_options(lb));
  auto& ids = kept.storage();
  std::sort(ids.begin(), ids.end());
  const auto srcs = g.edge_sources();
  std::vector<edge_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  std::vector<vertex_t> cols(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    ++offsets[srcs[ids[i]] + 1];
    cols[i] = g.edge_dst(ids[i]);
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  return CsrGraph<weight_t>(std::move(offsets), std::move(cols));
}

/// Triangle counting: orient, then intersect the oriented neighbor lists of
/// both endpoints of every oriented edge. Each triangle is counted once.
template <typename Weight>
TcResult tc(const CsrGraph<Weight>& g, const TcOptions& opts = {}) {
  if (!g.undirected()) throw DataError("tc: requires an undirected graph");
  TcResult r;
  {
    Timer prep;
    g.edge_sources();
    r.oriented = orient_by_degree(g, opts.lb);
    r.oriented.edge_sources();
    r.stats.preprocessing_ms = prep.elapsed_ms();
  }
  Timer total;
  const EdgeFrontier edges = all_edges(r.oriented.num_edges());
  auto result = segmented_intersect(r.oriented, edges, opts.intersect);
  r.total_triangles = result.total;
  r.per_edge_counts = std::move(result.counts);
  r.stats.total_runtime_ms = total.elapsed_ms();
  r.stats.iterations = 1;
  r.stats.per_iteration.push_back({0, edges.size(), 0, TraversalMode::Push,
                                   r.stats.total_runtime_ms, std::nullopt});
  r.stats.edges_traversed = g.num_edges();
  r.stats.mteps = compute_mteps(Primitive::TC, r.stats.edges_traversed, r.stats.total_runtime_ms);
  return r;
}

}  // namespace graphfx
