#pragma once

#include <vector>

#include "graphfx/primitives/common.hpp"

namespace graphfx {

struct CcOptions {
  LoadBalanceConfig lb;
};

struct CcResult {
  /// Component id per vertex; the id is a vertex of that component.
  std::vector<vertex_t> component;
  std::size_t num_components = 0;
  RunStats stats;
};

/// Connected components by hooking and pointer jumping.
///
/// The edge frontier starts as every edge (u, v) with u < v. A hooking pass
/// is a filter over it: edges whose endpoints already agree are dropped,
/// the others hook one component id onto the other (odd passes write the
/// lower id into the higher one, even passes the reverse). Pointer jumping
/// then flattens every tree to a star with a vertex filter that keeps
/// jumping vertices until none moves. The two alternate until the edge
/// frontier is empty.
template <typename Weight>
CcResult cc(const CsrGraph<Weight>& g, const CcOptions& opts = {}) {
  if (!g.undirected()) throw DataError("cc: requires an undirected graph");
  const vertex_t n = g.num_vertices();
  CcResult r;
  auto& comp = r.component;
  comp.resize(n);
  for (vertex_t v = 0; v < n; ++v) comp[v] = v;
  {
    Timer prep;
    g.edge_sources();
    r.stats.preprocessing_ms = prep.elapsed_ms();
  }
  const auto srcs = g.edge_sources();

  Timer total;
  auto lower_to_upper = [](vertex_t u, vertex_t v, edge_t) { return u < v; };
  EdgeFrontier edges = advance<AdvanceKind::V2E>(g, all_vertices(n), make_functors(lower_to_upper),
                                                 detail::advance_options(opts.lb));

  for (std::size_t pass = 1; !edges.empty(); ++pass) {
    Timer step;
    IterationStats it;
    it.iteration = pass - 1;
    it.frontier_in = edges.size();
    const bool odd = pass % 2 == 1;
    auto hook = [&](edge_t e) {
      const vertex_t cu = atomic_load(comp[srcs[e]]);
      const vertex_t cv = atomic_load(comp[g.edge_dst(e)]);
      if (cu == cv) return false;
      const vertex_t lo = std::min(cu, cv);
      const vertex_t hi = std::max(cu, cv);
      if (odd) {
        atomic_store(comp[hi], lo);
      } else {
        atomic_store(comp[lo], hi);
      }
      return true;
    };
    edges = filter(edges, hook);

    auto not_root = [&](vertex_t v) { return atomic_load(comp[v]) != v; };
    VertexFrontier jumping = filter(all_vertices(n), not_root);
    auto jump = [&](vertex_t v) {
      const vertex_t parent = atomic_load(comp[v]);
      const vertex_t grandparent = atomic_load(comp[parent]);
      if (parent == grandparent) return false;
      atomic_store(comp[v], grandparent);
      return true;
    };
    while (!jumping.empty()) jumping = filter(jumping, jump);

    it.frontier_out = edges.size();
    it.runtime_ms = step.elapsed_ms();
    r.stats.per_iteration.push_back(it);
  }
  for (vertex_t v = 0; v < n; ++v) r.num_components += comp[v] == v;

  r.stats.total_runtime_ms = total.elapsed_ms();
  r.stats.iterations = r.stats.per_iteration.size();
  r.stats.edges_traversed = g.num_edges();
  r.stats.mteps = compute_mteps(Primitive::CC, r.stats.edges_traversed, r.stats.total_runtime_ms);
  return r;
}

}  // namespace graphfx
