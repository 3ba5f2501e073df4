#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "graphfx/graph/coo_graph.hpp"
#include "graphfx/graph/csr_graph.hpp"

namespace graphfx {

struct BuildOptions {
  /// Add (v,u) for every (u,v); the result is flagged undirected.
  bool make_undirected = false;
  bool remove_self_loops = false;
  /// Parallel edges collapse into one; the smallest weight survives.
  bool remove_duplicates = true;
};

/// Canonical options for undirected datasets: symmetrized, no self-loops,
/// no duplicates.
inline constexpr BuildOptions kUndirected{true, true, true};

template <typename Weight>
CsrGraph<Weight> coo_to_csr(const CooGraph<Weight>& coo, const BuildOptions& opts = {}) {
  coo.validate();
  const vertex_t n = coo.num_vertices;
  const bool weighted = coo.weighted();

  struct Entry {
    vertex_t u, v;
    Weight w;
  };
  std::vector<Entry> entries;
  entries.reserve(coo.num_edges() * (opts.make_undirected ? 2 : 1));
  for (std::size_t i = 0; i < coo.num_edges(); ++i) {
    const vertex_t u = coo.src[i];
    const vertex_t v = coo.dst[i];
    if (opts.remove_self_loops && u == v) continue;
    const Weight w = weighted ? coo.weights[i] : Weight{1};
    entries.push_back({u, v, w});
    if (opts.make_undirected && u != v) entries.push_back({v, u, w});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.w < b.w;
  });
  if (opts.remove_duplicates) {
    auto last = std::unique(entries.begin(), entries.end(),
                            [](const Entry& a, const Entry& b) {
                              return a.u == b.u && a.v == b.v;
                            });
    entries.erase(last, entries.end());
  }

  std::vector<edge_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  std::vector<vertex_t> cols(entries.size());
  std::vector<Weight> weights(weighted ? entries.size() : 0);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    ++offsets[entries[i].u + 1];
    cols[i] = entries[i].v;
    if (weighted) weights[i] = entries[i].w;
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  return CsrGraph<Weight>(std::move(offsets), std::move(cols), std::move(weights),
                          opts.make_undirected);
}

template <typename Weight>
CooGraph<Weight> csr_to_coo(const CsrGraph<Weight>& g) {
  CooGraph<Weight> coo;
  coo.num_vertices = g.num_vertices();
  coo.src.reserve(g.num_edges());
  coo.dst.assign(g.column_indices().begin(), g.column_indices().end());
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    coo.src.insert(coo.src.end(), g.degree(v), v);
  }
  coo.weights.assign(g.edge_weights().begin(), g.edge_weights().end());
  return coo;
}

/// The transpose (CSC viewed as CSR): in-neighbors become out-neighbors.
/// Weights follow their edges. transpose(transpose(g)) == g.
template <typename Weight>
CsrGraph<Weight> csr_to_csc(const CsrGraph<Weight>& g) {
  const auto& r = g.reverse();
  std::vector<Weight> weights;
  if (g.weighted()) {
    weights.resize(g.num_edges());
    for (edge_t i = 0; i < g.num_edges(); ++i) weights[i] = g.weight(r.edge_ids[i]);
  }
  return CsrGraph<Weight>(r.offsets, r.sources, std::move(weights), g.undirected());
}

}  // namespace graphfx
