#pragma once

#include <algorithm>
#include <cassert>
#include <span>
#include <stdexcept>
#include <vector>

#include "graphfx/detail/parallel.hpp"
#include "graphfx/frontier/frontier.hpp"
#include "graphfx/graph/csr_graph.hpp"

namespace graphfx {

struct IntersectOptions {
  /// Pairs whose lists are both shorter than this use a linear merge
  /// (TwoSmall); the rest binary-search the shorter list's elements in the
  /// longer one (SmallLarge).
  edge_t small_large_cut = 64;
  /// Materialize the intersected ids, not just the counts.
  bool emit_ids = true;
};

struct IntersectionResult {
  /// Concatenated intersection sets, one segment per pair in pair order.
  VertexFrontier intersections;
  std::vector<edge_t> counts;
  /// Segment i is intersections[offsets[i] .. offsets[i+1]).
  std::vector<edge_t> offsets;
  std::uint64_t total = 0;
};

namespace detail {

template <typename Out>
edge_t merge_intersect(std::span<const vertex_t> a, std::span<const vertex_t> b, Out out) {
  edge_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      out(a[i]);
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

template <typename Out>
edge_t search_intersect(std::span<const vertex_t> small, std::span<const vertex_t> large,
                        Out out) {
  edge_t count = 0;
  auto lo = large.begin();
  for (auto x : small) {
    lo = std::lower_bound(lo, large.end(), x);
    if (lo == large.end()) break;
    if (*lo == x) {
      out(x);
      ++count;
    }
  }
  return count;
}

template <typename Out>
edge_t intersect_lists(std::span<const vertex_t> a, std::span<const vertex_t> b, edge_t cut,
                       Out out) {
  if (a.size() < cut && b.size() < cut) return merge_intersect(a, b, out);
  return a.size() <= b.size() ? search_intersect(a, b, out) : search_intersect(b, a, out);
}

}  // namespace detail

/// For each pair i, intersects the neighbor lists of lhs[i] and rhs[i].
/// Requires sorted neighbor lists.
template <typename Weight>
IntersectionResult segmented_intersect(const CsrGraph<Weight>& g, std::span<const vertex_t> lhs,
                                       std::span<const vertex_t> rhs,
                                       const IntersectOptions& opts = {}) {
  if (lhs.size() != rhs.size()) {
    throw std::invalid_argument("segmented_intersect: frontiers must have equal length");
  }
  assert(g.neighbors_sorted() && "segmented_intersect requires sorted adjacency");
  const std::size_t pairs = lhs.size();
  IntersectionResult r;
  r.counts.resize(pairs);
  detail::parallel_for(
      0, pairs,
      [&](std::size_t i) {
        r.counts[i] = detail::intersect_lists(g.neighbors(lhs[i]), g.neighbors(rhs[i]),
                                              opts.small_large_cut, [](vertex_t) {});
      },
      detail::Schedule::Dynamic, 64);
  r.offsets.resize(pairs + 1);
  r.total = detail::exclusive_scan<edge_t, edge_t>(r.counts, std::span<edge_t>(r.offsets));
  if (opts.emit_ids) {
    auto& ids = r.intersections.storage();
    ids.resize(r.total);
    detail::parallel_for(
        0, pairs,
        [&](std::size_t i) {
          if (r.counts[i] == 0) return;
          edge_t at = r.offsets[i];
          detail::intersect_lists(g.neighbors(lhs[i]), g.neighbors(rhs[i]),
                                  opts.small_large_cut, [&](vertex_t x) { ids[at++] = x; });
        },
        detail::Schedule::Dynamic, 64);
  }
  return r;
}

template <typename Weight>
IntersectionResult segmented_intersect(const CsrGraph<Weight>& g, const VertexFrontier& lhs,
                                       const VertexFrontier& rhs,
                                       const IntersectOptions& opts = {}) {
  return segmented_intersect(g, lhs.items(), rhs.items(), opts);
}

/// Edge frontier form: each edge's (source, destination) is a pair.
template <typename Weight>
IntersectionResult segmented_intersect(const CsrGraph<Weight>& g, const EdgeFrontier& edges,
                                       const IntersectOptions& opts = {}) {
  std::vector<vertex_t> lhs(edges.size()), rhs(edges.size());
  const auto srcs = g.edge_sources();
  detail::parallel_for(0, edges.size(), [&](std::size_t i) {
    lhs[i] = srcs[edges[i]];
    rhs[i] = g.edge_dst(edges[i]);
  });
  return segmented_intersect(g, std::span<const vertex_t>(lhs), std::span<const vertex_t>(rhs),
                             opts);
}

}  // namespace graphfx
