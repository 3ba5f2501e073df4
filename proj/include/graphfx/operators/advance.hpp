#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

#include "graphfx/detail/parallel.hpp"
#include "graphfx/frontier/frontier.hpp"
#include "graphfx/graph/csr_graph.hpp"
#include "graphfx/load_balance/plan.hpp"
#include "graphfx/operators/filter.hpp"
#include "graphfx/operators/functors.hpp"

namespace graphfx {

enum class AdvanceKind { V2V, V2E, E2V, E2E };

template <AdvanceKind K>
inline constexpr FrontierKind input_kind_v =
    (K == AdvanceKind::V2V || K == AdvanceKind::V2E) ? FrontierKind::Vertex : FrontierKind::Edge;

template <AdvanceKind K>
inline constexpr FrontierKind output_kind_v =
    (K == AdvanceKind::V2V || K == AdvanceKind::E2V) ? FrontierKind::Vertex : FrontierKind::Edge;

struct AdvanceOptions {
  LoadBalanceConfig lb;
  /// The functors tolerate repeated application (plain writes, no atomics),
  /// so concurrent discoveries may put duplicates into the output.
  /// Primitives pair this with inexact filtering.
  bool idempotent = false;
};

/// What an advance call actually did.
struct AdvanceReport {
  Strategy strategy = Strategy::Auto;
  /// Neighbor-list slots inspected (the scan total).
  edge_t edges_visited = 0;
};

namespace detail {

template <FrontierKind OutKind>
typename Frontier<OutKind>::id_type output_id(vertex_t dst, edge_t e) {
  if constexpr (OutKind == FrontierKind::Vertex) {
    return dst;
  } else {
    return e;
  }
}

/// Per-worker output buffers drained into a shared array through an atomic
/// cursor.
template <typename Id>
class CursorWriter {
 public:
  CursorWriter(std::size_t capacity, int workers)
      : out_(capacity), buffers_(static_cast<std::size_t>(workers)) {}

  void push(Id id) {
    auto& buf = buffers_[static_cast<std::size_t>(worker_id())];
    buf.push_back(id);
    if (buf.size() >= kFlushSize) flush(buf);
  }

  std::vector<Id> finish() && {
    for (auto& buf : buffers_) flush(buf);
    out_.resize(cursor_.load());
    return std::move(out_);
  }

 private:
  static constexpr std::size_t kFlushSize = 1024;

  void flush(std::vector<Id>& buf) {
    if (buf.empty()) return;
    const std::size_t at = cursor_.fetch_add(buf.size(), std::memory_order_relaxed);
    std::copy(buf.begin(), buf.end(), out_.begin() + static_cast<std::ptrdiff_t>(at));
    buf.clear();
  }

  std::vector<Id> out_;
  std::vector<std::vector<Id>> buffers_;
  std::atomic<std::size_t> cursor_{0};
};

/// Culling stage of the fused advance+filter. Exact claims ids in a bitmap;
/// inexact uses the global mask and a per-worker history table.
template <typename Id>
class FusedCuller {
 public:
  FusedCuller(const FilterMode& mode, std::size_t id_bound, int workers) : mode_(mode) {
    if (mode.kind == FilterMode::Kind::Exact) {
      claimed_.emplace(id_bound);
    } else {
      if (mode.global_bitmask) mask_.emplace(id_bound);
      for (int w = 0; w < workers; ++w) tables_.emplace_back(mode.team_history);
    }
  }

  template <typename Cond>
  bool admit(Id id, Cond& cond) {
    if (claimed_) return claimed_->set(id) && cond(id);
    auto& table = tables_[static_cast<std::size_t>(worker_id())];
    if (mask_ && mask_->seen(id)) return false;
    if (table.enabled() && table.contains(id)) return false;
    if (!cond(id)) return false;
    if (table.enabled()) table.insert(id);
    if (mask_) mask_->mark(id);
    return true;
  }

 private:
  FilterMode mode_;
  std::optional<StatusBitmap> claimed_;
  std::optional<CullingMask> mask_;
  std::vector<HistoryTable<Id>> tables_;
};

template <AdvanceKind K, typename Weight, typename Emit>
void run_advance(const CsrGraph<Weight>& g, const Frontier<input_kind_v<K>>& in,
                 const LoadBalancePlan& plan, Emit&& emit) {
  constexpr auto InKind = input_kind_v<K>;
  const auto cols = g.column_indices();
  const auto items = in.items();
  execute_plan(plan, [&](std::size_t i, edge_t k, edge_t slot) {
    const vertex_t src = expansion_vertex<Weight, InKind>(g, items[i]);
    const edge_t e = g.first_edge(src) + k;
    const vertex_t dst = cols[e];
    emit(slot, src, dst, e);
  });
}

}  // namespace detail

/// Expands every item of `in` to its neighbor list and keeps the images of
/// the (src, dst, edge) triples accepted by functors.cond; functors.apply
/// runs once per accepted triple. Vertex inputs expand their own list, edge
/// inputs the list of their destination. Output order is unspecified.
template <AdvanceKind K, typename Weight, EdgeFunctorSet F>
Frontier<output_kind_v<K>> advance(const CsrGraph<Weight>& g,
                                   const Frontier<input_kind_v<K>>& in, F&& functors,
                                   const AdvanceOptions& opts = {},
                                   AdvanceReport* report = nullptr) {
  constexpr auto OutKind = output_kind_v<K>;
  using OutId = typename Frontier<OutKind>::id_type;
  const auto scan = compute_scan_offsets(g, in);
  const Strategy strategy =
      resolve_strategy(opts.lb.strategy, g.num_edges(), g.num_vertices(), in.size(), opts.lb);
  const auto plan = make_plan(strategy, scan, opts.lb);
  if (report) *report = {strategy, scan.total};

  if (strategy == Strategy::LB_CULL) {
    detail::CursorWriter<OutId> writer(scan.total, detail::worker_count());
    detail::run_advance<K>(g, in, plan,
                           [&](edge_t, vertex_t src, vertex_t dst, edge_t e) {
                             if (functors.cond(src, dst, e)) {
                               functors.apply(src, dst, e);
                               writer.push(detail::output_id<OutKind>(dst, e));
                             }
                           });
    return Frontier<OutKind>(std::move(writer).finish());
  }

  // Outputs land at their exact scan offsets; rejected slots are compacted away.
  // Only kept slots are written and only kept slots are read back.
  auto slots = std::make_unique_for_overwrite<OutId[]>(scan.total);
  std::vector<std::uint8_t> keep(scan.total, 0);
  detail::run_advance<K>(g, in, plan,
                         [&](edge_t slot, vertex_t src, vertex_t dst, edge_t e) {
                           if (functors.cond(src, dst, e)) {
                             functors.apply(src, dst, e);
                             slots[slot] = detail::output_id<OutKind>(dst, e);
                             keep[slot] = 1;
                           }
                         });
  return Frontier<OutKind>(detail::compact<OutId>(std::span<const OutId>(slots.get(), scan.total), keep));
}

/// Advance and filter in one pass (the LB_CULL path): the intermediate
/// frontier is never materialized. Observationally equal, as a set of output
/// items and applied effects, to filter(advance(...)).
template <AdvanceKind K, typename Weight, EdgeFunctorSet F, typename Cond>
Frontier<output_kind_v<K>> advance_filter_fused(const CsrGraph<Weight>& g,
                                                const Frontier<input_kind_v<K>>& in,
                                                F&& functors, Cond&& filter_cond,
                                                const FilterMode& mode,
                                                const AdvanceOptions& opts = {},
                                                AdvanceReport* report = nullptr) {
  constexpr auto OutKind = output_kind_v<K>;
  using OutId = typename Frontier<OutKind>::id_type;
  const auto scan = compute_scan_offsets(g, in);
  auto lb = opts.lb;
  lb.strategy = Strategy::LB_CULL;
  const auto plan = make_plan(Strategy::LB_CULL, scan, lb);
  if (report) *report = {Strategy::LB_CULL, scan.total};

  const std::size_t bound =
      OutKind == FrontierKind::Vertex ? g.num_vertices() : static_cast<std::size_t>(g.num_edges());
  const int workers = detail::worker_count();
  detail::FusedCuller<OutId> culler(mode, bound, workers);
  detail::CursorWriter<OutId> writer(scan.total, workers);
  detail::run_advance<K>(g, in, plan,
                         [&](edge_t, vertex_t src, vertex_t dst, edge_t e) {
                           if (!functors.cond(src, dst, e)) return;
                           functors.apply(src, dst, e);
                           const OutId id = detail::output_id<OutKind>(dst, e);
                           if (culler.admit(id, filter_cond)) writer.push(id);
                         });
  return Frontier<OutKind>(std::move(writer).finish());
}

/// Result of a pull-direction advance.
struct PullResult {
  VertexFrontier active;
  VertexFrontier unvisited;
};

/// Pull-direction advance over an unvisited-vertex frontier. For each
/// unvisited v, scans in-neighbors u until cond(u, v, edge) holds; then
/// apply runs once and v joins `active`, otherwise v stays `unvisited`.
/// Builds the reverse adjacency on first use.
template <typename Weight, EdgeFunctorSet F>
PullResult advance_pull(const CsrGraph<Weight>& g, const VertexFrontier& unvisited,
                        F&& functors, AdvanceReport* report = nullptr) {
  const auto& rev = g.reverse();
  const auto items = unvisited.items();
  const std::size_t n = items.size();
  std::vector<std::uint8_t> found(n, 0);
  std::vector<edge_t> scanned(n, 0);
  detail::parallel_for(
      0, n,
      [&](std::size_t i) {
        const vertex_t v = items[i];
        for (edge_t k = rev.offsets[v]; k < rev.offsets[v + 1]; ++k) {
          ++scanned[i];
          const vertex_t u = rev.sources[k];
          const edge_t e = rev.edge_ids[k];
          if (functors.cond(u, v, e)) {
            functors.apply(u, v, e);
            found[i] = 1;
            break;
          }
        }
      },
      detail::Schedule::Dynamic, 64);
  std::vector<std::uint8_t> missing(n);
  for (std::size_t i = 0; i < n; ++i) missing[i] = !found[i];
  if (report) {
    edge_t total = 0;
    for (auto s : scanned) total += s;
    *report = {Strategy::Auto, total};
  }
  return {VertexFrontier(detail::compact<vertex_t>(items, found)),
          VertexFrontier(detail::compact<vertex_t>(items, missing))};
}

}  // namespace graphfx
