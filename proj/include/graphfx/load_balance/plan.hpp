#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "graphfx/detail/parallel.hpp"
#include "graphfx/frontier/frontier.hpp"
#include "graphfx/graph/csr_graph.hpp"
#include "graphfx/load_balance/strategy.hpp"

namespace graphfx {

/// Exclusive prefix sum of the neighbor-list lengths of a frontier.
/// offsets.size() == |frontier| + 1 and offsets.back() == total.
struct ScanOffsets {
  std::vector<edge_t> offsets{0};
  edge_t total = 0;
};

/// Expansion vertex of a frontier item: the vertex itself, or the far end
/// (destination) of an edge.
template <typename Weight, FrontierKind Kind>
vertex_t expansion_vertex(const CsrGraph<Weight>& g, typename Frontier<Kind>::id_type id) {
  if constexpr (Kind == FrontierKind::Vertex) {
    return id;
  } else {
    return g.edge_dst(id);
  }
}

template <typename Weight, FrontierKind Kind>
ScanOffsets compute_scan_offsets(const CsrGraph<Weight>& g, const Frontier<Kind>& f) {
  const std::size_t n = f.size();
  std::vector<edge_t> degrees(n);
  detail::parallel_for(0, n, [&](std::size_t i) {
    degrees[i] = g.degree(expansion_vertex<Weight, Kind>(g, f[i]));
  });
  ScanOffsets s;
  s.offsets.resize(n + 1);
  s.total = detail::exclusive_scan<edge_t, edge_t>(degrees, std::span<edge_t>(s.offsets));
  return s;
}

enum class ChunkDomain { InputItems, OutputSlots };

/// Team size class of a chunk (TWC); everything else is Single.
enum class WorkClass { FullTeam, SubTeam, Single };

struct WorkChunk {
  /// Half-open range in the plan's domain (input indices or output slots).
  std::size_t begin = 0;
  std::size_t end = 0;
  /// Input index owning the chunk's first work item.
  std::size_t first_source = 0;
  WorkClass work_class = WorkClass::Single;
};

/// A partition of frontier expansion work into chunks. Chunks tile the
/// domain exactly once.
struct LoadBalancePlan {
  Strategy strategy = Strategy::ThreadExpand;
  ChunkDomain domain = ChunkDomain::InputItems;
  std::vector<edge_t> scan_offsets{0};
  edge_t total_output = 0;
  std::vector<WorkChunk> chunks;

  std::size_t input_size() const noexcept { return scan_offsets.size() - 1; }

  /// Output slots [first, last) covered by a chunk.
  std::pair<edge_t, edge_t> output_range(const WorkChunk& c) const noexcept {
    if (domain == ChunkDomain::OutputSlots) return {c.begin, c.end};
    return {scan_offsets[c.begin], scan_offsets[c.end]};
  }

  /// Input item whose neighbor list contains output slot `slot`.
  std::size_t source_of(edge_t slot) const noexcept {
    auto it = std::upper_bound(scan_offsets.begin(), scan_offsets.end(), slot);
    return static_cast<std::size_t>(it - scan_offsets.begin()) - 1;
  }

  /// Sequentially visits every (input index, neighbor index, output slot)
  /// triple of one chunk.
  template <typename Visit>
  void for_each_in_chunk(const WorkChunk& c, Visit&& visit) const {
    if (domain == ChunkDomain::InputItems) {
      for (std::size_t i = c.begin; i < c.end; ++i) {
        const edge_t base = scan_offsets[i];
        const edge_t len = scan_offsets[i + 1] - base;
        for (edge_t k = 0; k < len; ++k) visit(i, k, base + k);
      }
      return;
    }
    std::size_t src = c.first_source;
    for (edge_t slot = c.begin; slot < c.end; ++slot) {
      while (scan_offsets[src + 1] <= slot) ++src;  // skips empty lists too
      visit(src, slot - scan_offsets[src], slot);
    }
  }
};

inline LoadBalancePlan plan_thread_expand(const ScanOffsets& scan) {
  LoadBalancePlan plan;
  plan.strategy = Strategy::ThreadExpand;
  plan.domain = ChunkDomain::InputItems;
  plan.scan_offsets = scan.offsets;
  plan.total_output = scan.total;
  const std::size_t n = plan.input_size();
  plan.chunks.resize(n);
  for (std::size_t i = 0; i < n; ++i) plan.chunks[i] = {i, i + 1, i, WorkClass::Single};
  return plan;
}

/// Dynamic grouping: large lists first (one chunk each, processed by the
/// whole team), then medium lists (one chunk each, one sub-team), then small
/// lists (per-item). Input order is kept within a class.
inline LoadBalancePlan plan_twc(const ScanOffsets& scan, edge_t small_cut, edge_t large_cut) {
  if (!(small_cut < large_cut)) throw ConfigError("twc: small_cut must be below large_cut");
  LoadBalancePlan plan;
  plan.strategy = Strategy::TWC;
  plan.domain = ChunkDomain::InputItems;
  plan.scan_offsets = scan.offsets;
  plan.total_output = scan.total;
  const std::size_t n = plan.input_size();
  std::vector<WorkChunk> medium, small;
  for (std::size_t i = 0; i < n; ++i) {
    const edge_t degree = scan.offsets[i + 1] - scan.offsets[i];
    if (degree >= large_cut) {
      plan.chunks.push_back({i, i + 1, i, WorkClass::FullTeam});
    } else if (degree >= small_cut) {
      medium.push_back({i, i + 1, i, WorkClass::SubTeam});
    } else {
      small.push_back({i, i + 1, i, WorkClass::Single});
    }
  }
  plan.chunks.insert(plan.chunks.end(), medium.begin(), medium.end());
  plan.chunks.insert(plan.chunks.end(), small.begin(), small.end());
  return plan;
}

/// Equal chunks of `chunk_size` output slots. Each chunk's first source is
/// found by a sorted search of 0, N, 2N, ... in the scan offsets.
inline LoadBalancePlan plan_lb_output(const ScanOffsets& scan, edge_t chunk_size) {
  if (chunk_size < 1) throw ConfigError("lb: chunk size must be at least 1");
  LoadBalancePlan plan;
  plan.strategy = Strategy::LB;
  plan.domain = ChunkDomain::OutputSlots;
  plan.scan_offsets = scan.offsets;
  plan.total_output = scan.total;
  const edge_t count = (scan.total + chunk_size - 1) / chunk_size;
  plan.chunks.resize(count);
  detail::parallel_for(0, count, [&](std::size_t k) {
    const edge_t begin = k * chunk_size;
    const edge_t end = std::min(scan.total, begin + chunk_size);
    plan.chunks[k] = {begin, end, plan.source_of(begin), WorkClass::Single};
  });
  return plan;
}

/// Equal chunks of `items_per_chunk` input items.
inline LoadBalancePlan plan_lb_input(const ScanOffsets& scan, std::size_t items_per_chunk) {
  if (items_per_chunk < 1) throw ConfigError("lb_light: items per chunk must be at least 1");
  LoadBalancePlan plan;
  plan.strategy = Strategy::LB_LIGHT;
  plan.domain = ChunkDomain::InputItems;
  plan.scan_offsets = scan.offsets;
  plan.total_output = scan.total;
  const std::size_t n = plan.input_size();
  for (std::size_t i = 0; i < n; i += items_per_chunk) {
    plan.chunks.push_back({i, std::min(n, i + items_per_chunk), i, WorkClass::Single});
  }
  return plan;
}

/// Builds the plan for a concrete strategy. LB_CULL partitions like LB_LIGHT
/// for small frontiers and like LB otherwise.
inline LoadBalancePlan make_plan(Strategy strategy, const ScanOffsets& scan,
                                 const LoadBalanceConfig& cfg) {
  switch (strategy) {
    case Strategy::ThreadExpand: return plan_thread_expand(scan);
    case Strategy::TWC: return plan_twc(scan, cfg.small_cut, cfg.large_cut);
    case Strategy::LB: return plan_lb_output(scan, cfg.output_chunk);
    case Strategy::LB_LIGHT: return plan_lb_input(scan, cfg.items_per_chunk);
    case Strategy::LB_CULL: {
      auto plan = scan.offsets.size() - 1 < cfg.frontier_threshold
                      ? plan_lb_input(scan, cfg.items_per_chunk)
                      : plan_lb_output(scan, cfg.output_chunk);
      plan.strategy = Strategy::LB_CULL;
      return plan;
    }
    case Strategy::Auto: break;
  }
  throw ConfigError("make_plan: strategy must be resolved before planning");
}

/// Runs every work item of the plan across the worker pool.
/// visit(input_index, neighbor_index, output_slot) is called exactly once per
/// slot, possibly concurrently.
template <typename Visit>
void execute_plan(const LoadBalancePlan& plan, Visit&& visit) {
  const auto& chunks = plan.chunks;
  if (plan.strategy != Strategy::TWC) {
    const auto schedule = plan.strategy == Strategy::ThreadExpand ? detail::Schedule::Static
                                                                  : detail::Schedule::Dynamic;
    detail::parallel_for(
        0, chunks.size(), [&](std::size_t c) { plan.for_each_in_chunk(chunks[c], visit); },
        schedule);
    return;
  }
  // TWC: classes run one after another, largest first.
  std::size_t c = 0;
  for (; c < chunks.size() && chunks[c].work_class == WorkClass::FullTeam; ++c) {
    const std::size_t i = chunks[c].begin;
    const edge_t base = plan.scan_offsets[i];
    const edge_t len = plan.scan_offsets[i + 1] - base;
    detail::parallel_for(0, len, [&](std::size_t k) { visit(i, k, base + k); });
  }
  std::size_t medium_end = c;
  while (medium_end < chunks.size() && chunks[medium_end].work_class == WorkClass::SubTeam) {
    ++medium_end;
  }
  detail::parallel_for(
      c, medium_end, [&](std::size_t k) { plan.for_each_in_chunk(chunks[k], visit); },
      detail::Schedule::Dynamic, 1);
  detail::parallel_for(
      medium_end, chunks.size(),
      [&](std::size_t k) { plan.for_each_in_chunk(chunks[k], visit); },
      detail::Schedule::Dynamic, 32);
}

}  // namespace graphfx
