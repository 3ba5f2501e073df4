#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "graphfx/types.hpp"

namespace graphfx {

/// Workload mapping used to expand a frontier's neighbor lists.
enum class Strategy {
  ThreadExpand,  // one input item per worker
  TWC,           // three size classes: per-item, sub-team, full team
  LB,            // equal-sized chunks of output slots
  LB_LIGHT,      // equal-sized chunks of input items
  LB_CULL,       // LB/LB_LIGHT partitioning fused with a culling filter
  Auto,
};

inline constexpr std::array<Strategy, 5> kConcreteStrategies{
    Strategy::ThreadExpand, Strategy::TWC, Strategy::LB, Strategy::LB_LIGHT,
    Strategy::LB_CULL};

inline std::string_view to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::ThreadExpand: return "thread_expand";
    case Strategy::TWC: return "twc";
    case Strategy::LB: return "lb";
    case Strategy::LB_LIGHT: return "lb_light";
    case Strategy::LB_CULL: return "lb_cull";
    case Strategy::Auto: return "auto";
  }
  return "?";
}

inline Strategy parse_strategy(std::string_view name) {
  for (auto s : {Strategy::ThreadExpand, Strategy::TWC, Strategy::LB, Strategy::LB_LIGHT,
                 Strategy::LB_CULL, Strategy::Auto}) {
    if (to_string(s) == name) return s;
  }
  throw ConfigError("unknown traversal mode '" + std::string(name) + "'");
}

struct LoadBalanceConfig {
  Strategy strategy = Strategy::Auto;
  /// TWC class cuts, inclusive lower bounds: degree >= large_cut goes to the
  /// full team, degree >= small_cut to a sub-team.
  edge_t small_cut = 32;
  edge_t large_cut = 256;
  /// Output slots per chunk for LB.
  edge_t output_chunk = 4096;
  /// Input items per chunk for LB_LIGHT.
  std::size_t items_per_chunk = 256;
  /// Auto: average degree at or above this picks the LB family, else TWC.
  double degree_threshold = 5.0;
  /// Auto / LB_CULL: frontiers smaller than this balance over input items.
  std::size_t frontier_threshold = 4096;
};

/// Heuristic choice of a concrete strategy from graph shape and frontier size.
inline Strategy choose_strategy(edge_t num_edges, vertex_t num_vertices,
                                std::size_t frontier_size,
                                const LoadBalanceConfig& cfg = {}) {
  const double avg = num_vertices == 0
                         ? 0.0
                         : static_cast<double>(num_edges) / static_cast<double>(num_vertices);
  if (avg < cfg.degree_threshold) return Strategy::TWC;
  return frontier_size < cfg.frontier_threshold ? Strategy::LB_LIGHT : Strategy::LB;
}

inline Strategy resolve_strategy(Strategy requested, edge_t num_edges, vertex_t num_vertices,
                                 std::size_t frontier_size, const LoadBalanceConfig& cfg) {
  return requested == Strategy::Auto
             ? choose_strategy(num_edges, num_vertices, frontier_size, cfg)
             : requested;
}

}  // namespace graphfx
