#pragma once

#include <string>

#include "graphfx/atomics.hpp"
#include "graphfx/bench/mteps.hpp"
#include "graphfx/bench/run_stats.hpp"
#include "graphfx/frontier/frontier.hpp"
#include "graphfx/graph/csr_graph.hpp"
#include "graphfx/operators/advance.hpp"
#include "graphfx/operators/compute.hpp"
#include "graphfx/operators/filter.hpp"

namespace graphfx::detail {

template <typename Weight>
void check_source(const CsrGraph<Weight>& g, vertex_t source) {
  if (source >= g.num_vertices()) {
    throw ConfigError("source vertex " + std::to_string(source) + " out of range (n = " +
                      std::to_string(g.num_vertices()) + ")");
  }
}

/// Sum of degrees of the vertices whose label was reached.
template <typename Weight, typename Label>
std::uint64_t reached_edges(const CsrGraph<Weight>& g, const std::vector<Label>& labels) {
  std::uint64_t total = 0;
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    if (labels[v] != unvisited<Label>()) total += g.degree(v);
  }
  return total;
}

inline AdvanceOptions advance_options(const LoadBalanceConfig& lb, bool idempotent = false) {
  AdvanceOptions opts;
  opts.lb = lb;
  opts.idempotent = idempotent;
  return opts;
}

}  // namespace graphfx::detail
