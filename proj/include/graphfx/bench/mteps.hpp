#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "graphfx/types.hpp"

namespace graphfx {

enum class Primitive { BFS, SSSP, BC, CC, PageRank, TC };

inline std::string_view to_string(Primitive p) noexcept {
  switch (p) {
    case Primitive::BFS: return "bfs";
    case Primitive::SSSP: return "sssp";
    case Primitive::BC: return "bc";
    case Primitive::CC: return "cc";
    case Primitive::PageRank: return "pr";
    case Primitive::TC: return "tc";
  }
  return "?";
}

inline Primitive parse_primitive(std::string_view s) {
  for (auto p : {Primitive::BFS, Primitive::SSSP, Primitive::BC, Primitive::CC,
                 Primitive::PageRank, Primitive::TC}) {
    if (to_string(p) == s) return p;
  }
  if (s == "pagerank") return Primitive::PageRank;
  throw ConfigError("unknown primitive '" + std::string(s) + "'");
}

/// Millions of traversed edges per second: |E| / t, or 2|E| / t for BC
/// (forward and backward pass). SSSP has no meaningful edge count because
/// edges are relaxed a data-dependent number of times, so it reports none;
/// so does a non-positive runtime.
inline std::optional<double> compute_mteps(Primitive primitive, std::uint64_t edges_visited,
                                           double runtime_ms) {
  if (primitive == Primitive::SSSP || !(runtime_ms > 0.0)) return std::nullopt;
  const double factor = primitive == Primitive::BC ? 2.0 : 1.0;
  // edges / (ms * 1e-3) / 1e6
  return factor * static_cast<double>(edges_visited) / (runtime_ms * 1e3);
}

}  // namespace graphfx
