#pragma once

#include <cstddef>
#include <vector>

#include "graphfx/types.hpp"

namespace graphfx {

/// Coordinate-list graph, stored as parallel arrays. `weights` is either
/// empty (unweighted) or the same length as `src`.
template <typename Weight = weight_t>
struct CooGraph {
  using weight_type = Weight;

  vertex_t num_vertices = 0;
  std::vector<vertex_t> src;
  std::vector<vertex_t> dst;
  std::vector<Weight> weights;

  std::size_t num_edges() const noexcept { return src.size(); }
  bool weighted() const noexcept { return !weights.empty(); }

  void add_edge(vertex_t u, vertex_t v) {
    src.push_back(u);
    dst.push_back(v);
  }

  void add_edge(vertex_t u, vertex_t v, Weight w) {
    add_edge(u, v);
    weights.push_back(w);
  }

  /// Throws DataError if an endpoint is out of range or weights are ragged.
  void validate() const {
    if (src.size() != dst.size()) throw DataError("coo: src/dst length mismatch");
    if (!weights.empty() && weights.size() != src.size()) {
      throw DataError("coo: weight array length mismatch");
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src[i] >= num_vertices || dst[i] >= num_vertices) {
        throw DataError("coo: edge " + std::to_string(i) + " endpoint out of range");
      }
    }
  }
};

}  // namespace graphfx
