#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "graphfx/types.hpp"

namespace graphfx {

/// Compressed sparse row graph.
///
/// Topology is immutable after construction and safe to share across
/// threads. Two derived views are built lazily on first use and cached:
/// the reverse (CSC) adjacency used by pull traversal, and the per-edge
/// source array used by edge frontiers. Copies share those caches, which is
/// sound because copies share topology.
template <typename Weight = weight_t>
class CsrGraph {
 public:
  using weight_type = Weight;

  /// Reverse adjacency: for vertex v, sources[offsets[v]..offsets[v+1]) are
  /// the in-neighbors u of v and edge_ids[...] the forward edge id of (u,v).
  struct Reverse {
    std::vector<edge_t> offsets;
    std::vector<vertex_t> sources;
    std::vector<edge_t> edge_ids;
  };

  CsrGraph() : row_offsets_(1, 0) {}

  /// Validates the CSR invariants; throws DataError when violated.
  CsrGraph(std::vector<edge_t> row_offsets, std::vector<vertex_t> column_indices,
           std::vector<Weight> edge_weights = {}, bool undirected = false)
      : row_offsets_(std::move(row_offsets)),
        column_indices_(std::move(column_indices)),
        edge_weights_(std::move(edge_weights)),
        undirected_(undirected) {
    validate();
  }

  vertex_t num_vertices() const noexcept {
    return static_cast<vertex_t>(row_offsets_.size() - 1);
  }
  edge_t num_edges() const noexcept { return column_indices_.size(); }
  bool undirected() const noexcept { return undirected_; }
  bool weighted() const noexcept { return !edge_weights_.empty(); }

  double average_degree() const noexcept {
    return num_vertices() == 0 ? 0.0
                               : static_cast<double>(num_edges()) / num_vertices();
  }

  std::span<const edge_t> row_offsets() const noexcept { return row_offsets_; }
  std::span<const vertex_t> column_indices() const noexcept { return column_indices_; }
  std::span<const Weight> edge_weights() const noexcept { return edge_weights_; }

  edge_t degree(vertex_t v) const noexcept {
    return row_offsets_[v + 1] - row_offsets_[v];
  }
  edge_t first_edge(vertex_t v) const noexcept { return row_offsets_[v]; }
  std::span<const vertex_t> neighbors(vertex_t v) const noexcept {
    return std::span<const vertex_t>(column_indices_)
        .subspan(row_offsets_[v], degree(v));
  }
  vertex_t edge_dst(edge_t e) const noexcept { return column_indices_[e]; }
  vertex_t edge_src(edge_t e) const { return edge_sources()[e]; }
  Weight weight(edge_t e) const noexcept {
    return edge_weights_.empty() ? Weight{1} : edge_weights_[e];
  }

  /// True when (u, v) is an edge. Requires sorted neighbor lists.
  bool has_edge(vertex_t u, vertex_t v) const noexcept {
    auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  bool neighbors_sorted() const noexcept {
    for (vertex_t v = 0; v < num_vertices(); ++v) {
      auto nbrs = neighbors(v);
      if (!std::is_sorted(nbrs.begin(), nbrs.end())) return false;
    }
    return true;
  }

  /// Same topology, new weights. Shares the lazily built caches.
  CsrGraph with_weights(std::vector<Weight> weights) const {
    if (weights.size() != column_indices_.size()) {
      throw DataError("with_weights: expected one weight per edge");
    }
    CsrGraph out = *this;
    out.edge_weights_ = std::move(weights);
    return out;
  }

  const Reverse& reverse() const {
    std::call_once(cache_->reverse_once, [this] { build_reverse(); });
    return cache_->reverse;
  }

  bool reverse_built() const noexcept { return cache_->reverse_ready.load(); }

  std::span<const vertex_t> edge_sources() const {
    std::call_once(cache_->sources_once, [this] {
      auto& srcs = cache_->sources;
      srcs.resize(num_edges());
      for (vertex_t v = 0; v < num_vertices(); ++v) {
        std::fill(srcs.begin() + static_cast<std::ptrdiff_t>(row_offsets_[v]),
                  srcs.begin() + static_cast<std::ptrdiff_t>(row_offsets_[v + 1]), v);
      }
    });
    return cache_->sources;
  }

 private:
  struct Cache {
    std::once_flag reverse_once;
    Reverse reverse;
    std::atomic<bool> reverse_ready{false};
    std::once_flag sources_once;
    std::vector<vertex_t> sources;
  };

  void validate() const {
    if (row_offsets_.empty() || row_offsets_.front() != 0) {
      throw DataError("csr: row_offsets must start at 0");
    }
    if (row_offsets_.back() != column_indices_.size()) {
      throw DataError("csr: row_offsets[n] must equal the number of edges");
    }
    if (!std::is_sorted(row_offsets_.begin(), row_offsets_.end())) {
      throw DataError("csr: row_offsets must be nondecreasing");
    }
    const auto n = num_vertices();
    for (auto c : column_indices_) {
      if (c >= n) throw DataError("csr: column index out of range");
    }
    if (!edge_weights_.empty() && edge_weights_.size() != column_indices_.size()) {
      throw DataError("csr: weight array length mismatch");
    }
  }

  void build_reverse() const {
    auto& r = cache_->reverse;
    const vertex_t n = num_vertices();
    r.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto c : column_indices_) ++r.offsets[c + 1];
    for (vertex_t v = 0; v < n; ++v) r.offsets[v + 1] += r.offsets[v];
    r.sources.resize(num_edges());
    r.edge_ids.resize(num_edges());
    std::vector<edge_t> cursor(r.offsets.begin(), r.offsets.end() - 1);
    // Scanning sources in ascending order keeps each in-list sorted.
    for (vertex_t u = 0; u < n; ++u) {
      for (edge_t e = row_offsets_[u]; e < row_offsets_[u + 1]; ++e) {
        const edge_t slot = cursor[column_indices_[e]]++;
        r.sources[slot] = u;
        r.edge_ids[slot] = e;
      }
    }
    cache_->reverse_ready = true;
  }

  std::vector<edge_t> row_offsets_;
  std::vector<vertex_t> column_indices_;
  std::vector<Weight> edge_weights_;
  bool undirected_ = false;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace graphfx
