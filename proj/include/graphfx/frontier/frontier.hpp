#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "graphfx/atomics.hpp"
#include "graphfx/types.hpp"

namespace graphfx {

enum class FrontierKind { Vertex, Edge };

/// Dense buffer of vertex ids or edge ids taking part in one BSP step. The
/// kind is part of the type, so a vertex frontier can never be handed to an
/// operator expecting edges.
template <FrontierKind Kind>
class Frontier {
 public:
  using id_type = std::conditional_t<Kind == FrontierKind::Vertex, vertex_t, edge_t>;
  static constexpr FrontierKind kind = Kind;

  Frontier() = default;
  explicit Frontier(std::vector<id_type> items) : items_(std::move(items)) {}
  Frontier(std::initializer_list<id_type> items) : items_(items) {}

  std::size_t size() const noexcept { return items_.size(); }
  std::size_t capacity() const noexcept { return items_.capacity(); }
  bool empty() const noexcept { return items_.empty(); }

  std::span<const id_type> items() const noexcept { return items_; }
  std::span<id_type> items() noexcept { return items_; }
  id_type operator[](std::size_t i) const noexcept { return items_[i]; }

  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  void push_back(id_type id) { items_.push_back(id); }
  void clear() noexcept { items_.clear(); }
  void reserve(std::size_t n) { items_.reserve(n); }
  /// Sizes the buffer for exactly n slots; used when the writer already knows
  /// the output size from a prefix sum.
  void resize(std::size_t n) { items_.resize(n); }

  std::vector<id_type>& storage() noexcept { return items_; }
  std::vector<id_type> release() && noexcept { return std::move(items_); }

 private:
  std::vector<id_type> items_;
};

using VertexFrontier = Frontier<FrontierKind::Vertex>;
using EdgeFrontier = Frontier<FrontierKind::Edge>;

/// Input/output frontiers double-buffered across BSP steps.
template <FrontierKind Kind>
class FrontierPair {
 public:
  Frontier<Kind>& input() noexcept { return buffers_[current_]; }
  Frontier<Kind>& output() noexcept { return buffers_[1 - current_]; }
  const Frontier<Kind>& input() const noexcept { return buffers_[current_]; }
  const Frontier<Kind>& output() const noexcept { return buffers_[1 - current_]; }

  /// The output becomes the next input; the old input is cleared (capacity
  /// kept) and becomes the output.
  void swap() noexcept {
    current_ = 1 - current_;
    output().clear();
  }

 private:
  Frontier<Kind> buffers_[2];
  int current_ = 0;
};

/// One bit per vertex with set-once semantics.
class StatusBitmap {
 public:
  StatusBitmap() = default;
  explicit StatusBitmap(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }

  bool test(std::size_t i) const noexcept {
    return (atomic_load(words_[i >> 6]) >> (i & 63)) & 1u;
  }

  /// Sets bit i; returns true if this call set it (it was clear before).
  bool set(std::size_t i) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    const std::uint64_t old =
        std::atomic_ref<std::uint64_t>(words_[i >> 6]).fetch_or(mask, std::memory_order_acq_rel);
    return (old & mask) == 0;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// All vertices whose label is still the unvisited sentinel, ascending.
template <typename Label>
VertexFrontier generate_unvisited_frontier(std::span<const Label> labels) {
  VertexFrontier out;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (atomic_load(labels[v]) == unvisited<Label>()) out.push_back(static_cast<vertex_t>(v));
  }
  return out;
}

template <typename Label>
VertexFrontier generate_unvisited_frontier(const std::vector<Label>& labels) {
  return generate_unvisited_frontier(std::span<const Label>(labels));
}

/// Frontier holding every vertex of an n-vertex graph.
inline VertexFrontier all_vertices(vertex_t n) {
  std::vector<vertex_t> ids(n);
  for (vertex_t v = 0; v < n; ++v) ids[v] = v;
  return VertexFrontier(std::move(ids));
}

inline EdgeFrontier all_edges(edge_t m) {
  std::vector<edge_t> ids(m);
  for (edge_t e = 0; e < m; ++e) ids[e] = e;
  return EdgeFrontier(std::move(ids));
}

}  // namespace graphfx
