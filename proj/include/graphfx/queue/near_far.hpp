#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "graphfx/detail/parallel.hpp"
#include "graphfx/frontier/frontier.hpp"

namespace graphfx {

struct SplitResult {
  VertexFrontier near;
  VertexFrontier far;
};

/// Two stream compactions: items with key(v) < threshold form `near`, the
/// rest `far`. Order is preserved within each side.
template <typename KeyFn, typename Key>
SplitResult split(const VertexFrontier& in, KeyFn&& key, Key threshold) {
  const auto items = in.items();
  std::vector<std::uint8_t> is_near(items.size()), is_far(items.size());
  detail::parallel_for(0, items.size(), [&](std::size_t i) {
    is_near[i] = key(items[i]) < threshold;
    is_far[i] = !is_near[i];
  });
  return {VertexFrontier(detail::compact<vertex_t>(items, is_near)),
          VertexFrontier(detail::compact<vertex_t>(items, is_far))};
}

/// Two-level priority queue for delta-stepping. `near` holds the items
/// below the current threshold; `far` holds everything postponed.
template <typename Key>
class NearFarPile {
 public:
  NearFarPile(Key threshold, Key delta) : threshold_(threshold), delta_(delta) {
    if (!(delta > Key{0})) throw ConfigError("priority queue: delta must be positive");
  }

  VertexFrontier& near() noexcept { return near_; }
  const VertexFrontier& far() const noexcept { return far_; }
  Key threshold() const noexcept { return threshold_; }
  Key delta() const noexcept { return delta_; }

  /// Splits `in` against the current threshold: near part replaces `near`,
  /// far part is appended to the far pile.
  template <typename KeyFn>
  void split_into(const VertexFrontier& in, KeyFn&& key) {
    auto parts = split(in, key, threshold_);
    near_ = std::move(parts.near);
    auto& f = far_.storage();
    f.insert(f.end(), parts.far.begin(), parts.far.end());
  }

  /// Raises the threshold by delta and re-splits the far pile. Entries whose
  /// key is below the previous threshold are stale (already settled through
  /// the near slice) and are dropped, as are repeated ids.
  template <typename KeyFn>
  void advance_bucket(KeyFn&& key) {
    if (!near_.empty()) {
      throw std::logic_error("advance_bucket: near slice must be exhausted first");
    }
    const Key floor = threshold_;
    threshold_ = saturating_add(threshold_, delta_);
    VertexFrontier pending(std::move(far_).release());
    far_.clear();
    std::vector<std::uint8_t> keep(pending.size());
    std::vector<std::uint8_t> seen;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      const vertex_t v = pending[i];
      if (v >= seen.size()) seen.resize(static_cast<std::size_t>(v) + 1, 0);
      keep[i] = !(key(v) < floor) && !seen[v];
      seen[v] = 1;
    }
    split_into(VertexFrontier(detail::compact<vertex_t>(pending.items(), keep)), key);
  }

 private:
  static Key saturating_add(Key a, Key b) {
    if constexpr (std::numeric_limits<Key>::is_integer) {
      return a > std::numeric_limits<Key>::max() - b ? std::numeric_limits<Key>::max() : a + b;
    } else {
      return a + b;
    }
  }

  VertexFrontier near_;
  VertexFrontier far_;
  Key threshold_;
  Key delta_;
};

}  // namespace graphfx
