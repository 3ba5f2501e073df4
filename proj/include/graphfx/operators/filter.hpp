#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "graphfx/detail/parallel.hpp"
#include "graphfx/frontier/frontier.hpp"

namespace graphfx {

/// Exact filtering removes every duplicate. Inexact filtering runs cheap
/// culling heuristics that remove most duplicates but may let some through.
struct FilterMode {
  enum class Kind { Exact, Inexact };

  Kind kind = Kind::Exact;
  /// Inexact only: one bit per id, checked without a read-modify-write so
  /// racing workers may both keep an item.
  bool global_bitmask = true;
  /// Inexact only: direct-mapped history table per team of items (0 = off).
  std::size_t team_history = 256;
  /// Inexact only: direct-mapped history table per sub-team of 32 items (0 = off).
  std::size_t local_history = 32;

  static FilterMode exact() { return {}; }
  static FilterMode inexact(bool bitmask = true, std::size_t team = 256,
                            std::size_t local = 32) {
    return {Kind::Inexact, bitmask, team, local};
  }
};

namespace detail {

inline constexpr std::size_t kTeamWidth = 256;
inline constexpr std::size_t kSubTeamWidth = 32;

/// Direct-mapped, overwrite-on-collision table of recently kept ids.
template <typename Id>
class HistoryTable {
 public:
  explicit HistoryTable(std::size_t size)
      : slots_(size, std::numeric_limits<Id>::max()) {}

  bool enabled() const noexcept { return !slots_.empty(); }

  bool contains(Id id) const noexcept { return slots_[index(id)] == id; }
  void insert(Id id) noexcept { slots_[index(id)] = id; }
  void reset() noexcept { std::fill(slots_.begin(), slots_.end(), std::numeric_limits<Id>::max()); }

 private:
  std::size_t index(Id id) const noexcept {
    return static_cast<std::size_t>((static_cast<std::uint64_t>(id) * 0x9E3779B97F4A7C15ull) >> 32) %
           slots_.size();
  }
  std::vector<Id> slots_;
};

template <typename Id>
std::size_t id_bound(std::span<const Id> ids) {
  Id hi = 0;
  for (auto id : ids) hi = std::max(hi, id);
  return ids.empty() ? 0 : static_cast<std::size_t>(hi) + 1;
}

/// Global bitmask used by inexact culling: a relaxed test followed by a
/// separate set, so two workers can both pass the test for the same id.
class CullingMask {
 public:
  explicit CullingMask(std::size_t bits) : bits_(bits) {}
  bool seen(std::size_t i) const noexcept { return bits_.test(i); }
  void mark(std::size_t i) noexcept { bits_.set(i); }

 private:
  StatusBitmap bits_;
};

}  // namespace detail

/// Keeps the items for which cond(id) is true.
///
/// Exact: each distinct id is claimed once through a bitmap, cond runs once
/// per distinct id, and the survivors are compacted by scan + scatter.
/// Inexact: every distinct cond-true id survives at least once, no cond-false
/// id survives, and most duplicates are culled.
/// Input order is preserved among survivors.
template <FrontierKind Kind, typename Cond>
Frontier<Kind> filter(const Frontier<Kind>& in, Cond&& cond,
                      const FilterMode& mode = FilterMode::exact()) {
  using Id = typename Frontier<Kind>::id_type;
  const auto items = in.items();
  const std::size_t n = items.size();
  std::vector<std::uint8_t> keep(n, 0);

  if (mode.kind == FilterMode::Kind::Exact) {
    StatusBitmap claimed(detail::id_bound(items));
    detail::parallel_for(0, n, [&](std::size_t i) {
      keep[i] = claimed.set(items[i]) && cond(items[i]);
    });
  } else {
    std::optional<detail::CullingMask> mask;
    if (mode.global_bitmask) mask.emplace(detail::id_bound(items));
    const std::size_t team = detail::kTeamWidth;
    const std::size_t teams = (n + team - 1) / team;
    detail::parallel_for(
        0, teams,
        [&](std::size_t t) {
          detail::HistoryTable<Id> team_table(mode.team_history);
          detail::HistoryTable<Id> local_table(mode.local_history);
          const std::size_t lo = t * team;
          const std::size_t hi = std::min(n, lo + team);
          for (std::size_t i = lo; i < hi; ++i) {
            if (local_table.enabled() && (i - lo) % detail::kSubTeamWidth == 0) {
              local_table.reset();
            }
            const Id id = items[i];
            if (mask && mask->seen(id)) continue;
            if (local_table.enabled() && local_table.contains(id)) continue;
            if (team_table.enabled() && team_table.contains(id)) continue;
            if (!cond(id)) continue;
            if (local_table.enabled()) local_table.insert(id);
            if (team_table.enabled()) team_table.insert(id);
            if (mask) mask->mark(id);
            keep[i] = 1;
          }
        },
        detail::Schedule::Dynamic);
  }
  return Frontier<Kind>(detail::compact<Id>(items, keep));
}

}  // namespace graphfx
