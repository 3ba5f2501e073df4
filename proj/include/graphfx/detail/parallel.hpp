#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace graphfx::detail {

inline int worker_count() noexcept {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline int worker_id() noexcept {
#ifdef _OPENMP
  return omp_get_thread_num();
#else
  return 0;
#endif
}

inline void set_worker_count(int n) noexcept {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

enum class Schedule { Static, Dynamic };

/// Runs fn(i) for i in [begin, end) across the worker pool.
template <typename Fn>
void parallel_for(std::size_t begin, std::size_t end, Fn&& fn,
                  Schedule schedule = Schedule::Static, std::size_t grain = 1) {
  if (begin >= end) return;
  const auto count = static_cast<std::ptrdiff_t>(end - begin);
  const auto g = static_cast<int>(std::max<std::size_t>(grain, 1));
  if (worker_count() == 1 || (count < 2048 && schedule == Schedule::Static)) {
    // Region startup dominates for tiny loops.
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  if (schedule == Schedule::Dynamic) {
#pragma omp parallel for schedule(dynamic, g)
    for (std::ptrdiff_t i = 0; i < count; ++i) fn(begin + static_cast<std::size_t>(i));
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) fn(begin + static_cast<std::size_t>(i));
  }
}

/// Exclusive prefix sum of `in` into `out` (out.size() == in.size() + 1).
/// Returns the total. Two-pass blocked scan when parallel.
template <typename T, typename U>
U exclusive_scan(std::span<const T> in, std::span<U> out) {
  const std::size_t n = in.size();
  const int workers = worker_count();
  if (workers <= 1 || n < (1u << 16)) {
    U running{};
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = running;
      running += static_cast<U>(in[i]);
    }
    out[n] = running;
    return running;
  }
  const std::size_t blocks = static_cast<std::size_t>(workers);
  const std::size_t block = (n + blocks - 1) / blocks;
  std::vector<U> sums(blocks + 1, U{});
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * block;
    const std::size_t hi = std::min(n, lo + block);
    U s{};
    for (std::size_t i = lo; i < hi; ++i) s += static_cast<U>(in[i]);
    sums[static_cast<std::size_t>(b) + 1] = s;
  }
  std::partial_sum(sums.begin(), sums.end(), sums.begin());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * block;
    const std::size_t hi = std::min(n, lo + block);
    U running = sums[static_cast<std::size_t>(b)];
    for (std::size_t i = lo; i < hi; ++i) {
      out[i] = running;
      running += static_cast<U>(in[i]);
    }
  }
  out[n] = sums[blocks];
  return sums[blocks];
}

/// Stream compaction: keeps items[i] where keep[i] != 0, preserving order.
/// Blocked count-scan-write, so no per-item offset array.
template <typename T>
std::vector<T> compact(std::span<const T> items, std::span<const std::uint8_t> keep) {
  constexpr std::size_t kBlock = 4096;
  const std::size_t n = items.size();
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<std::size_t> starts(blocks + 1, 0);
  parallel_for(0, blocks, [&](std::size_t b) {
    const std::size_t hi = std::min(n, (b + 1) * kBlock);
    std::size_t c = 0;
    for (std::size_t i = b * kBlock; i < hi; ++i) c += keep[i] != 0;
    starts[b + 1] = c;
  });
  std::partial_sum(starts.begin(), starts.end(), starts.begin());
  std::vector<T> out(starts[blocks]);
  parallel_for(0, blocks, [&](std::size_t b) {
    const std::size_t hi = std::min(n, (b + 1) * kBlock);
    std::size_t o = starts[b];
    for (std::size_t i = b * kBlock; i < hi; ++i) {
      if (keep[i]) out[o++] = items[i];
    }
  });
  return out;
}

}  // namespace graphfx::detail
