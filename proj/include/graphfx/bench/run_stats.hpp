#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphfx/traversal/direction.hpp"

namespace graphfx {

struct IterationStats {
  std::size_t iteration = 0;
  std::size_t frontier_in = 0;
  std::size_t frontier_out = 0;
  TraversalMode mode = TraversalMode::Push;
  double runtime_ms = 0;
  /// Direction-optimizing runs only: the n_u fed to the switch decision.
  std::optional<double> unvisited_estimate;
};

struct RunStats {
  double total_runtime_ms = 0;
  /// One-time setup outside the timed loop (reverse adjacency, orientation).
  double preprocessing_ms = 0;
  std::vector<IterationStats> per_iteration;
  /// Sum of neighbor-list lengths of the vertices the primitive visited.
  std::uint64_t edges_traversed = 0;
  std::optional<double> mteps;
  std::size_t iterations = 0;
  std::size_t direction_switches = 0;
};

/// Monotonic stopwatch in milliseconds.
class Timer {
 public:
  Timer() : start_(clock::now()) {}
  void reset() { start_ = clock::now(); }
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_;
};

}  // namespace graphfx
