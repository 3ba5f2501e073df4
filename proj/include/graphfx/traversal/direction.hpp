#pragma once

#include <limits>
#include <string>
#include <string_view>

#include "graphfx/operators/advance.hpp"

namespace graphfx {

enum class TraversalMode { Push, Pull };

/// Requested traversal direction for BFS-like primitives. Pull expands the
/// source by push once, then pulls for every later iteration.
enum class Direction { Push, Pull, Auto };

inline std::string_view to_string(TraversalMode m) noexcept {
  return m == TraversalMode::Push ? "push" : "pull";
}

inline std::string_view to_string(Direction d) noexcept {
  switch (d) {
    case Direction::Push: return "push";
    case Direction::Pull: return "pull";
    case Direction::Auto: return "auto";
  }
  return "?";
}

inline Direction parse_direction(std::string_view s) {
  if (s == "push") return Direction::Push;
  if (s == "pull") return Direction::Pull;
  if (s == "auto") return Direction::Auto;
  throw ConfigError("unknown direction '" + std::string(s) + "'");
}

/// How m_u (edges to check from unvisited vertices) is estimated.
enum class UnvisitedEstimate {
  /// n_u * n / (n - n_u), the estimate as commonly published.
  VertexRatio,
  /// n_u * m / (n - n_u), the edge-count-consistent variant.
  EdgeRatio,
};

struct DirectionConfig {
  double do_a = 0.001;
  double do_b = 0.2;
  UnvisitedEstimate estimate = UnvisitedEstimate::VertexRatio;
};

struct DirectionState {
  TraversalMode mode = TraversalMode::Push;
  double n_u = 0;  // unvisited vertices
  double n_f = 0;  // current frontier length
  double m = 0;
  double n = 0;
  double do_a = 0.001;
  double do_b = 0.2;
};

struct EdgeEstimates {
  double m_f = 0;
  double m_u = 0;
};

/// m_f = n_f * m / n; m_u = n_u * n / (n - n_u) (or n_u * m / (n - n_u)).
/// m_u is +inf when every vertex is unvisited.
inline EdgeEstimates estimate_mf_mu(const DirectionState& s,
                                    UnvisitedEstimate variant = UnvisitedEstimate::VertexRatio) {
  EdgeEstimates est;
  est.m_f = s.n == 0 ? 0.0 : s.n_f * s.m / s.n;
  if (s.n_u >= s.n) {
    est.m_u = std::numeric_limits<double>::infinity();
  } else {
    const double scale = variant == UnvisitedEstimate::VertexRatio ? s.n : s.m;
    est.m_u = s.n_u * scale / (s.n - s.n_u);
  }
  return est;
}

/// Push switches to pull when m_f > m_u * do_a; pull switches back to push
/// when m_f < m_u * do_b; otherwise the mode is kept.
inline TraversalMode decide_direction(const DirectionState& s,
                                      UnvisitedEstimate variant = UnvisitedEstimate::VertexRatio) {
  const auto est = estimate_mf_mu(s, variant);
  if (s.mode == TraversalMode::Push) {
    return est.m_f > est.m_u * s.do_a ? TraversalMode::Pull : TraversalMode::Push;
  }
  return est.m_f < est.m_u * s.do_b ? TraversalMode::Push : TraversalMode::Pull;
}

/// One reverse-advance step: the unvisited frontier splits into vertices
/// reached from a visited in-neighbor (new active) and the rest.
template <typename Weight, EdgeFunctorSet F>
PullResult pull_step(const CsrGraph<Weight>& g, const VertexFrontier& unvisited, F&& functors,
                     AdvanceReport* report = nullptr) {
  return advance_pull(g, unvisited, std::forward<F>(functors), report);
}

}  // namespace graphfx
