#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "graphfx/graph/coo_graph.hpp"
#include "graphfx/graph/csr_graph.hpp"

namespace graphfx {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Uniform double in [0, 1) from 53 random bits; identical on every platform,
/// unlike std::uniform_real_distribution.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Graph 500 initiator probabilities.
struct RmatParams {
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  double d = 0.05;
};

/// R-MAT by noise-free recursive quadrant descent. Produces exactly
/// edge_factor * 2^scale directed edges; duplicates and self-loops are kept
/// (coo_to_csr removes them).
inline CooGraph<weight_t> generate_rmat(unsigned scale, unsigned edge_factor,
                                        const RmatParams& p, std::uint64_t seed) {
  if (scale < 1 || scale > 31) throw ConfigError("rmat: scale must be in [1, 31]");
  if (p.a < 0 || p.b < 0 || p.c < 0 || p.d < 0 ||
      std::abs(p.a + p.b + p.c + p.d - 1.0) > 1e-9) {
    throw ConfigError("rmat: a+b+c+d must equal 1");
  }
  const vertex_t n = vertex_t{1} << scale;
  const std::size_t m = static_cast<std::size_t>(edge_factor) * n;
  CooGraph<weight_t> coo;
  coo.num_vertices = n;
  coo.src.resize(m);
  coo.dst.resize(m);
  std::mt19937_64 rng(seed);
  const double ab = p.a + p.b;
  const double abc = ab + p.c;
  for (std::size_t e = 0; e < m; ++e) {
    vertex_t u = 0, v = 0;
    for (unsigned level = 0; level < scale; ++level) {
      const vertex_t bit = vertex_t{1} << (scale - 1 - level);
      const double r = detail::unit_uniform(rng);
      if (r < p.a) {
      } else if (r < ab) {
        v |= bit;
      } else if (r < abc) {
        u |= bit;
      } else {
        u |= bit;
        v |= bit;
      }
    }
    coo.src[e] = u;
    coo.dst[e] = v;
  }
  return coo;
}

struct Point2 {
  double x = 0;
  double y = 0;
};

/// Undirected geometric graph over given points: one COO entry (u < v) per
/// pair at Euclidean distance strictly below `threshold`.
inline CooGraph<weight_t> rgg_from_points(const std::vector<Point2>& points, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw ConfigError("rgg: threshold must lie in (0, 1)");
  }
  const std::size_t n = points.size();
  CooGraph<weight_t> coo;
  coo.num_vertices = static_cast<vertex_t>(n);
  // Grid with cells no smaller than the threshold: neighbors live in the
  // 3x3 block around a point's cell.
  const auto by_threshold = static_cast<std::size_t>(std::floor(1.0 / threshold));
  const auto by_count =
      static_cast<std::size_t>(2 * std::ceil(std::sqrt(static_cast<double>(n)))) + 1;
  const std::size_t dim = std::max<std::size_t>(1, std::min(by_threshold, by_count));
  auto cell_coord = [dim](double c) {
    return std::min(dim - 1, static_cast<std::size_t>(std::max(0.0, c) * dim));
  };
  std::vector<std::size_t> cell(n);
  for (std::size_t i = 0; i < n; ++i) {
    cell[i] = cell_coord(points[i].y) * dim + cell_coord(points[i].x);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cell[a] < cell[b]; });
  std::vector<std::size_t> start(dim * dim + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ++start[cell[i] + 1];
  std::partial_sum(start.begin(), start.end(), start.begin());

  const double t2 = threshold * threshold;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t cx = cell[i] % dim;
    const std::size_t cy = cell[i] / dim;
    for (std::size_t y = cy == 0 ? 0 : cy - 1; y <= std::min(dim - 1, cy + 1); ++y) {
      for (std::size_t x = cx == 0 ? 0 : cx - 1; x <= std::min(dim - 1, cx + 1); ++x) {
        const std::size_t c = y * dim + x;
        for (std::size_t k = start[c]; k < start[c + 1]; ++k) {
          const std::size_t j = order[k];
          if (j <= i) continue;
          const double dx = points[i].x - points[j].x;
          const double dy = points[i].y - points[j].y;
          if (dx * dx + dy * dy < t2) {
            coo.add_edge(static_cast<vertex_t>(i), static_cast<vertex_t>(j));
          }
        }
      }
    }
  }
  return coo;
}

inline std::vector<Point2> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point2> pts(n);
  for (auto& p : pts) {
    p.x = detail::unit_uniform(rng);
    p.y = detail::unit_uniform(rng);
  }
  return pts;
}

/// Connectivity-style threshold 0.55 * sqrt(ln n / n); at scale 24 this is
/// the commonly used 0.000548.
inline double rgg_default_threshold(unsigned scale) {
  const double n = std::ldexp(1.0, static_cast<int>(scale));
  return 0.55 * std::sqrt(std::log(n) / n);
}

/// 2^scale uniform points in the unit square.
inline CooGraph<weight_t> generate_rgg(unsigned scale, double threshold, std::uint64_t seed) {
  if (scale > 30) throw ConfigError("rgg: scale must be at most 30");
  return rgg_from_points(random_points(std::size_t{1} << scale, seed), threshold);
}

/// G(n, p): each unordered pair u < v independently with probability p.
inline CooGraph<weight_t> generate_erdos_renyi(vertex_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("erdos-renyi: p must lie in [0, 1]");
  CooGraph<weight_t> coo;
  coo.num_vertices = n;
  std::mt19937_64 rng(seed);
  for (vertex_t u = 0; u < n; ++u) {
    for (vertex_t v = u + 1; v < n; ++v) {
      if (detail::unit_uniform(rng) < p) coo.add_edge(u, v);
    }
  }
  return coo;
}

/// Uniform integer weights in [lo, hi]. The weight of (u,v) is a hash of the
/// unordered pair and the seed, so (u,v) and (v,u) always agree.
template <typename Weight>
CsrGraph<Weight> assign_random_weights(const CsrGraph<Weight>& g, Weight lo, Weight hi,
                                       std::uint64_t seed) {
  if (lo < Weight{1} || hi < lo) throw ConfigError("weights: need 1 <= lo <= hi");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::vector<Weight> w(g.num_edges());
  const auto cols = g.column_indices();
  for (vertex_t u = 0; u < g.num_vertices(); ++u) {
    for (edge_t e = g.row_offsets()[u]; e < g.row_offsets()[u + 1]; ++e) {
      const vertex_t v = cols[e];
      const std::uint64_t a = std::min(u, v);
      const std::uint64_t b = std::max(u, v);
      const std::uint64_t h =
          detail::splitmix64(detail::splitmix64(seed ^ (a << 32 | b)) + a);
      w[e] = static_cast<Weight>(lo + static_cast<Weight>(h % span));
    }
  }
  return g.with_weights(std::move(w));
}

}  // namespace graphfx
