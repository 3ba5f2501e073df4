#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "graphfx/graph/build.hpp"
#include "graphfx/graph/generators.hpp"
#include "graphfx/primitives/bc.hpp"
#include "graphfx/primitives/bfs.hpp"
#include "graphfx/primitives/cc.hpp"
#include "graphfx/primitives/pagerank.hpp"
#include "graphfx/primitives/sssp.hpp"
#include "graphfx/primitives/tc.hpp"
#include "oracles.hpp"

using namespace graphfx;

namespace {

CsrGraph<weight_t> undirected(vertex_t n, std::initializer_list<std::pair<vertex_t, vertex_t>> edges) {
  CooGraph<weight_t> coo;
  coo.num_vertices = n;
  for (auto [u, v] : edges) coo.add_edge(u, v);
  return coo_to_csr(coo, kUndirected);
}

CsrGraph<weight_t> star(vertex_t leaves) {
  CooGraph<weight_t> coo;
  coo.num_vertices = leaves + 1;
  for (vertex_t v = 1; v <= leaves; ++v) coo.add_edge(0, v);
  return coo_to_csr(coo, kUndirected);
}

CsrGraph<weight_t> complete(vertex_t n) {
  CooGraph<weight_t> coo;
  coo.num_vertices = n;
  for (vertex_t u = 0; u < n; ++u)
    for (vertex_t v = u + 1; v < n; ++v) coo.add_edge(u, v);
  return coo_to_csr(coo, kUndirected);
}

CsrGraph<weight_t> path(vertex_t n) {
  CooGraph<weight_t> coo;
  coo.num_vertices = n;
  for (vertex_t v = 0; v + 1 < n; ++v) coo.add_edge(v, v + 1);
  return coo_to_csr(coo, kUndirected);
}

constexpr auto kInfDepth = unvisited<depth_t>();
constexpr auto kInfDist = unvisited<std::uint64_t>();

std::vector<CsrGraph<weight_t>> random_graphs() {
  std::vector<CsrGraph<weight_t>> gs;
  std::mt19937_64 rng(12);
  for (int i = 0; i < 6; ++i) {
    gs.push_back(coo_to_csr(generate_erdos_renyi(400, i % 2 ? 0.01 : 0.003, rng()), kUndirected));
    gs.push_back(coo_to_csr(generate_rmat(9 + i % 2, 8, {}, rng()), kUndirected));
    gs.push_back(coo_to_csr(generate_rgg(9, rgg_default_threshold(9) * 3, rng()), kUndirected));
  }
  return gs;
}

}  // namespace

TEST(Bfs, Star) { EXPECT_EQ(bfs(star(3), 0).labels, (std::vector<depth_t>{0, 1, 1, 1})); }

TEST(Bfs, Singleton) {
  CsrGraph<weight_t> g({0, 0}, {});
  EXPECT_EQ(bfs(g, 0).labels, (std::vector<depth_t>{0}));
}

TEST(Bfs, InvalidSourceRejected) { EXPECT_THROW(bfs(star(3), 4), ConfigError); }

TEST(Bfs, UnreachableStaysUnvisited) {
  auto g = undirected(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(bfs(g, 0).labels, (std::vector<depth_t>{0, 1, kInfDepth, kInfDepth}));
}

TEST(Bfs, MatchesOracleWithConsistentPreds) {
  for (const auto& g : random_graphs()) {
    for (vertex_t s : {vertex_t{0}, vertex_t{7}}) {
      const auto want = oracle::bfs(g, s);
      for (auto dir : {Direction::Push, Direction::Pull, Direction::Auto}) {
        for (bool idem : {false, true}) {
          BfsOptions o;
          o.direction = dir;
          o.idempotent = idem;
          auto r = bfs(g, s, o);
          ASSERT_EQ(r.labels, want);
          for (vertex_t v = 0; v < g.num_vertices(); ++v) {
            if (v == s || r.labels[v] == kInfDepth) {
              EXPECT_EQ(r.preds[v], kInvalidVertex);
            } else {
              const vertex_t p = r.preds[v];
              ASSERT_NE(p, kInvalidVertex);
              EXPECT_TRUE(g.has_edge(p, v));
              EXPECT_EQ(r.labels[p] + 1, r.labels[v]);
            }
          }
        }
      }
    }
  }
}

TEST(Bfs, StatsAreConsistent) {
  auto g = coo_to_csr(generate_rmat(10, 8, {}, 2), kUndirected);
  auto r = bfs(g, 0);
  EXPECT_EQ(r.stats.iterations, r.stats.per_iteration.size());
  double sum = 0;
  for (const auto& it : r.stats.per_iteration) sum += it.runtime_ms;
  EXPECT_LE(sum, r.stats.total_runtime_ms + 1e-9);
  EXPECT_GT(r.stats.edges_traversed, 0u);
  if (r.stats.mteps) {
    EXPECT_DOUBLE_EQ(*r.stats.mteps, r.stats.edges_traversed / (r.stats.total_runtime_ms * 1e3));
  }
}

TEST(Sssp, WeightedPath) {
  CooGraph<weight_t> coo;
  coo.num_vertices = 3;
  coo.add_edge(0, 1, 5);
  coo.add_edge(1, 2, 7);
  auto g = coo_to_csr(coo, kUndirected);
  auto r = sssp(g, 0);
  EXPECT_EQ(r.labels, (std::vector<std::uint64_t>{0, 5, 12}));
  EXPECT_EQ(r.preds, (std::vector<vertex_t>{kInvalidVertex, 0, 1}));
}

TEST(Sssp, IsolatedSource) {
  auto g = undirected(3, {{1, 2}});
  EXPECT_EQ(sssp(g, 0).labels, (std::vector<std::uint64_t>{0, kInfDist, kInfDist}));
}

TEST(Sssp, UnitWeightsEqualBfsDepths) {
  for (const auto& g : random_graphs()) {
    auto d = sssp(g, 3).labels;
    auto b = bfs(g, 3).labels;
    for (vertex_t v = 0; v < g.num_vertices(); ++v) {
      if (b[v] == kInfDepth) {
        EXPECT_EQ(d[v], kInfDist);
      } else {
        EXPECT_EQ(d[v], b[v]);
      }
    }
  }
}

TEST(Sssp, MatchesDijkstraAcrossQueueSettings) {
  std::uint64_t seed = 1;
  for (const auto& base : random_graphs()) {
    auto g = assign_random_weights<weight_t>(base, 1, 64, seed++);
    const auto want = oracle::dijkstra(g, 0);
    for (bool pq : {true, false}) {
      for (std::uint64_t delta : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{16},
                                  std::uint64_t{1} << 40}) {
        SsspOptions<weight_t> o;
        o.use_priority_queue = pq;
        if (delta) o.delta = delta;
        auto r = sssp(g, 0, o);
        ASSERT_EQ(r.labels, want) << "pq=" << pq << " delta=" << delta;
        for (vertex_t v = 1; v < g.num_vertices(); ++v) {
          if (want[v] == kInfDist) continue;
          const vertex_t p = r.preds[v];
          ASSERT_NE(p, kInvalidVertex);
          auto nb = g.neighbors(p);
          const edge_t e = g.first_edge(p) + (std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
          EXPECT_EQ(r.labels[p] + g.weight(e), r.labels[v]);
        }
      }
    }
  }
}

TEST(Sssp, DefaultDeltaScalesMeanWeight) {
  auto g = assign_random_weights<weight_t>(complete(5), 4, 4, 1);
  EXPECT_EQ(default_delta(g), 128u);
}

TEST(Sssp, NoMteps) {
  auto g = assign_random_weights<weight_t>(complete(5), 1, 9, 1);
  EXPECT_FALSE(sssp(g, 0).stats.mteps.has_value());
}

TEST(Bc, PathMiddleVertex) {
  auto r = bc(path(3), 0);
  EXPECT_DOUBLE_EQ(r.bc_values[0], 0.0);
  EXPECT_DOUBLE_EQ(r.bc_values[1], 1.0);
  EXPECT_DOUBLE_EQ(r.bc_values[2], 0.0);
}

TEST(Bc, StarFromLeaf) {
  auto r = bc(star(5), 1);
  EXPECT_DOUBLE_EQ(r.bc_values[0], 4.0);  // n - 2 leaves reached through the center
  for (vertex_t v = 1; v <= 5; ++v) EXPECT_DOUBLE_EQ(r.bc_values[v], 0.0);
}

TEST(Bc, TriangleHasNoDependency) {
  for (vertex_t s = 0; s < 3; ++s) {
    for (double x : bc(complete(3), s).bc_values) EXPECT_DOUBLE_EQ(x, 0.0);
  }
}

TEST(Bc, MatchesBrandesBothReductions) {
  for (const auto& g : random_graphs()) {
    const auto want = oracle::brandes(g, 5);
    for (bool det : {true, false}) {
      BcOptions o;
      o.deterministic_reduction = det;
      auto r = bc(g, 5, o);
      for (vertex_t v = 0; v < g.num_vertices(); ++v) {
        EXPECT_LE(std::abs(r.bc_values[v] - want[v]), 1e-6 * std::max(1.0, std::abs(want[v])));
      }
    }
  }
}

TEST(Bc, MultipleSourcesSum) {
  auto g = coo_to_csr(generate_rmat(8, 8, {}, 9), kUndirected);
  const vertex_t sources[] = {0, 1, 2};
  auto r = bc(g, std::span<const vertex_t>(sources));
  for (vertex_t v = 0; v < g.num_vertices(); ++v) {
    double want = 0;
    for (auto s : sources) want += oracle::brandes(g, s)[v];
    EXPECT_NEAR(r.bc_values[v], want, 1e-6 * std::max(1.0, want));
  }
}

TEST(Bc, MtepsCountsBothPasses) {
  auto g = coo_to_csr(generate_rmat(10, 8, {}, 9), kUndirected);
  auto r = bc(g, 0);
  ASSERT_TRUE(r.stats.mteps.has_value());
  EXPECT_DOUBLE_EQ(*r.stats.mteps, 2.0 * r.stats.edges_traversed / (r.stats.total_runtime_ms * 1e3));
}

TEST(Cc, TwoDisjointEdges) {
  auto r = cc(undirected(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(r.num_components, 2u);
  EXPECT_EQ(r.component[0], r.component[1]);
  EXPECT_EQ(r.component[2], r.component[3]);
  EXPECT_NE(r.component[0], r.component[2]);
}

TEST(Cc, NoEdges) {
  CsrGraph<weight_t> g({0, 0, 0, 0, 0, 0}, {}, {}, true);
  auto r = cc(g);
  EXPECT_EQ(r.num_components, 5u);
}

TEST(Cc, ConnectedPath) {
  auto r = cc(path(10));
  EXPECT_EQ(r.num_components, 1u);
  for (auto c : r.component) EXPECT_EQ(c, r.component[0]);
}

TEST(Cc, FirstHookWritesLowerIdIntoHigher) {
  auto r = cc(undirected(2, {{0, 1}}));
  EXPECT_EQ(r.component, (std::vector<vertex_t>{0, 0}));
}

TEST(Cc, DirectedRejected) {
  CsrGraph<weight_t> g({0, 1, 1}, {1});
  EXPECT_THROW(cc(g), DataError);
}

TEST(Cc, MatchesUnionFind) {
  for (const auto& g : random_graphs()) {
    auto r = cc(g);
    const auto want = oracle::components(g);
    EXPECT_TRUE(oracle::same_partition(r.component, want));
    EXPECT_EQ(r.num_components, std::set<vertex_t>(want.begin(), want.end()).size());
  }
}

TEST(PageRank, TriangleIsUniform) {
  PagerankOptions o;
  o.epsilon = 1e-8;
  auto r = pagerank(complete(3), o);
  for (double x : r.rank) EXPECT_NEAR(x, 1.0 / 3, 1e-12);
}

TEST(PageRank, SingleVertex) {
  CsrGraph<weight_t> g({0, 0}, {});
  auto r = pagerank(g);
  ASSERT_EQ(r.rank.size(), 1u);
  EXPECT_NEAR(r.rank[0], 1.0, 1e-12);
}

TEST(PageRank, DirectedPathOneStep) {
  CsrGraph<weight_t> g({0, 1, 2, 2}, {1, 2});
  PagerankOptions o;
  o.max_iters = 1;
  auto r = pagerank(g, o);
  // Uniform 1/3; vertex 2 dangles, its 1/3 spreads evenly.
  const double d = 0.85, base = (1 - d) / 3 + d * (1.0 / 3) / 3;
  EXPECT_NEAR(r.rank[0], base, 1e-15);
  EXPECT_NEAR(r.rank[1], base + d / 3, 1e-15);
  EXPECT_NEAR(r.rank[2], base + d / 3, 1e-15);
  const auto want = oracle::pagerank(g, 0.85, 1);
  for (int v = 0; v < 3; ++v) EXPECT_NEAR(r.rank[v], want[v], 1e-15);
  EXPECT_EQ(r.stats.iterations, 1u);
}

TEST(PageRank, KIterationsMatchPowerIteration) {
  for (const auto& g : random_graphs()) {
    for (std::size_t k : {1u, 3u, 10u}) {
      for (bool det : {true, false}) {
        PagerankOptions o;
        o.max_iters = k;
        o.epsilon = 1e-300;
        o.deterministic_reduction = det;
        auto r = pagerank(g, o);
        EXPECT_EQ(r.stats.iterations, k);
        const auto want = oracle::pagerank(g, 0.85, k);
        double l1 = 0;
        for (vertex_t v = 0; v < g.num_vertices(); ++v) l1 += std::abs(r.rank[v] - want[v]);
        EXPECT_LE(l1, 1e-6);
      }
    }
  }
}

TEST(PageRank, ConvergesAndStops) {
  auto g = coo_to_csr(generate_rmat(9, 8, {}, 1), kUndirected);
  auto r = pagerank(g);
  EXPECT_LT(r.stats.iterations, 100u);
  EXPECT_EQ(r.stats.per_iteration.back().frontier_out, 0u);
  double sum = 0;
  for (double x : r.rank) sum += x;
  EXPECT_NEAR(sum, 1.0, 1e-9);
}

TEST(PageRank, RejectsBadParameters) {
  PagerankOptions o;
  o.damping = 1.0;
  EXPECT_THROW(pagerank(complete(3), o), ConfigError);
  o.damping = 0.85;
  o.epsilon = 0;
  EXPECT_THROW(pagerank(complete(3), o), ConfigError);
}

TEST(Tc, Triangle) { EXPECT_EQ(tc(complete(3)).total_triangles, 1u); }
TEST(Tc, Star) { EXPECT_EQ(tc(star(6)).total_triangles, 0u); }
TEST(Tc, K4) { EXPECT_EQ(tc(complete(4)).total_triangles, 4u); }

TEST(Tc, DirectedRejected) {
  CsrGraph<weight_t> g({0, 1, 1}, {1});
  EXPECT_THROW(tc(g), DataError);
}

TEST(Tc, OrientationHalvesAndBreaksTiesById) {
  auto r = tc(complete(4));
  EXPECT_EQ(r.oriented.num_edges(), 6u);
  // All degrees tie, so every edge points from the smaller id.
  for (vertex_t u = 0; u < 4; ++u)
    for (auto v : r.oriented.neighbors(u)) EXPECT_LT(u, v);
  auto s = tc(star(4));
  EXPECT_EQ(s.oriented.degree(0), 4u);  // center has the larger degree
}

TEST(Tc, MatchesBruteForce) {
  for (const auto& g : random_graphs()) {
    auto r = tc(g);
    EXPECT_EQ(r.oriented.num_edges() * 2, g.num_edges());
    EXPECT_EQ(r.total_triangles, oracle::triangles(g));
    std::uint64_t sum = 0;
    for (auto c : r.per_edge_counts) sum += c;
    EXPECT_EQ(sum, r.total_triangles);
  }
}
