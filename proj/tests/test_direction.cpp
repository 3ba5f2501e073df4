#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "graphfx/graph/build.hpp"
#include "graphfx/graph/generators.hpp"
#include "graphfx/primitives/bfs.hpp"
#include "oracles.hpp"

using namespace graphfx;

namespace {

DirectionState state(TraversalMode mode, double n_u, double n_f, double m, double n, double a,
                     double b) {
  return {mode, n_u, n_f, m, n, a, b};
}

CsrGraph<weight_t> path(vertex_t n) {
  CooGraph<weight_t> coo;
  coo.num_vertices = n;
  for (vertex_t v = 0; v + 1 < n; ++v) coo.add_edge(v, v + 1);
  return coo_to_csr(coo, kUndirected);
}

}  // namespace

TEST(Estimates, FrontierEdges) {
  auto e = estimate_mf_mu(state(TraversalMode::Push, 0, 4, 40, 10, 1, 1));
  EXPECT_DOUBLE_EQ(e.m_f, 16.0);
}

TEST(Estimates, NoUnvisitedGivesZero) {
  EXPECT_DOUBLE_EQ(estimate_mf_mu(state(TraversalMode::Push, 0, 4, 40, 10, 1, 1)).m_u, 0.0);
}

TEST(Estimates, UnvisitedVertexRatio) {
  EXPECT_DOUBLE_EQ(estimate_mf_mu(state(TraversalMode::Push, 5, 1, 40, 10, 1, 1)).m_u, 10.0);
  EXPECT_DOUBLE_EQ(
      estimate_mf_mu(state(TraversalMode::Push, 5, 1, 40, 10, 1, 1), UnvisitedEstimate::EdgeRatio).m_u,
      40.0);
}

TEST(Estimates, AllUnvisitedIsInfinite) {
  auto e = estimate_mf_mu(state(TraversalMode::Push, 10, 1, 40, 10, 1, 1));
  EXPECT_TRUE(std::isinf(e.m_u));
  EXPECT_EQ(decide_direction(state(TraversalMode::Push, 10, 10, 40, 10, 1e-9, 1)), TraversalMode::Push);
}

TEST(Decide, PushToPull) {
  // n=10, m=40, n_f=4 -> m_f=16; n_u=5 -> m_u=10; do_a=1 -> 16 > 10.
  EXPECT_EQ(decide_direction(state(TraversalMode::Push, 5, 4, 40, 10, 1, 1)), TraversalMode::Pull);
}

TEST(Decide, PullToPush) {
  // m_f = 1 (n_f=1, m=n=10), m_u = 10 (n_u=5), do_b=0.5 -> 1 < 5.
  EXPECT_EQ(decide_direction(state(TraversalMode::Pull, 5, 1, 10, 10, 1, 0.5)), TraversalMode::Push);
  EXPECT_EQ(decide_direction(state(TraversalMode::Pull, 5, 6, 10, 10, 1, 0.5)), TraversalMode::Pull);
}

TEST(Decide, HugeDoANeverLeavesPush) {
  // With n_u = 0 the unvisited estimate is 0 and any frontier switches.
  for (double n_f = 0; n_f <= 10; n_f += 1) {
    for (double n_u = 1; n_u < 10; n_u += 1) {
      EXPECT_EQ(decide_direction(state(TraversalMode::Push, n_u, n_f, 1e6, 10, 1e300, 0.2)),
                TraversalMode::Push);
    }
  }
}

TEST(Decide, MonotoneInDoA) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 10000; ++i) {
    const double n = 1000, m = 1000 * (1 + 20 * u(rng));
    const double n_u = std::floor(u(rng) * n), n_f = std::floor(u(rng) * n);
    const double a1 = std::pow(10, -5 + 5 * u(rng)), a2 = a1 * (1 + 10 * u(rng));
    // If the larger do_a switches, the smaller one does too.
    if (decide_direction(state(TraversalMode::Push, n_u, n_f, m, n, a2, 0.2)) == TraversalMode::Pull) {
      EXPECT_EQ(decide_direction(state(TraversalMode::Push, n_u, n_f, m, n, a1, 0.2)), TraversalMode::Pull);
    }
  }
}

TEST(Direction, NamesRoundTrip) {
  for (auto d : {Direction::Push, Direction::Pull, Direction::Auto}) {
    EXPECT_EQ(parse_direction(to_string(d)), d);
  }
  EXPECT_THROW(parse_direction("sideways"), ConfigError);
}

TEST(PullStep, PathFromSource) {
  auto g = path(3);
  std::vector<depth_t> labels{0, unvisited<depth_t>(), unvisited<depth_t>()};
  auto cond = [&](vertex_t u, vertex_t, edge_t) { return labels[u] == 0; };
  auto apply = [&](vertex_t, vertex_t v, edge_t) { labels[v] = 1; };
  auto r = pull_step(g, VertexFrontier{1, 2}, make_functors(cond, apply));
  EXPECT_EQ(std::vector<vertex_t>(r.active.begin(), r.active.end()), (std::vector<vertex_t>{1}));
  EXPECT_EQ(std::vector<vertex_t>(r.unvisited.begin(), r.unvisited.end()), (std::vector<vertex_t>{2}));
  EXPECT_EQ(labels[1], 1u);
  EXPECT_TRUE(g.reverse_built());
}

TEST(PullStep, DisconnectedRemainder) {
  CooGraph<weight_t> coo;
  coo.num_vertices = 4;
  coo.add_edge(0, 1);
  coo.add_edge(2, 3);
  auto g = coo_to_csr(coo, kUndirected);
  auto visited = [](vertex_t u, vertex_t, edge_t) { return u <= 1; };
  auto r = pull_step(g, VertexFrontier{2, 3}, make_functors(visited));
  EXPECT_TRUE(r.active.empty());
  EXPECT_EQ(r.unvisited.size(), 2u);
}

TEST(PullStep, AllAdjacentToVisited) {
  CooGraph<weight_t> coo;
  coo.num_vertices = 4;
  for (vertex_t v = 1; v < 4; ++v) coo.add_edge(0, v);
  auto g = coo_to_csr(coo, kUndirected);
  auto r = pull_step(g, VertexFrontier{1, 2, 3},
                     make_functors([](vertex_t u, vertex_t, edge_t) { return u == 0; }));
  EXPECT_EQ(r.active.size(), 3u);
  EXPECT_TRUE(r.unvisited.empty());
}

TEST(PullStep, PartitionsInput) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = coo_to_csr(generate_erdos_renyi(300, 0.01, rng()), kUndirected);
    std::vector<std::uint8_t> seen(300);
    for (auto& s : seen) s = rng() % 4 == 0;
    std::vector<vertex_t> un;
    for (vertex_t v = 0; v < 300; ++v)
      if (!seen[v]) un.push_back(v);
    auto r = pull_step(g, VertexFrontier(un),
                       make_functors([&](vertex_t u, vertex_t, edge_t) { return seen[u] != 0; }));
    std::vector<vertex_t> both(r.active.begin(), r.active.end());
    both.insert(both.end(), r.unvisited.begin(), r.unvisited.end());
    std::sort(both.begin(), both.end());
    EXPECT_EQ(both, un);
    for (auto v : r.active) {
      bool any = false;
      for (auto u : g.neighbors(v)) any |= seen[u] != 0;
      EXPECT_TRUE(any);
    }
  }
}

TEST(DirectionBfs, PathPullAfterFirstIteration) {
  auto g = path(3);
  BfsOptions o;
  o.direction = Direction::Pull;
  auto r = bfs(g, 0, o);
  EXPECT_EQ(r.labels, (std::vector<depth_t>{0, 1, 2}));
  EXPECT_EQ(r.labels, bfs(g, 0).labels);
  ASSERT_GE(r.stats.per_iteration.size(), 2u);
  EXPECT_EQ(r.stats.per_iteration[0].mode, TraversalMode::Push);
  EXPECT_EQ(r.stats.per_iteration[1].mode, TraversalMode::Pull);
}

TEST(DirectionBfs, AutoSwitchesOnDenseGraph) {
  auto g = coo_to_csr(generate_rmat(12, 16, {}, 3), kUndirected);
  BfsOptions o;
  o.direction = Direction::Auto;
  auto r = bfs(g, 0, o);
  EXPECT_EQ(r.labels, bfs(g, 0).labels);
  EXPECT_GE(r.stats.direction_switches, 1u);
}

TEST(DirectionBfs, LoggedDecisionsReplay) {
  auto g = coo_to_csr(generate_rmat(11, 8, {}, 4), kUndirected);
  BfsOptions o;
  o.direction = Direction::Auto;
  o.direction_config.do_a = 0.01;
  o.direction_config.do_b = 0.1;
  auto r = bfs(g, 1, o);
  const double n = g.num_vertices(), m = g.num_edges();
  bool pull = false;
  for (const auto& it : r.stats.per_iteration) {
    ASSERT_TRUE(it.unvisited_estimate.has_value());
    const double n_u = *it.unvisited_estimate, n_f = it.frontier_in;
    const double m_f = n_f * m / n;
    const double m_u = n_u >= n ? INFINITY : n_u * n / (n - n_u);
    pull = pull ? !(m_f < m_u * 0.1) : (m_f > m_u * 0.01);
    EXPECT_EQ(it.mode == TraversalMode::Pull, pull) << "iteration " << it.iteration;
  }
}
