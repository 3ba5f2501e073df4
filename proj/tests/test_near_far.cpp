#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "graphfx/queue/near_far.hpp"

using namespace graphfx;

namespace {

template <typename F>
std::multiset<vertex_t> bag(const F& f) {
  return {f.begin(), f.end()};
}

}  // namespace

TEST(Split, ByThreshold) {
  std::vector<std::uint64_t> key{3, 12, 7};
  auto r = split(VertexFrontier{0, 1, 2}, [&](vertex_t v) { return key[v]; }, std::uint64_t{10});
  EXPECT_EQ(bag(r.near), (std::multiset<vertex_t>{0, 2}));
  EXPECT_EQ(bag(r.far), (std::multiset<vertex_t>{1}));
}

TEST(Split, ZeroThresholdAllFar) {
  auto r = split(VertexFrontier{4, 5}, [](vertex_t) { return std::uint64_t{0}; }, std::uint64_t{0});
  EXPECT_TRUE(r.near.empty());
  EXPECT_EQ(r.far.size(), 2u);
}

TEST(Split, EmptyInput) {
  auto r = split(VertexFrontier{}, [](vertex_t) { return 1u; }, 5u);
  EXPECT_TRUE(r.near.empty());
  EXPECT_TRUE(r.far.empty());
}

TEST(Split, ConservesMultiset) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<vertex_t> ids(rng() % 5000);
    for (auto& x : ids) x = static_cast<vertex_t>(rng() % 1000);
    const std::uint64_t t = rng() % 1000;
    auto key = [](vertex_t v) { return std::uint64_t{v}; };
    auto r = split(VertexFrontier(ids), key, t);
    auto all = bag(r.near);
    for (auto x : r.far) all.insert(x);
    EXPECT_EQ(all, bag(VertexFrontier(ids)));
    for (auto x : r.near) EXPECT_LT(key(x), t);
    for (auto x : r.far) EXPECT_GE(key(x), t);
  }
}

TEST(Pile, AdvanceBucketResplits) {
  std::vector<std::uint64_t> key{12, 25};
  auto k = [&](vertex_t v) { return key[v]; };
  NearFarPile<std::uint64_t> pile(10, 10);
  pile.split_into(VertexFrontier{0, 1}, k);
  EXPECT_TRUE(pile.near().empty());
  pile.advance_bucket(k);
  EXPECT_EQ(pile.threshold(), 20u);
  EXPECT_EQ(bag(pile.near()), (std::multiset<vertex_t>{0}));
  EXPECT_EQ(bag(pile.far()), (std::multiset<vertex_t>{1}));
}

TEST(Pile, EmptyBucketAdvancesAgain) {
  auto k = [](vertex_t) { return std::uint64_t{35}; };
  NearFarPile<std::uint64_t> pile(10, 10);
  pile.split_into(VertexFrontier{3}, k);
  pile.advance_bucket(k);
  EXPECT_TRUE(pile.near().empty());
  EXPECT_EQ(pile.far().size(), 1u);
  pile.advance_bucket(k);
  pile.advance_bucket(k);
  EXPECT_EQ(pile.threshold(), 40u);
  EXPECT_EQ(bag(pile.near()), (std::multiset<vertex_t>{3}));
}

TEST(Pile, SingleItemWithinCeilKeyOverDelta) {
  for (std::uint64_t keyv : {1u, 9u, 10u, 11u, 99u, 100u, 101u}) {
    auto k = [&](vertex_t) { return keyv; };
    const std::uint64_t delta = 10;
    NearFarPile<std::uint64_t> pile(0, delta);
    pile.split_into(VertexFrontier{0}, k);
    std::uint64_t advances = 0;
    while (pile.near().empty()) {
      pile.advance_bucket(k);
      ++advances;
    }
    EXPECT_LE(advances, (keyv + delta - 1) / delta + (keyv % delta == 0 ? 1 : 0));
  }
}

TEST(Pile, AdvanceWithNonEmptyNearIsRejected) {
  auto k = [](vertex_t) { return std::uint64_t{1}; };
  NearFarPile<std::uint64_t> pile(10, 10);
  pile.split_into(VertexFrontier{0}, k);
  EXPECT_THROW(pile.advance_bucket(k), std::logic_error);
}

TEST(Pile, RejectsZeroDelta) { EXPECT_THROW(NearFarPile<std::uint64_t>(0, 0), ConfigError); }

TEST(Pile, ConservesDistinctItems) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> key(500);
    for (auto& x : key) x = rng() % 2000;
    auto k = [&](vertex_t v) { return key[v]; };
    NearFarPile<std::uint64_t> pile(100, 1 + rng() % 300);
    std::vector<vertex_t> ids(500);
    std::iota(ids.begin(), ids.end(), 0);
    pile.split_into(VertexFrontier(ids), k);
    std::multiset<vertex_t> popped;
    while (!pile.near().empty() || !pile.far().empty()) {
      for (auto v : pile.near()) {
        EXPECT_LT(key[v], pile.threshold());
        popped.insert(v);
      }
      pile.near().clear();
      if (!pile.far().empty()) pile.advance_bucket(k);
    }
    EXPECT_EQ(popped, std::multiset<vertex_t>(ids.begin(), ids.end()));
  }
}

TEST(Pile, DropsStaleAndRepeatedEntries) {
  // Vertex 0 was postponed at key 30 and again at key 25; by the time its
  // bucket comes up both entries read the current key, and only one survives.
  std::vector<std::uint64_t> key{30, 40};
  auto k = [&](vertex_t v) { return key[v]; };
  NearFarPile<std::uint64_t> pile(10, 10);
  pile.split_into(VertexFrontier{0, 1}, k);
  key[0] = 25;
  pile.split_into(VertexFrontier{0}, k);
  pile.advance_bucket(k);  // [10, 20): nothing
  pile.advance_bucket(k);  // [20, 30)
  EXPECT_EQ(bag(pile.near()), (std::multiset<vertex_t>{0}));
  // An entry whose key fell below an already processed bucket is stale.
  pile.near().clear();
  key[1] = 5;
  pile.advance_bucket(k);
  EXPECT_TRUE(pile.near().empty());
  EXPECT_TRUE(pile.far().empty());
}
