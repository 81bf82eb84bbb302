// Copyright 2026 The Orient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orient/matching.h"

#include <gtest/gtest.h>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "support/testing.h"

namespace orient {
namespace {

SimpleGraph Cycle(int n) {
  SimpleGraph g;
  g.node_count = n;
  for (int i = 0; i < n; ++i) g.links.emplace_back(i, (i + 1) % n);
  return g;
}

int BoostMatchingSize(const SimpleGraph& g) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph bg(g.node_count);
  for (auto [a, b] : g.links) boost::add_edge(a, b, bg);
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(g.node_count);
  EXPECT_TRUE(boost::checked_edmonds_maximum_cardinality_matching(bg, &mate[0]));
  return static_cast<int>(boost::matching_size(bg, &mate[0]));
}

TEST(MaxMatchingTest, Examples) {
  SimpleGraph p3{3, {{0, 1}, {1, 2}}};
  EXPECT_EQ(MaxMatching(p3).size(), 1);
  EXPECT_EQ(MaxMatching(Cycle(4)).size(), 2);
  EXPECT_EQ(MaxMatching(Cycle(5)).size(), 2);
  EXPECT_EQ(testing::BruteForceMatchingSize(Cycle(5)), 2);
}

TEST(MaxMatchingTest, BlossomNeedsShrinking) {
  // A triangle with a stem on each of two corners; greedy picks the
  // triangle link first and the augmenting path runs through the blossom.
  SimpleGraph g{6, {{1, 2}, {0, 1}, {1, 3}, {2, 3}, {3, 4}, {2, 5}}};
  Matching m = MaxMatching(g);
  EXPECT_EQ(m.size(), 3);
  EXPECT_TRUE(IsMatchingOf(g, m));
}

TEST(MaxMatchingTest, EmptyAndIsolated) {
  EXPECT_EQ(MaxMatching(SimpleGraph{}).size(), 0);
  Matching m = MaxMatching(SimpleGraph{4, {}});
  EXPECT_EQ(m.exposed_count(), 4);
}

TEST(MaxMatchingTest, ValidateRejectsBadLinks) {
  EXPECT_THROW((SimpleGraph{2, {{0, 0}}}.Validate()), std::exception);
  EXPECT_THROW((SimpleGraph{2, {{0, 1}, {1, 0}}}.Validate()), std::exception);
  EXPECT_THROW((SimpleGraph{2, {{0, 2}}}.Validate()), std::exception);
}

TEST(MaxMatchingTest, MatchesBruteForceOnSmallGraphs) {
  testing::Rng rng(3);
  for (int round = 0; round < 600; ++round) {
    int n = 1 + round % 10;
    SimpleGraph g = testing::RandomSimpleGraph(rng, n, 0.15 + 0.1 * (round % 7));
    Matching m = MaxMatching(g);
    ASSERT_TRUE(IsMatchingOf(g, m));
    ASSERT_EQ(m.size(), testing::BruteForceMatchingSize(g)) << "round " << round;
  }
}

TEST(MaxMatchingTest, NoAugmentingPathOnLargerGraphs) {
  testing::Rng rng(4);
  for (int round = 0; round < 100; ++round) {
    SimpleGraph g = testing::RandomSimpleGraph(rng, 14, 0.2);
    Matching m = MaxMatching(g);
    ASSERT_TRUE(IsMatchingOf(g, m));
    EXPECT_FALSE(testing::HasAugmentingPath(g, m));
  }
}

TEST(MaxMatchingTest, AgreesWithBoostOnLargeGraphs) {
  testing::Rng rng(5);
  for (int round = 0; round < 40; ++round) {
    SimpleGraph g = testing::RandomSimpleGraph(rng, 60 + round, 3.0 / (60 + round));
    Matching m = MaxMatching(g);
    ASSERT_TRUE(IsMatchingOf(g, m));
    EXPECT_EQ(m.size(), BoostMatchingSize(g));
  }
}

TEST(MaxMatchingTest, Deterministic) {
  testing::Rng rng(6);
  SimpleGraph g = testing::RandomSimpleGraph(rng, 30, 0.2);
  EXPECT_EQ(MaxMatching(g).mate, MaxMatching(g).mate);
}

}  // namespace
}  // namespace orient
