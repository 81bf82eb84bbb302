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

#include "orient/pco.h"

#include <gtest/gtest.h>

#include "orient/oracle.h"
#include "support/testing.h"

namespace orient {
namespace {

using testing::ConstrainAll;
using testing::CycleGraph;
using testing::PathGraph;

TEST(SolvePcoTest, EvenFourCycle) {
  Instance inst = CycleGraph(4);
  ConstrainAll(inst, 0);
  PcoResult r = SolvePco(inst);
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(Verify(inst, *r.orientation).feasible());
  for (int d : Indegrees(inst.graph, *r.orientation)) EXPECT_EQ(d % 2, 0);
}

TEST(SolvePcoTest, EvenTriangleInfeasible) {
  Instance inst = CycleGraph(3);
  ConstrainAll(inst, 0);
  PcoResult r = SolvePco(inst);
  EXPECT_FALSE(r.feasible);
  EXPECT_FALSE(r.orientation);
}

TEST(SolvePcoTest, PathWithEvenMiddle) {
  Instance inst = PathGraph(3);
  inst.parity.set(1, 0);
  PcoResult r = SolvePco(inst);
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(Verify(inst, *r.orientation).feasible());
  EXPECT_EQ(Indegrees(inst.graph, *r.orientation)[1] % 2, 0);
}

TEST(SolvePcoTest, RejectsConflicts) {
  Instance inst = PathGraph(3);
  inst.AddConflict(1, {0, 1}, ConflictKind::kExact);
  EXPECT_THROW(SolvePco(inst), InputError);
}

TEST(SolvePcoTest, HonoursForcedEdges) {
  Instance inst = CycleGraph(4);
  ConstrainAll(inst, 0);
  inst.forced[0] = 0;
  inst.forced[1] = 2;
  PcoResult r = SolvePco(inst);
  ASSERT_TRUE(r.feasible);
  EXPECT_TRUE(Verify(inst, *r.orientation).feasible());
}

TEST(SolvePcoMaxTest, Examples) {
  Instance tri = CycleGraph(3);
  ConstrainAll(tri, 0);
  EXPECT_EQ(SolvePcoMax(tri).satisfied_count, 2);
  Instance c4 = CycleGraph(4);
  ConstrainAll(c4, 0);
  EXPECT_EQ(SolvePcoMax(c4).satisfied_count, 4);
  Instance two = Instance::WithVertices(6);
  for (int base : {0, 3}) {
    for (int i = 0; i < 3; ++i) two.AddEdge(base + i, base + (i + 1) % 3);
  }
  ConstrainAll(two, 0);
  PcoResult r = SolvePcoMax(two);
  EXPECT_EQ(r.satisfied_count, 4);
  EXPECT_EQ(r.constrained_count, 6);
  EXPECT_EQ(SatisfiedParities(two, *r.orientation), 4);
}

TEST(SolvePcoMaxTest, SacrificesLargestConstrainedVertex) {
  Instance tri = CycleGraph(3);
  ConstrainAll(tri, 0);
  PcoResult r = SolvePcoMax(tri);
  std::vector<int> in = Indegrees(tri.graph, *r.orientation);
  EXPECT_EQ(in[2] % 2, 1);
}

TEST(SolvePcoTest, MatchesOracleOnSmallInstances) {
  testing::Rng rng(101);
  testing::RandomSpec spec;
  spec.max_vertices = 6;
  spec.max_edges = 12;
  spec.max_conflicts = 0;
  spec.max_forced = 2;
  for (int round = 0; round < 400; ++round) {
    Instance inst = testing::RandomInstance(rng, spec);
    OracleResult oracle = EnumerateBest(inst);
    PcoResult r = SolvePco(inst);
    ASSERT_EQ(r.feasible, oracle.feasible) << "round " << round;
    if (r.feasible) EXPECT_TRUE(Verify(inst, *r.orientation).feasible());
    if (inst.forced.empty()) {
      PcoResult best = SolvePcoMax(inst);
      EXPECT_EQ(best.satisfied_count, oracle.best_satisfied_parities) << "round " << round;
      EXPECT_EQ(SatisfiedParities(inst, *best.orientation), best.satisfied_count);
    }
  }
}

TEST(SolvePcoMaxTest, ParityIdentityOnConnectedConstrainedGraphs) {
  testing::Rng rng(7);
  for (int round = 0; round < 200; ++round) {
    Instance inst = testing::CycleGraph(5);
    for (int extra = round % 6; extra > 0; --extra) {
      VertexId u = static_cast<VertexId>(rng() % 5);
      inst.AddEdge(u, static_cast<VertexId>((u + 1 + rng() % 4) % 5));
    }
    int sum = 0;
    for (VertexId v = 0; v < 5; ++v) {
      int p = static_cast<int>(rng() % 2);
      inst.parity.set(v, p);
      sum += p;
    }
    int expected = (sum - inst.graph.edge_count()) % 2 == 0 ? 5 : 4;
    EXPECT_EQ(SolvePcoMax(inst).satisfied_count, expected);
  }
}

TEST(SolvePcoTest, Deterministic) {
  testing::Rng rng(9);
  testing::RandomSpec spec;
  spec.max_conflicts = 0;
  spec.max_edges = 20;
  for (int round = 0; round < 50; ++round) {
    Instance inst = testing::RandomInstance(rng, spec);
    EXPECT_EQ(SolvePcoMax(inst).orientation, SolvePcoMax(inst).orientation);
  }
}

}  // namespace
}  // namespace orient
