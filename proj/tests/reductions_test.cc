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

#include "orient/reductions.h"

#include <gtest/gtest.h>

#include <cmath>

#include "orient/oracle.h"
#include "orient/pco.h"
#include "support/testing.h"

namespace orient {
namespace {

using testing::ConstrainAll;
using testing::CycleGraph;
using testing::PathGraph;

int CeilLog2(int k) {
  int s = 0;
  while ((1 << s) < k) ++s;
  return s;
}

// Fixes the inputs of `net` by `pattern` (bit i set: a_i points right).
Instance WithInputs(const SwitchingNetwork& net, unsigned pattern) {
  Instance inst = net.graph;
  for (int i = 0; i < net.k; ++i) {
    EdgeId a = net.inputs[i];
    inst.forced[a] = (pattern >> i & 1) ? net.right_head(a) : net.input_leaves[i];
  }
  return inst;
}

bool Right(const SwitchingNetwork& net, const Orientation& o, EdgeId e) {
  return o.head[e] == net.right_head(e);
}

TEST(PcoToEoTest, EvenConnectedInstanceOnlyGainsIsolatedHub) {
  Instance inst = CycleGraph(4);
  ConstrainAll(inst, 0);
  Reduction r = PcoToEo(inst, ConflictMode::kNone);
  EXPECT_EQ(r.instance.graph.edge_count(), 4);
  EXPECT_EQ(r.map.added_vertex_count(VertexRole::kParityDummy), 0);
  EXPECT_EQ(r.map.added_vertex_count(VertexRole::kHubPendant), 0);
  EXPECT_EQ(r.map.added_vertex_count(VertexRole::kHub), 1);
  EXPECT_EQ(PullBack(*EnumerateBest(r.instance).witness, r.map).size(), 4);
}

TEST(PcoToEoTest, OddPathVertexGetsDummyAndHub) {
  Instance inst = PathGraph(3);
  inst.parity.set(1, 1);
  Reduction r = PcoToEo(inst, ConflictMode::kNone);
  EXPECT_EQ(r.map.added_vertex_count(VertexRole::kParityDummy), 1);
  // 2 original + 1 dummy + 2 hub edges: odd, so the hub gets a pendant.
  EXPECT_EQ(r.map.added_vertex_count(VertexRole::kHubPendant), 1);
  EXPECT_EQ(r.instance.graph.edge_count() % 2, 0);
  for (VertexId v = 0; v < r.instance.graph.vertex_count(); ++v) {
    EXPECT_TRUE(r.instance.parity.constrained(v));
    EXPECT_EQ(r.instance.parity.parity(v), 0);
  }
  OracleResult reduced = EnumerateBest(r.instance);
  EXPECT_EQ(reduced.feasible, EnumerateBest(inst).feasible);
  EXPECT_TRUE(Verify(inst, PullBack(*reduced.witness, r.map)).feasible());
}

TEST(PcoToEoTest, OddSizedExactConflictAbsorbsDummyEdge) {
  Instance inst = Instance::WithVertices(4);
  for (VertexId v = 1; v < 4; ++v) inst.AddEdge(0, v);
  inst.parity.set(0, 1);
  inst.AddConflict(0, {0, 1, 2}, ConflictKind::kExact);
  Reduction r = PcoToEo(inst, ConflictMode::kExact);
  ASSERT_EQ(r.instance.conflicts.size(), 1u);
  EXPECT_EQ(r.instance.conflicts[0].size(), 4);
}

TEST(PcoToEoTest, RejectsMismatchedModeAndForced) {
  Instance inst = PathGraph(3);
  inst.AddConflict(1, {0, 1}, ConflictKind::kSubset);
  EXPECT_THROW(PcoToEo(inst, ConflictMode::kExact), InputError);
  EXPECT_THROW(PcoToEo(inst, ConflictMode::kNone), InputError);
  Instance forced = PathGraph(3);
  forced.forced[0] = 0;
  EXPECT_THROW(PcoToEo(forced, ConflictMode::kNone), InputError);
}

TEST(PcoToEoTest, PreservesFeasibility) {
  testing::Rng rng(31);
  for (ConflictMode mode : {ConflictMode::kNone, ConflictMode::kExact, ConflictMode::kSubset}) {
    testing::RandomSpec spec;
    spec.max_vertices = 4;
    spec.max_edges = 6;
    spec.disjoint = false;
    spec.max_conflicts = mode == ConflictMode::kNone ? 0 : 3;
    spec.min_conflict_size = mode == ConflictMode::kSubset ? 2 : 1;
    spec.kind = mode == ConflictMode::kSubset ? ConflictKind::kSubset : ConflictKind::kExact;
    for (int round = 0; round < 300; ++round) {
      Instance inst = testing::RandomInstance(rng, spec);
      Reduction r = PcoToEo(inst, mode);
      OracleResult reduced = EnumerateBest(r.instance);
      ASSERT_EQ(EnumerateBest(inst).feasible, reduced.feasible) << "round " << round;
      if (reduced.feasible) {
        EXPECT_TRUE(Verify(inst, PullBack(*reduced.witness, r.map)).feasible());
      }
    }
  }
}

TEST(SwitchingNetworkTest, RejectsSmallK) {
  EXPECT_THROW(BuildSwitchingNetwork(1), InputError);
}

TEST(SwitchingNetworkTest, TwoInputSwitchShape) {
  SwitchingNetwork net = BuildSwitchingNetwork(2);
  EXPECT_EQ(net.switches.size(), 1u);
  EXPECT_EQ(net.graph.graph.edge_count(), 6);
  EXPECT_EQ(net.graph.conflicts.size(), 4u);
  EXPECT_EQ(net.internal.size(), 2u);
}

TEST(SwitchingNetworkTest, EightInputsUseSevenSwitches) {
  SwitchingNetwork net = BuildSwitchingNetwork(8);
  EXPECT_EQ(net.switches.size(), 7u);
  EXPECT_EQ(net.stage_count, 3);
  EXPECT_EQ(net.switches_in_stage(0), 4);
  EXPECT_EQ(net.switches_in_stage(1), 2);
  EXPECT_EQ(net.switches_in_stage(2), 1);
}

TEST(SwitchingNetworkTest, StageStructureAndSize) {
  for (int k = 2; k <= 64; ++k) {
    SwitchingNetwork net = BuildSwitchingNetwork(k);
    EXPECT_EQ(net.stage_count, CeilLog2(k)) << "k=" << k;
    EXPECT_EQ(static_cast<int>(net.switches.size()), k - 1);
    for (int s = 0; s < net.stage_count; ++s) {
      int cap = (k + (1 << (s + 1)) - 1) >> (s + 1);
      EXPECT_LE(net.switches_in_stage(s), cap) << "k=" << k << " stage " << s;
      if ((k & (k - 1)) == 0) EXPECT_EQ(net.switches_in_stage(s), cap);
    }
    EXPECT_LE(static_cast<int>(net.internal.size()), 6 * k);
    EXPECT_EQ(static_cast<int>(net.inputs.size()), k);
    EXPECT_EQ(static_cast<int>(net.outputs.size()), k);
    EXPECT_TRUE(ValidateInstance(net.graph).empty());
  }
}

TEST(SwitchingNetworkTest, PropertiesHoldExhaustively) {
  for (int k = 2; k <= 6; ++k) {
    SwitchingNetwork net = BuildSwitchingNetwork(k);
    for (unsigned pattern = 0; pattern < (1u << k); ++pattern) {
      int right_in = __builtin_popcount(pattern);
      bool mixed = right_in > 0 && right_in < k;
      bool p2 = false;
      int64_t count = testing::ForEachFeasible(WithInputs(net, pattern), [&](const Orientation& o) {
        int right_out = 0;
        for (EdgeId b : net.outputs) right_out += Right(net, o, b);
        EXPECT_EQ(right_out, right_in) << "k=" << k << " pattern " << pattern;
        p2 = p2 || (Right(net, o, net.outputs[0]) && !Right(net, o, net.outputs[1]));
        return true;
      });
      EXPECT_GT(count, 0) << "k=" << k << " pattern " << pattern;
      if (mixed) EXPECT_TRUE(p2) << "k=" << k << " pattern " << pattern;
    }
  }
}

TEST(SwitchingNetworkTest, FourInputsOneRightAllowsFirstOutputRight) {
  SwitchingNetwork net = BuildSwitchingNetwork(4);
  bool found = false;
  testing::ForEachFeasible(WithInputs(net, 0b0001), [&](const Orientation& o) {
    found = Right(net, o, net.outputs[0]) && !Right(net, o, net.outputs[1]);
    return !found;
  });
  EXPECT_TRUE(found);
}

// Star with centre 0 and `k` leaves; all constrained even except the leaves.
Instance Star(int k) {
  Instance inst = Instance::WithVertices(k + 1);
  for (VertexId v = 1; v <= k; ++v) inst.AddEdge(0, v);
  inst.parity.set(0, 0);
  return inst;
}

TEST(PcoDecToEo2decTest, SixConflictUsesOneNetwork) {
  Instance inst = Star(6);
  inst.AddConflict(0, {0, 1, 2, 3, 4, 5}, ConflictKind::kExact);
  Reduction r = PcoDecToEo2dec(inst);
  EXPECT_EQ(r.map.added_vertex_count(VertexRole::kNetworkEntry), 5);
  VertexId head = -1;
  for (VertexId v = 0; v < r.instance.graph.vertex_count(); ++v) {
    if (r.map.vertex_role[v] == VertexRole::kPathHead && r.map.vertex_origin[v] == 0) head = v;
  }
  ASSERT_NE(head, -1);
  VertexId middle = head + 1;
  ASSERT_EQ(r.map.vertex_role[middle], VertexRole::kPathMiddle);
  int at_head = 0, at_middle = 0;
  for (const Edge& e : r.instance.graph.edges()) {
    VertexId other = e.has_endpoint(head) ? e.other(head) : -1;
    if (other != -1 && r.map.vertex_role[other] == VertexRole::kNetworkExit) ++at_head;
    other = e.has_endpoint(middle) ? e.other(middle) : -1;
    if (other != -1 && r.map.vertex_role[other] == VertexRole::kNetworkExit) ++at_middle;
  }
  EXPECT_EQ(at_head, 2);
  EXPECT_EQ(at_middle, 4);
  bool pair_at_head = false;
  for (const Conflict& c : r.instance.conflicts) {
    EXPECT_EQ(c.size(), 2);
    pair_at_head = pair_at_head || c.vertex == head;
  }
  EXPECT_TRUE(pair_at_head);
}

TEST(PcoDecToEo2decTest, PairsNeedNoNetwork) {
  Instance inst = CycleGraph(4);
  ConstrainAll(inst, 0);
  inst.AddConflict(0, {0, 3}, ConflictKind::kExact);
  Reduction r = PcoDecToEo2dec(inst);
  EXPECT_EQ(r.map.added_vertex_count(VertexRole::kNetworkEntry), 0);
  EXPECT_EQ(r.instance.conflicts.size(), 1u);
  EXPECT_EQ(r.map.edge_map, (std::vector<EdgeId>{0, 1, 2, 3}));
}

TEST(PcoDecToEo2decTest, RejectsSingletonsAndOverlap) {
  Instance single = Star(3);
  single.parity.set(0, 1);
  single.AddConflict(0, {0}, ConflictKind::kExact);
  EXPECT_THROW(PcoDecToEo2dec(single), UnsupportedError);
  Instance overlap = Star(3);
  overlap.AddConflict(0, {0, 1}, ConflictKind::kExact);
  overlap.AddConflict(0, {1, 2}, ConflictKind::kExact);
  EXPECT_THROW(PcoDecToEo2dec(overlap), InputError);
}

TEST(PcoDecToEo2decTest, NetworkCarriesConflictToFirstOutputs) {
  for (int k = 3; k <= 6; ++k) {
    // Even leaves force every edge into the centre, hitting the conflict.
    Instance inst = Star(k);
    ConstrainAll(inst, 0);
    inst.parity.set(0, k % 2);
    std::vector<EdgeId> all(k);
    for (int i = 0; i < k; ++i) all[i] = i;
    inst.AddConflict(0, all, ConflictKind::kExact);
    EXPECT_FALSE(DecideExhaustive(PcoDecToEo2dec(inst).instance).has_value()) << "k=" << k;
    Instance relaxed = inst;
    relaxed.conflicts.clear();
    EXPECT_TRUE(DecideExhaustive(PcoDecToEo2dec(relaxed).instance).has_value()) << "k=" << k;
  }
}

TEST(PcoDecToEo2decTest, PreservesFeasibilityWithLargeConflicts) {
  testing::Rng rng(44);
  testing::RandomSpec spec;
  spec.max_vertices = 5;
  spec.max_edges = 8;
  spec.kind = ConflictKind::kExact;
  spec.min_conflict_size = 3;
  spec.max_conflict_size = 5;
  int with_conflicts = 0;
  for (int round = 0; round < 600; ++round) {
    Instance inst = testing::RandomInstance(rng, spec);
    with_conflicts += inst.has_conflicts();
    Reduction r = PcoDecToEo2dec(inst);
    std::optional<Orientation> reduced = DecideExhaustive(r.instance);
    ASSERT_EQ(EnumerateBest(inst).feasible, reduced.has_value()) << "round " << round;
    if (reduced) EXPECT_TRUE(Verify(inst, PullBack(*reduced, r.map)).feasible());
  }
  EXPECT_GT(with_conflicts, 200);
}

TEST(PcoDecToEo2decTest, ReducedEdgeCountIsEven) {
  testing::Rng rng(41);
  testing::RandomSpec spec;
  spec.max_edges = 10;
  spec.kind = ConflictKind::kExact;
  spec.min_conflict_size = 2;
  spec.max_conflict_size = 5;
  for (int round = 0; round < 200; ++round) {
    Reduction r = PcoDecToEo2dec(testing::RandomInstance(rng, spec));
    EXPECT_EQ(r.instance.graph.edge_count() % 2, 0);
    EXPECT_TRUE(r.instance.pairwise_disjoint());
  }
}

TEST(PcoDecToEo2decTest, PreservesFeasibility) {
  testing::Rng rng(42);
  testing::RandomSpec spec;
  spec.max_vertices = 4;
  spec.max_edges = 6;
  spec.kind = ConflictKind::kExact;
  spec.min_conflict_size = 2;
  spec.max_conflict_size = 4;
  for (int round = 0; round < 1500; ++round) {
    Instance inst = testing::RandomInstance(rng, spec);
    Reduction r = PcoDecToEo2dec(inst);
    std::optional<Orientation> reduced = DecideExhaustive(r.instance);
    ASSERT_EQ(EnumerateBest(inst).feasible, reduced.has_value()) << "round " << round;
    if (reduced) EXPECT_TRUE(Verify(inst, PullBack(*reduced, r.map)).feasible());
  }
}

TEST(EoDscToEo2decTest, GadgetSizes) {
  for (int k : {2, 3, 4, 5}) {
    Instance inst = Star(k);
    ConstrainAll(inst, 0);
    std::vector<EdgeId> all(k);
    for (int i = 0; i < k; ++i) all[i] = i;
    inst.AddConflict(0, all, ConflictKind::kSubset);
    Reduction r = EoDscToEo2dec(inst);
    int added_vertices = r.instance.graph.vertex_count() - inst.graph.vertex_count();
    int added_edges = r.instance.graph.edge_count() - inst.graph.edge_count();
    EXPECT_EQ(added_vertices, k % 2 == 0 ? k + 2 : k + 3) << "k=" << k;
    EXPECT_EQ(added_edges, k % 2 == 0 ? k + 2 : k + 3) << "k=" << k;
    EXPECT_EQ(added_edges % 2, 0);
    EXPECT_EQ(r.instance.conflicts.size(), 1u);
    EXPECT_EQ(r.map.added_vertex_count(VertexRole::kGadgetRelay), k);
    EXPECT_EQ(r.map.added_vertex_count(VertexRole::kGadgetParity), k % 2);
  }
}

TEST(EoDscToEo2decTest, RelayHeadPullsBackToConflictVertex) {
  Instance inst = Star(2);
  ConstrainAll(inst, 0);
  inst.AddConflict(0, {0, 1}, ConflictKind::kSubset);
  Reduction r = EoDscToEo2dec(inst);
  Orientation reduced;
  for (EdgeId e = 0; e < r.instance.graph.edge_count(); ++e) {
    reduced.head.push_back(r.instance.graph.edge(e).u);
  }
  for (EdgeId e = 0; e < 2; ++e) {
    const Edge& image = r.instance.graph.edge(r.map.edge_map[e]);
    VertexId relay = r.map.vertex_role[image.u] == VertexRole::kGadgetRelay ? image.u : image.v;
    reduced.head[r.map.edge_map[e]] = relay;
  }
  EXPECT_EQ(PullBack(reduced, r.map).head, (std::vector<VertexId>{0, 0}));
}

TEST(EoDscToEo2decTest, FourCycleWithAdjacentPair) {
  Instance inst = CycleGraph(4);
  ConstrainAll(inst, 0);
  inst.AddConflict(1, {0, 1}, ConflictKind::kSubset);
  Reduction r = EoDscToEo2dec(inst);
  std::optional<Orientation> reduced = DecideExhaustive(r.instance);
  EXPECT_EQ(reduced.has_value(), EnumerateBest(inst).feasible);
}

TEST(EoDscToEo2decTest, PreservesFeasibility) {
  testing::Rng rng(43);
  testing::RandomSpec spec;
  spec.max_vertices = 4;
  spec.max_edges = 6;
  spec.free_probability = 0;
  spec.odd_probability = 0;
  spec.kind = ConflictKind::kSubset;
  spec.min_conflict_size = 2;
  spec.max_conflict_size = 4;
  for (int round = 0; round < 400; ++round) {
    Instance inst = testing::RandomInstance(rng, spec);
    Reduction r = EoDscToEo2dec(inst);
    std::optional<Orientation> reduced = DecideExhaustive(r.instance);
    ASSERT_EQ(EnumerateBest(inst).feasible, reduced.has_value()) << "round " << round;
    if (reduced) EXPECT_TRUE(Verify(inst, PullBack(*reduced, r.map)).feasible());
  }
}

TEST(EoDscToEo2decTest, RejectsNonEvenVertices) {
  Instance inst = Star(2);
  inst.AddConflict(0, {0, 1}, ConflictKind::kSubset);
  EXPECT_THROW(EoDscToEo2dec(inst), InputError);
}

TEST(PullBackTest, IdentityMap) {
  ReductionMap map;
  map.original_vertex_count = 3;
  map.edge_map = {0, 1};
  map.vertex_origin = {0, 1, 2};
  map.vertex_role.assign(3, VertexRole::kOriginal);
  Orientation o{{1, 2}};
  EXPECT_EQ(PullBack(o, map), o);
}

TEST(SolvePcoDecTest, NoConflictsAgreesWithBaseSolver) {
  testing::Rng rng(51);
  testing::RandomSpec spec;
  spec.max_conflicts = 0;
  spec.max_edges = 10;
  for (int round = 0; round < 200; ++round) {
    Instance inst = testing::RandomInstance(rng, spec);
    EXPECT_EQ(SolvePcoDec(inst).feasible, SolvePco(inst).feasible);
    EXPECT_EQ(SolvePcoDsc(inst).feasible, SolvePco(inst).feasible);
  }
}

TEST(SolvePcoDecTest, SingletonIsUnsupported) {
  Instance inst = Star(3);
  inst.AddConflict(0, {0}, ConflictKind::kExact);
  EXPECT_THROW(SolvePcoDec(inst), UnsupportedError);
}

TEST(SolvePcoDecTest, MatchesOracle) {
  testing::Rng rng(52);
  testing::RandomSpec spec;
  spec.max_vertices = 4;
  spec.max_edges = 6;
  spec.kind = ConflictKind::kExact;
  spec.min_conflict_size = 2;
  spec.max_conflict_size = 4;
  spec.max_forced = 1;
  for (int round = 0; round < 600; ++round) {
    Instance inst = testing::RandomInstance(rng, spec);
    DecisionResult d;
    try {
      d = SolvePcoDec(inst);
    } catch (const UnsupportedError&) {
      ASSERT_FALSE(inst.forced.empty());
      continue;
    }
    ASSERT_EQ(d.feasible, EnumerateBest(inst).feasible) << "round " << round;
    if (d.feasible) EXPECT_TRUE(Verify(inst, *d.orientation).feasible());
  }
}

TEST(SolvePcoDscTest, MatchesOracle) {
  testing::Rng rng(53);
  testing::RandomSpec spec;
  spec.max_vertices = 4;
  spec.max_edges = 6;
  spec.kind = ConflictKind::kSubset;
  spec.max_conflict_size = 4;
  spec.max_forced = 1;
  for (int round = 0; round < 600; ++round) {
    Instance inst = testing::RandomInstance(rng, spec);
    DecisionResult d = SolvePcoDsc(inst);
    ASSERT_EQ(d.feasible, EnumerateBest(inst).feasible) << "round " << round;
    if (d.feasible) EXPECT_TRUE(Verify(inst, *d.orientation).feasible());
  }
}

}  // namespace
}  // namespace orient
