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

#ifndef ORIENT_REDUCTIONS_H_
#define ORIENT_REDUCTIONS_H_

#include <optional>
#include <vector>

#include "orient/graph.h"

namespace orient {

// Role of a vertex in a reduced instance. Names follow the gadget they
// belong to.
enum class VertexRole {
  kOriginal,
  kParityDummy,     // pendant v' turning an odd constraint even
  kHub,             // w, joined to every unconstrained vertex
  kHubPendant,      // w', fixes the total edge parity
  kPathHead,        // v1' of the per-vertex path
  kPathMiddle,      // v2'
  kPathTail,        // v3' (even-constrained vertices only)
  kBalanceHub,      // u0', joined to v2' of every unconstrained vertex
  kBalancePendant,  // u1'
  kNetworkEntry,    // switch vertex receiving two lines
  kNetworkExit,     // switch vertex emitting two lines
  kGadgetCenter,    // u0 of a subset-conflict gadget
  kGadgetRelay,     // u_i, new endpoint of conflict edge e_i
  kGadgetPendant,   // w of a subset-conflict gadget
  kGadgetParity,    // v' pendant for odd-size subset conflicts
};

const char* ToString(VertexRole role);

// Correspondence between an instance and its reduction.
struct ReductionMap {
  int original_vertex_count = 0;
  std::vector<EdgeId> edge_map;          // original edge -> reduced edge
  std::vector<VertexId> vertex_origin;   // reduced vertex -> original or -1
  std::vector<VertexRole> vertex_role;   // per reduced vertex

  int added_vertex_count(VertexRole role) const;
};

struct Reduction {
  Instance instance;
  ReductionMap map;
};

// Orientation of the original instance induced by an orientation of the
// reduced one: each original edge takes the direction of its image, and a
// head on a relay/path/network vertex translates back to the vertex it
// stands for. Throws std::logic_error if the map is inconsistent.
Orientation PullBack(const Orientation& reduced, const ReductionMap& map);

enum class ConflictMode { kNone, kExact, kSubset };

// Parity-constrained orientation to even orientation. Odd-constrained
// vertices get a pendant dummy; a hub w is joined to every unconstrained
// vertex, plus a pendant w' when the edge total is odd. Every vertex of the
// output is even-constrained. In exact mode odd-size conflicts at odd or
// unconstrained vertices absorb the dummy/hub edge; in subset mode conflicts
// carry over unchanged. Original vertices and edges keep their ids.
Reduction PcoToEo(const Instance& inst, ConflictMode mode);

// Switch-based gadget with k input and k output edges; every valid
// orientation conserves the number of rightward edges, and any mixed input
// can be routed so that b1 points right and b2 left.
struct SwitchingNetwork {
  struct Switch {
    VertexId entry = 0;  // receives two lines, joined to exit by two edges
    VertexId exit = 0;
    int stage = 0;
  };

  int k = 0;
  int stage_count = 0;
  // Standalone graph: internal vertices even-constrained, leaves free.
  Instance graph;
  std::vector<Switch> switches;
  std::vector<VertexId> internal;       // nonleaf vertices
  std::vector<EdgeId> inputs;           // a_1..a_k
  std::vector<EdgeId> outputs;          // b_1..b_k
  std::vector<VertexId> input_leaves;   // far end of a_i
  std::vector<VertexId> output_leaves;  // far end of b_i

  int switches_in_stage(int stage) const;
  // Head of terminal edge `e` when it points right (into the network for
  // inputs, out of it for outputs).
  VertexId right_head(EdgeId e) const;
};

// Throws InputError for k < 2.
SwitchingNetwork BuildSwitchingNetwork(int k);

// Disjoint exact conflicts of size >= 2 to disjoint exact pairs with every
// vertex even. Each vertex becomes a path (v1', v2'[, v3']); edges outside
// conflicts and conflict pairs attach at v1'; a conflict of size k >= 3 is
// routed through a fresh switching network whose outputs b1, b2 form a pair
// at v1' and whose remaining outputs land on v2'. Exact conflicts already
// excluded by parity are dropped first. Requires no forced edges.
Reduction PcoDecToEo2dec(const Instance& inst);

// Disjoint subset conflicts on an all-even instance to disjoint exact pairs.
// Each conflict ({e_1..e_k}, v) moves e_i onto a relay u_i, joins a centre
// u0 to every relay, to v and to a pendant w, and forbids {u0v, u0w} at u0;
// odd k also hangs a pendant v' on v. Requires no forced edges.
Reduction EoDscToEo2dec(const Instance& inst);

struct DecisionResult {
  bool feasible = false;
  std::optional<Orientation> orientation;
};

// Parity-constrained orientation with pairwise disjoint exact conflicts of
// size >= 2. Throws UnsupportedError for size-1 exact conflicts.
DecisionResult SolvePcoDec(const Instance& inst);

// Parity-constrained orientation with pairwise disjoint subset conflicts.
DecisionResult SolvePcoDsc(const Instance& inst);

}  // namespace orient

#endif  // ORIENT_REDUCTIONS_H_
