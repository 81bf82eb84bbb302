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

#ifndef ORIENT_MATCHING_H_
#define ORIENT_MATCHING_H_

#include <cstdint>
#include <utility>
#include <vector>

namespace orient {

using NodeId = int32_t;

// Simple undirected graph: no loops, no parallel links.
struct SimpleGraph {
  int node_count = 0;
  std::vector<std::pair<NodeId, NodeId>> links;

  // Throws InputError on loops, duplicates or out-of-range nodes.
  void Validate() const;
};

struct Matching {
  // mate[v] is the partner of v, or -1 when v is exposed.
  std::vector<NodeId> mate;

  int size() const;
  int exposed_count() const;
  bool covers(NodeId v) const { return mate[v] != -1; }
  // Matched pairs (a, b) with a < b, ascending.
  std::vector<std::pair<NodeId, NodeId>> pairs() const;
};

// Maximum-cardinality matching in a general graph (Edmonds' blossom
// algorithm on top of a greedy initial matching). Deterministic for a fixed
// link order. O(V^3) worst case.
Matching MaxMatching(const SimpleGraph& g);

// True if `m` is a matching of `g`: mates are symmetric and every matched
// pair is a link of `g`.
bool IsMatchingOf(const SimpleGraph& g, const Matching& m);

}  // namespace orient

#endif  // ORIENT_MATCHING_H_
