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

#ifndef ORIENT_FPT_H_
#define ORIENT_FPT_H_

#include <cstdint>
#include <variant>
#include <vector>

#include "orient/graph.h"
#include "orient/pco.h"

namespace orient {

// One branching decision for one conflict.
struct AwayEdge {
  EdgeId edge;
};
// All conflict edges point in, plus one more incident edge. Exact only.
struct AllInPlusExtra {
  EdgeId extra;
};
using BranchChoice = std::variant<AwayEdge, AllInPlusExtra>;

struct FptStats {
  int64_t leaves = 0;   // leaves handed to the base solver
  int64_t pruned = 0;   // branches cut by contradictory forcings
  // Product over conflicts of (deg(v) + |C|), saturated at INT64_MAX.
  int64_t leaf_bound = 0;
  std::vector<BranchChoice> winning;  // per conflict, when feasible
};

// Subset conflicts only, overlap allowed. Branches over the edge of each
// conflict that points away from its vertex.
PcoResult SolvePcoScFpt(const Instance& inst, FptStats* stats = nullptr);

// Exact conflicts only, overlap allowed. Per conflict either one edge
// points away, or every edge points in together with one extra incident
// edge outside the conflict.
PcoResult SolvePcoEcFpt(const Instance& inst, FptStats* stats = nullptr);

// Mixed conflict kinds; each conflict branches according to its kind.
PcoResult SolveFpt(const Instance& inst, FptStats* stats = nullptr);

}  // namespace orient

#endif  // ORIENT_FPT_H_
