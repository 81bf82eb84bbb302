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

#ifndef ORIENT_PCO_H_
#define ORIENT_PCO_H_

#include <optional>

#include "orient/graph.h"

namespace orient {

struct PcoResult {
  bool feasible = false;
  // Present when feasible, and always for the maximizing variants.
  std::optional<Orientation> orientation;
  int satisfied_count = 0;
  int constrained_count = 0;
};

// Parity-constrained orientation without conflicts, in linear time. Forced
// edges are honoured. Throws InputError if the instance has conflicts.
//
// Per connected component (after forced edges are contracted) a spanning
// tree is grown breadth-first from the root; non-tree edges point to their
// larger endpoint and tree edges are then fixed leaves-to-root so every
// non-root vertex meets its constraint. The root is the smallest-id
// unconstrained vertex when one exists, otherwise the smallest id.
PcoResult SolvePco(const Instance& inst);

// Same sweep, maximizing the number of satisfied constraints. A fully
// constrained component that is infeasible sacrifices its largest-id
// constrained vertex (the sweep is rooted there).
PcoResult SolvePcoMax(const Instance& inst);

}  // namespace orient

#endif  // ORIENT_PCO_H_
