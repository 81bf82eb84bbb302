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

#ifndef ORIENT_ORACLE_H_
#define ORIENT_ORACLE_H_

#include <optional>

#include "orient/graph.h"
#include "orient/sat.h"

namespace orient {

struct OracleResult {
  bool feasible = false;
  // Over conflict-free orientations; -1 when there is none.
  int best_satisfied_parities = -1;
  int min_odd_vertices = -1;
  // First conflict-free orientation, in counter order, that reaches
  // best_satisfied_parities.
  std::optional<Orientation> witness;
};

inline constexpr int kDefaultOracleEdges = 20;

// Enumerates all orientations that respect the forced edges. Orientation
// number x points edge e to its larger endpoint iff bit e of x is set.
// Throws InputError when the instance has more than `max_edges` edges.
OracleResult EnumerateBest(const Instance& inst, int max_edges = kDefaultOracleEdges);

// Exhaustive decision by backtracking with completion checks at each
// vertex. No edge limit; meant for sparse instances of a few dozen edges.
// Returns a feasible orientation or nullopt.
std::optional<Orientation> DecideExhaustive(const Instance& inst);

inline constexpr int kDefaultOracleVariables = 20;

// Tries every assignment. Throws InputError above `max_variables`.
bool SatOracle(const SatInstance& f, int max_variables = kDefaultOracleVariables);

}  // namespace orient

#endif  // ORIENT_ORACLE_H_
