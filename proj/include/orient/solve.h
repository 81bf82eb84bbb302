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

#ifndef ORIENT_SOLVE_H_
#define ORIENT_SOLVE_H_

#include <optional>
#include <string_view>

#include "orient/graph.h"
#include "orient/pco.h"

namespace orient {

enum class SolverKind { kAuto, kPco, kPco2dec, kPcoDec, kPcoDsc, kFpt };

const char* ToString(SolverKind kind);
std::optional<SolverKind> ParseSolverKind(std::string_view name);

// Most specific solver whose preconditions the instance meets: no
// conflicts, then disjoint exact pairs, disjoint exact conflicts of size at
// least 2, disjoint subset conflicts, and branching otherwise.
SolverKind SelectSolver(const Instance& inst);

struct SolveOutcome {
  SolverKind solver = SolverKind::kAuto;  // the solver that answered
  PcoResult result;
};

// Runs `kind`. With `maximize` the result carries an orientation that
// satisfies as many parity constraints as possible even when infeasible;
// only the conflict-free and disjoint-pair solvers offer that, others
// throw UnsupportedError. kAuto falls back to branching when the selected
// solver throws UnsupportedError.
SolveOutcome Solve(const Instance& inst, SolverKind kind, bool maximize = false);

}  // namespace orient

#endif  // ORIENT_SOLVE_H_
