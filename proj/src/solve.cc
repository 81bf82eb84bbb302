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

#include "orient/solve.h"

#include <algorithm>

#include "orient/eo2dec.h"
#include "orient/fpt.h"
#include "orient/reductions.h"

namespace orient {

const char* ToString(SolverKind kind) {
  switch (kind) {
    case SolverKind::kAuto: return "auto";
    case SolverKind::kPco: return "pco";
    case SolverKind::kPco2dec: return "pco-2dec";
    case SolverKind::kPcoDec: return "pco-dec";
    case SolverKind::kPcoDsc: return "pco-dsc";
    case SolverKind::kFpt: return "fpt";
  }
  return "?";
}

std::optional<SolverKind> ParseSolverKind(std::string_view name) {
  for (SolverKind k : {SolverKind::kAuto, SolverKind::kPco, SolverKind::kPco2dec,
                       SolverKind::kPcoDec, SolverKind::kPcoDsc, SolverKind::kFpt}) {
    if (name == ToString(k)) return k;
  }
  return std::nullopt;
}

SolverKind SelectSolver(const Instance& inst) {
  if (!inst.has_conflicts()) return SolverKind::kPco;
  if (inst.pairwise_disjoint()) {
    const auto& cs = inst.conflicts;
    if (inst.all_conflicts_of(ConflictKind::kExact)) {
      if (std::all_of(cs.begin(), cs.end(), [](const Conflict& c) { return c.size() == 2; })) {
        return SolverKind::kPco2dec;
      }
      if (std::all_of(cs.begin(), cs.end(), [](const Conflict& c) { return c.size() >= 2; })) {
        return SolverKind::kPcoDec;
      }
    }
    if (inst.all_conflicts_of(ConflictKind::kSubset)) return SolverKind::kPcoDsc;
  }
  return SolverKind::kFpt;
}

namespace {

PcoResult FromDecision(const Instance& inst, DecisionResult d) {
  PcoResult r;
  r.feasible = d.feasible;
  r.constrained_count = inst.parity.constrained_count();
  if (d.orientation) r.satisfied_count = SatisfiedParities(inst, *d.orientation);
  r.orientation = std::move(d.orientation);
  return r;
}

PcoResult Run(const Instance& inst, SolverKind kind, bool maximize) {
  if (maximize && kind != SolverKind::kPco && kind != SolverKind::kPco2dec) {
    throw UnsupportedError(std::string("solver ") + ToString(kind) +
                           " does not maximize satisfied parities");
  }
  switch (kind) {
    case SolverKind::kPco:
      return maximize ? SolvePcoMax(inst) : SolvePco(inst);
    case SolverKind::kPco2dec: {
      PcoResult r = SolvePco2dec(inst);
      if (!maximize && !r.feasible) r.orientation.reset();
      return r;
    }
    case SolverKind::kPcoDec:
      return FromDecision(inst, SolvePcoDec(inst));
    case SolverKind::kPcoDsc:
      return FromDecision(inst, SolvePcoDsc(inst));
    case SolverKind::kFpt:
      return SolveFpt(inst);
    case SolverKind::kAuto:
      break;
  }
  throw std::logic_error("unresolved solver kind");
}

}  // namespace

SolveOutcome Solve(const Instance& inst, SolverKind kind, bool maximize) {
  RequireValid(inst);
  if (kind != SolverKind::kAuto) return {kind, Run(inst, kind, maximize)};
  SolverKind selected = SelectSolver(inst);
  try {
    return {selected, Run(inst, selected, maximize)};
  } catch (const UnsupportedError&) {
    if (maximize || selected == SolverKind::kFpt) throw;
  }
  return {SolverKind::kFpt, Run(inst, SolverKind::kFpt, false)};
}

}  // namespace orient
