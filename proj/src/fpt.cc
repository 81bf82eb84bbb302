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

#include "orient/fpt.h"

#include <limits>
#include <map>
#include <stdexcept>

namespace orient {
namespace {

class BranchSearch {
 public:
  BranchSearch(const Instance& inst, FptStats& stats)
      : inst_(inst), inc_(inst.graph.incidence()), stats_(stats) {
    forced_ = inst.forced;
    choice_.resize(inst.conflicts.size(), AwayEdge{-1});
    base_ = inst;
    base_.conflicts.clear();
  }

  PcoResult Run() {
    Descend(0);
    if (!found_) return {};
    stats_.winning = winning_;
    return std::move(result_);
  }

 private:
  // Records e -> head, returning false on contradiction. `undo` collects
  // the edges this call newly forced.
  bool Force(EdgeId e, VertexId head, std::vector<EdgeId>& undo) {
    auto [it, inserted] = forced_.emplace(e, head);
    if (inserted) {
      undo.push_back(e);
      return true;
    }
    return it->second == head;
  }

  void Release(const std::vector<EdgeId>& undo) {
    for (EdgeId e : undo) forced_.erase(e);
  }

  void Leaf() {
    ++stats_.leaves;
    base_.forced = forced_;
    PcoResult r = SolvePco(base_);
    if (!r.feasible) return;
    found_ = true;
    winning_ = choice_;
    r.constrained_count = inst_.parity.constrained_count();
    result_ = std::move(r);
  }

  void Descend(size_t i) {
    if (found_) return;
    if (i == inst_.conflicts.size()) {
      Leaf();
      return;
    }
    const Conflict& c = inst_.conflicts[i];
    const Multigraph& g = inst_.graph;
    for (EdgeId e : c.edges) {
      std::vector<EdgeId> undo;
      if (Force(e, g.edge(e).other(c.vertex), undo)) {
        choice_[i] = AwayEdge{e};
        Descend(i + 1);
      } else {
        ++stats_.pruned;
      }
      Release(undo);
      if (found_) return;
    }
    if (c.kind != ConflictKind::kExact) return;
    for (EdgeId extra : inc_[c.vertex]) {
      if (c.contains(extra)) continue;
      std::vector<EdgeId> undo;
      bool ok = Force(extra, c.vertex, undo);
      for (size_t j = 0; ok && j < c.edges.size(); ++j) {
        ok = Force(c.edges[j], c.vertex, undo);
      }
      if (ok) {
        choice_[i] = AllInPlusExtra{extra};
        Descend(i + 1);
      } else {
        ++stats_.pruned;
      }
      Release(undo);
      if (found_) return;
    }
  }

  const Instance& inst_;
  std::vector<std::vector<EdgeId>> inc_;
  FptStats& stats_;
  Instance base_;
  std::map<EdgeId, VertexId> forced_;
  std::vector<BranchChoice> choice_;
  std::vector<BranchChoice> winning_;
  bool found_ = false;
  PcoResult result_;
};

int64_t LeafBound(const Instance& inst) {
  std::vector<int> degree(inst.graph.vertex_count(), 0);
  for (const Edge& e : inst.graph.edges()) {
    ++degree[e.u];
    ++degree[e.v];
  }
  constexpr int64_t kMax = std::numeric_limits<int64_t>::max();
  int64_t bound = 1;
  for (const Conflict& c : inst.conflicts) {
    int64_t factor = degree[c.vertex] + c.size();
    bound = bound > kMax / factor ? kMax : bound * factor;
  }
  return bound;
}

PcoResult Search(const Instance& inst, FptStats* stats) {
  RequireValid(inst);
  FptStats local;
  FptStats& s = stats ? *stats : local;
  s = FptStats{};
  s.leaf_bound = LeafBound(inst);
  if (!inst.has_conflicts()) {
    s.leaves = 1;
    return SolvePco(inst);
  }
  PcoResult r = BranchSearch(inst, s).Run();
  if (s.leaves > s.leaf_bound) {
    throw std::logic_error("branch search exceeded its leaf bound");
  }
  if (r.feasible && !Verify(inst, *r.orientation).feasible()) {
    throw std::logic_error("branch search produced an infeasible orientation");
  }
  return r;
}

}  // namespace

PcoResult SolvePcoScFpt(const Instance& inst, FptStats* stats) {
  if (!inst.all_conflicts_of(ConflictKind::kSubset)) {
    throw InputError("subset branching needs subset conflicts only");
  }
  return Search(inst, stats);
}

PcoResult SolvePcoEcFpt(const Instance& inst, FptStats* stats) {
  if (!inst.all_conflicts_of(ConflictKind::kExact)) {
    throw InputError("exact branching needs exact conflicts only");
  }
  return Search(inst, stats);
}

PcoResult SolveFpt(const Instance& inst, FptStats* stats) { return Search(inst, stats); }

}  // namespace orient
