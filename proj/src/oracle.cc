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

#include "orient/oracle.h"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <tuple>

namespace orient {

OracleResult EnumerateBest(const Instance& inst, int max_edges) {
  RequireValid(inst);
  const Multigraph& g = inst.graph;
  const int m = g.edge_count();
  const int n = g.vertex_count();
  if (m > max_edges || m > 62) {
    throw InputError("instance has " + std::to_string(m) +
                     " edges; the oracle enumerates at most " + std::to_string(max_edges));
  }
  uint64_t forced_mask = 0, forced_bits = 0;
  for (const auto& [e, head] : inst.forced) {
    forced_mask |= uint64_t{1} << e;
    if (head == g.edge(e).high()) forced_bits |= uint64_t{1} << e;
  }
  std::vector<uint64_t> conflict_mask;
  for (const Conflict& c : inst.conflicts) {
    uint64_t mask = 0;
    for (EdgeId e : c.edges) mask |= uint64_t{1} << e;
    conflict_mask.push_back(mask);
  }

  OracleResult result;
  std::vector<uint64_t> incoming(n);
  std::vector<int> indegree(n);
  const uint64_t total = uint64_t{1} << m;
  for (uint64_t x = 0; x < total; ++x) {
    if ((x & forced_mask) != forced_bits) continue;
    std::fill(incoming.begin(), incoming.end(), 0);
    std::fill(indegree.begin(), indegree.end(), 0);
    for (EdgeId e = 0; e < m; ++e) {
      VertexId head = (x >> e & 1) ? g.edge(e).high() : g.edge(e).low();
      incoming[head] |= uint64_t{1} << e;
      ++indegree[head];
    }
    bool conflict_free = true;
    for (size_t i = 0; i < inst.conflicts.size() && conflict_free; ++i) {
      const Conflict& c = inst.conflicts[i];
      uint64_t in = incoming[c.vertex];
      conflict_free = c.kind == ConflictKind::kExact ? in != conflict_mask[i]
                                                     : (in & conflict_mask[i]) != conflict_mask[i];
    }
    if (!conflict_free) continue;
    int satisfied = 0, odd = 0;
    for (VertexId v = 0; v < n; ++v) {
      odd += indegree[v] & 1;
      if (inst.parity.constrained(v) && (indegree[v] & 1) == inst.parity.parity(v)) {
        ++satisfied;
      }
    }
    if (satisfied > result.best_satisfied_parities) {
      result.best_satisfied_parities = satisfied;
      Orientation o;
      o.head.resize(m);
      for (EdgeId e = 0; e < m; ++e) {
        o.head[e] = (x >> e & 1) ? g.edge(e).high() : g.edge(e).low();
      }
      result.witness = std::move(o);
    }
    if (result.min_odd_vertices < 0 || odd < result.min_odd_vertices) {
      result.min_odd_vertices = odd;
    }
  }
  result.feasible = result.best_satisfied_parities == inst.parity.constrained_count();
  return result;
}

namespace {

class Backtracker {
 public:
  explicit Backtracker(const Instance& inst)
      : inst_(inst), g_(inst.graph), inc_(g_.incidence()) {
    const int n = g_.vertex_count();
    head_.assign(g_.edge_count(), -1);
    remaining_.resize(n);
    indegree_.assign(n, 0);
    at_vertex_.resize(n);
    for (VertexId v = 0; v < n; ++v) remaining_[v] = static_cast<int>(inc_[v].size());
    for (size_t i = 0; i < inst.conflicts.size(); ++i) {
      at_vertex_[inst.conflicts[i].vertex].push_back(static_cast<int>(i));
    }
    order_ = EdgeOrder();
  }

  std::optional<Orientation> Run() {
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (remaining_[v] == 0 && !Complete(v)) return std::nullopt;
    }
    if (!Assign(0)) return std::nullopt;
    return Orientation{head_};
  }

 private:
  // Edges sorted so that vertices close in breadth-first order complete
  // early. Hubs are not traversed; their edges go with the other end.
  std::vector<EdgeId> EdgeOrder() const {
    constexpr int kHubDegree = 8;
    const int n = g_.vertex_count();
    std::vector<int> pos(n, -1);
    for (VertexId v = 0; v < n; ++v) {
      if (static_cast<int>(inc_[v].size()) > kHubDegree) pos[v] = -2;
    }
    int next = 0;
    for (VertexId s = 0; s < n; ++s) {
      if (pos[s] != -1) continue;
      std::queue<VertexId> q;
      q.push(s);
      pos[s] = next++;
      while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (EdgeId e : inc_[v]) {
          VertexId w = g_.edge(e).other(v);
          if (pos[w] == -1) {
            pos[w] = next++;
            q.push(w);
          }
        }
      }
    }
    std::vector<EdgeId> order(g_.edge_count());
    for (EdgeId e = 0; e < g_.edge_count(); ++e) order[e] = e;
    auto key = [&](EdgeId e) {
      int a = pos[g_.edge(e).u], b = pos[g_.edge(e).v];
      return std::tuple(std::max(a, b), std::min(a, b), e);
    };
    std::sort(order.begin(), order.end(),
              [&](EdgeId a, EdgeId b) { return key(a) < key(b); });
    return order;
  }

  // All edges at v are oriented; checks the parity and conflicts at v.
  bool Complete(VertexId v) const {
    if (inst_.parity.constrained(v) && (indegree_[v] & 1) != inst_.parity.parity(v)) {
      return false;
    }
    for (int i : at_vertex_[v]) {
      const Conflict& c = inst_.conflicts[i];
      bool all_in = std::all_of(c.edges.begin(), c.edges.end(),
                                [&](EdgeId e) { return head_[e] == v; });
      if (all_in && (c.kind == ConflictKind::kSubset || indegree_[v] == c.size())) {
        return false;
      }
    }
    return true;
  }

  bool Assign(size_t k) {
    if (k == order_.size()) return true;
    EdgeId e = order_[k];
    const Edge& ed = g_.edge(e);
    VertexId options[2] = {ed.low(), ed.high()};
    auto forced = inst_.forced.find(e);
    for (VertexId head : options) {
      if (forced != inst_.forced.end() && forced->second != head) continue;
      head_[e] = head;
      ++indegree_[head];
      --remaining_[ed.u];
      --remaining_[ed.v];
      bool ok = (remaining_[ed.u] > 0 || Complete(ed.u)) &&
                (remaining_[ed.v] > 0 || Complete(ed.v)) && Assign(k + 1);
      if (ok) return true;
      ++remaining_[ed.u];
      ++remaining_[ed.v];
      --indegree_[head];
      head_[e] = -1;
    }
    return false;
  }

  const Instance& inst_;
  const Multigraph& g_;
  std::vector<std::vector<EdgeId>> inc_;
  std::vector<VertexId> head_;
  std::vector<int> remaining_;
  std::vector<int> indegree_;
  std::vector<std::vector<int>> at_vertex_;
  std::vector<EdgeId> order_;
};

}  // namespace

std::optional<Orientation> DecideExhaustive(const Instance& inst) {
  RequireValid(inst);
  return Backtracker(inst).Run();
}

bool SatOracle(const SatInstance& f, int max_variables) {
  f.Validate();
  if (f.variable_count > max_variables || f.variable_count > 62) {
    throw InputError("formula has " + std::to_string(f.variable_count) +
                     " variables; the oracle tries at most " + std::to_string(max_variables));
  }
  std::vector<bool> assignment(f.variable_count);
  const uint64_t total = uint64_t{1} << f.variable_count;
  for (uint64_t x = 0; x < total; ++x) {
    for (int i = 0; i < f.variable_count; ++i) assignment[i] = x >> i & 1;
    if (f.Satisfied(assignment)) return true;
  }
  return false;
}

}  // namespace orient
