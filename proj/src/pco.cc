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

#include "orient/pco.h"

#include <algorithm>
#include <vector>

namespace orient {
namespace {

PcoResult Sweep(const Instance& inst, bool maximize) {
  RequireValid(inst);
  if (inst.has_conflicts()) {
    throw InputError("parity-constrained orientation solver takes no conflicts");
  }
  const Multigraph& g = inst.graph;
  const int n = g.vertex_count();
  const int m = g.edge_count();

  const ParityMap& parity = inst.parity;
  std::vector<VertexId> head(m, -1);
  for (const auto& [e, h] : inst.forced) head[e] = h;
  std::vector<std::vector<EdgeId>> adj(n);
  for (EdgeId e = 0; e < m; ++e) {
    if (head[e] != -1) continue;
    adj[g.edge(e).u].push_back(e);
    adj[g.edge(e).v].push_back(e);
  }

  std::vector<int> indeg(n, 0);
  for (VertexId h : head) {
    if (h != -1) ++indeg[h];
  }
  std::vector<bool> seen(n, false);
  std::vector<bool> tree_edge(m, false);
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<bool> in_tree(n, false);
  bool feasible = true;

  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    // Collect the component to pick its root.
    std::vector<VertexId> members{s};
    seen[s] = true;
    for (size_t i = 0; i < members.size(); ++i) {
      for (EdgeId e : adj[members[i]]) {
        VertexId w = g.edge(e).other(members[i]);
        if (!seen[w]) {
          seen[w] = true;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    VertexId root = members.front();
    auto free_it = std::find_if(members.begin(), members.end(),
                                [&](VertexId v) { return !parity.constrained(v); });
    if (free_it != members.end()) {
      root = *free_it;
    } else if (maximize) {
      root = members.back();
    }

    // Breadth-first spanning tree from the root.
    std::vector<VertexId> order{root};
    in_tree[root] = true;
    for (size_t i = 0; i < order.size(); ++i) {
      VertexId v = order[i];
      for (EdgeId e : adj[v]) {
        VertexId w = g.edge(e).other(v);
        if (in_tree[w]) continue;
        in_tree[w] = true;
        tree_edge[e] = true;
        parent_edge[w] = e;
        order.push_back(w);
      }
    }
    for (VertexId v : members) {
      for (EdgeId e : adj[v]) {
        if (tree_edge[e] || head[e] != -1) continue;
        head[e] = g.edge(e).high();
        ++indeg[head[e]];
      }
    }
    for (size_t i = order.size(); i-- > 1;) {
      VertexId child = order[i];
      EdgeId e = parent_edge[child];
      bool wants_edge =
          parity.constrained(child) && indeg[child] % 2 != parity.parity(child);
      head[e] = wants_edge ? child : g.edge(e).other(child);
      ++indeg[head[e]];
    }
    if (parity.constrained(root) && indeg[root] % 2 != parity.parity(root)) {
      feasible = false;
    }
  }

  PcoResult result;
  Orientation o{std::move(head)};
  result.feasible = feasible;
  result.constrained_count = inst.parity.constrained_count();
  result.satisfied_count = SatisfiedParities(inst, o);
  if (feasible || maximize) result.orientation = std::move(o);
  return result;
}

}  // namespace

PcoResult SolvePco(const Instance& inst) { return Sweep(inst, false); }

PcoResult SolvePcoMax(const Instance& inst) { return Sweep(inst, true); }

}  // namespace orient
