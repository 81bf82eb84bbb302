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

#include "orient/matching.h"

#include <algorithm>
#include <set>
#include <string>

#include "orient/graph.h"

namespace orient {

void SimpleGraph::Validate() const {
  std::set<std::pair<NodeId, NodeId>> seen;
  for (auto [a, b] : links) {
    if (a < 0 || b < 0 || a >= node_count || b >= node_count) {
      throw InputError("link (" + std::to_string(a) + "," + std::to_string(b) +
                       ") out of range");
    }
    if (a == b) throw InputError("loop at node " + std::to_string(a));
    if (!seen.insert(std::minmax(a, b)).second) {
      throw InputError("duplicate link (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
    }
  }
}

int Matching::size() const {
  int covered = 0;
  for (NodeId x : mate) covered += x != -1;
  return covered / 2;
}

int Matching::exposed_count() const {
  return static_cast<int>(std::count(mate.begin(), mate.end(), -1));
}

std::vector<std::pair<NodeId, NodeId>> Matching::pairs() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId v = 0; v < static_cast<NodeId>(mate.size()); ++v) {
    if (mate[v] > v) out.emplace_back(v, mate[v]);
  }
  return out;
}

namespace {

// Augmenting-path search with blossom contraction, one exposed root at a
// time. State arrays are sized once and reset per root.
class BlossomSearch {
 public:
  explicit BlossomSearch(const SimpleGraph& g)
      : n_(g.node_count),
        adj_(n_),
        mate_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        blossom_(n_),
        lca_mark_(n_) {
    for (auto [a, b] : g.links) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
  }

  Matching Run() {
    Greedy();
    for (NodeId root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      NodeId v = FindAugmentingPath(root);
      while (v != -1) {
        NodeId pv = parent_[v];
        NodeId next = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = next;
      }
    }
    return Matching{mate_};
  }

 private:
  void Greedy() {
    for (NodeId v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (NodeId w : adj_[v]) {
        if (mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
  }

  NodeId LowestCommonBase(NodeId a, NodeId b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), false);
    while (true) {
      a = base_[a];
      lca_mark_[a] = true;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (lca_mark_[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void MarkPath(NodeId v, NodeId b, NodeId child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = true;
      blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  NodeId FindAugmentingPath(NodeId root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (NodeId i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::vector<NodeId> queue{root};
    for (size_t head = 0; head < queue.size(); ++head) {
      NodeId v = queue[head];
      for (NodeId to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          // Odd cycle: contract the blossom onto its base.
          NodeId cur = LowestCommonBase(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          MarkPath(v, cur, to);
          MarkPath(to, cur, v);
          for (NodeId i = 0; i < n_; ++i) {
            if (!blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<NodeId>> adj_;
  std::vector<NodeId> mate_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> base_;
  std::vector<bool> used_;
  std::vector<bool> blossom_;
  std::vector<bool> lca_mark_;
};

}  // namespace

Matching MaxMatching(const SimpleGraph& g) {
  g.Validate();
  return BlossomSearch(g).Run();
}

bool IsMatchingOf(const SimpleGraph& g, const Matching& m) {
  if (static_cast<int>(m.mate.size()) != g.node_count) return false;
  std::set<std::pair<NodeId, NodeId>> links;
  for (auto [a, b] : g.links) links.insert(std::minmax(a, b));
  for (NodeId v = 0; v < g.node_count; ++v) {
    NodeId w = m.mate[v];
    if (w == -1) continue;
    if (w < 0 || w >= g.node_count || m.mate[w] != v) return false;
    if (!links.contains(std::minmax(v, w))) return false;
  }
  return true;
}

}  // namespace orient
