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

#include "orient/graph.h"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace orient {

EdgeId Multigraph::AddEdge(VertexId u, VertexId v) {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    std::ostringstream os;
    os << "edge {" << u << "," << v << "}: endpoint out of range";
    throw InputError(os.str());
  }
  if (u == v) {
    std::ostringstream os;
    os << "edge {" << u << "," << v << "}: self-loop";
    throw InputError(os.str());
  }
  edges_.push_back({u, v});
  return static_cast<EdgeId>(edges_.size() - 1);
}

std::vector<std::vector<EdgeId>> Multigraph::incidence() const {
  std::vector<std::vector<EdgeId>> inc(vertex_count_);
  for (EdgeId e = 0; e < edge_count(); ++e) {
    inc[edges_[e].u].push_back(e);
    inc[edges_[e].v].push_back(e);
  }
  return inc;
}

int ParityMap::constrained_count() const {
  return static_cast<int>(
      std::count_if(bits_.begin(), bits_.end(), [](int8_t b) { return b != kFree; }));
}

const char* ToString(ConflictKind kind) {
  return kind == ConflictKind::kExact ? "exact" : "subset";
}

bool Conflict::contains(EdgeId e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

Instance Instance::WithVertices(int n) {
  Instance inst;
  inst.graph = Multigraph(n);
  inst.parity = ParityMap(n);
  return inst;
}

VertexId Instance::AddVertex() {
  VertexId v = graph.AddVertex();
  parity.resize(graph.vertex_count());
  return v;
}

void Instance::AddConflict(VertexId v, std::vector<EdgeId> edges,
                           ConflictKind kind) {
  std::sort(edges.begin(), edges.end());
  conflicts.push_back({v, std::move(edges), kind});
}

bool Instance::all_conflicts_of(ConflictKind kind) const {
  return std::all_of(conflicts.begin(), conflicts.end(),
                     [kind](const Conflict& c) { return c.kind == kind; });
}

bool Instance::pairwise_disjoint() const {
  std::set<std::pair<VertexId, EdgeId>> seen;
  for (const Conflict& c : conflicts) {
    for (EdgeId e : c.edges) {
      if (!seen.insert({c.vertex, e}).second) return false;
    }
  }
  return true;
}

std::vector<int> Indegrees(const Multigraph& g, const Orientation& o) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (VertexId h : o.head) ++deg[h];
  return deg;
}

std::vector<std::vector<EdgeId>> IncomingSets(const Multigraph& g,
                                              const Orientation& o) {
  std::vector<std::vector<EdgeId>> in(g.vertex_count());
  for (EdgeId e = 0; e < o.size(); ++e) in[o.head[e]].push_back(e);
  return in;
}

std::vector<StructuralError> ValidateInstance(const Instance& inst) {
  std::vector<StructuralError> errors;
  auto report = [&errors](auto&&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    errors.push_back({os.str()});
  };
  const Multigraph& g = inst.graph;
  const int n = g.vertex_count();
  if (n < 0) report("negative vertex count");
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u < 0 || ed.v < 0 || ed.u >= n || ed.v >= n) {
      report("edge ", e, ": endpoint out of range");
    } else if (ed.u == ed.v) {
      report("edge ", e, ": self-loop at vertex ", ed.u);
    }
  }
  if (inst.parity.size() != n) {
    report("parity map covers ", inst.parity.size(), " vertices, graph has ", n);
  }
  auto valid_edge = [&](EdgeId e) { return e >= 0 && e < g.edge_count(); };
  for (size_t i = 0; i < inst.conflicts.size(); ++i) {
    const Conflict& c = inst.conflicts[i];
    if (c.vertex < 0 || c.vertex >= n) {
      report("conflict ", i, ": vertex ", c.vertex, " out of range");
      continue;
    }
    if (c.edges.empty()) report("conflict ", i, ": empty edge set");
    if (!std::is_sorted(c.edges.begin(), c.edges.end())) {
      report("conflict ", i, ": edge set not sorted");
    }
    if (std::adjacent_find(c.edges.begin(), c.edges.end()) != c.edges.end()) {
      report("conflict ", i, ": duplicate edge");
    }
    for (EdgeId e : c.edges) {
      if (!valid_edge(e)) {
        report("conflict ", i, ": edge ", e, " out of range");
      } else if (!g.edge(e).has_endpoint(c.vertex)) {
        report("conflict ", i, ": edge ", e,
               " not incident to conflict vertex ", c.vertex);
      }
    }
  }
  for (const auto& [e, h] : inst.forced) {
    if (!valid_edge(e)) {
      report("forced edge ", e, " out of range");
    } else if (!g.edge(e).has_endpoint(h)) {
      report("forced edge ", e, ": head ", h, " is not an endpoint");
    }
  }
  return errors;
}

void RequireValid(const Instance& inst) {
  std::vector<StructuralError> errors = ValidateInstance(inst);
  if (errors.empty()) return;
  std::ostringstream os;
  os << "invalid instance: " << errors.front().message;
  if (errors.size() > 1) os << " (and " << errors.size() - 1 << " more)";
  throw InputError(os.str());
}

VerifyReport Verify(const Instance& inst, const Orientation& o) {
  const Multigraph& g = inst.graph;
  if (o.size() != g.edge_count()) {
    throw InputError("orientation has " + std::to_string(o.size()) +
                     " heads, graph has " + std::to_string(g.edge_count()) +
                     " edges");
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!g.edge(e).has_endpoint(o.head[e])) {
      throw InputError("orientation: head " + std::to_string(o.head[e]) +
                       " of edge " + std::to_string(e) + " is not an endpoint");
    }
  }
  VerifyReport report;
  std::vector<int> indeg = Indegrees(g, o);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (inst.parity.constrained(v) && indeg[v] % 2 != inst.parity.parity(v)) {
      report.parity_violations.push_back(v);
    }
  }
  for (size_t i = 0; i < inst.conflicts.size(); ++i) {
    const Conflict& c = inst.conflicts[i];
    int entering = 0;
    for (EdgeId e : c.edges) entering += o.head[e] == c.vertex;
    bool all_in = entering == c.size();
    bool violated = c.kind == ConflictKind::kSubset
                        ? all_in
                        : all_in && indeg[c.vertex] == c.size();
    if (violated) report.conflict_violations.push_back(static_cast<int>(i));
  }
  for (const auto& [e, h] : inst.forced) {
    if (o.head[e] != h) report.forced_violations.push_back(e);
  }
  return report;
}

int SatisfiedParities(const Instance& inst, const Orientation& o) {
  std::vector<int> indeg = Indegrees(inst.graph, o);
  int satisfied = 0;
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v) {
    if (inst.parity.constrained(v) && indeg[v] % 2 == inst.parity.parity(v)) {
      ++satisfied;
    }
  }
  return satisfied;
}

namespace {

// Adds a forcing, reporting false on contradiction.
bool Force(std::map<EdgeId, VertexId>& forced, EdgeId e, VertexId head) {
  auto [it, inserted] = forced.emplace(e, head);
  return inserted || it->second == head;
}

// Exact conflicts whose size disagrees with the vertex parity cannot equal
// the incoming set of a parity-respecting orientation.
void DropParityExcludedExact(Instance& inst) {
  std::erase_if(inst.conflicts, [&inst](const Conflict& c) {
    return c.kind == ConflictKind::kExact && inst.parity.constrained(c.vertex) &&
           c.size() % 2 != inst.parity.parity(c.vertex);
  });
}

}  // namespace

std::optional<Instance> Normalize(const Instance& inst) {
  Instance out = inst;
  DropParityExcludedExact(out);
  std::vector<Conflict> kept;
  for (Conflict& c : out.conflicts) {
    if (c.kind == ConflictKind::kSubset && c.size() == 1) {
      EdgeId e = c.edges.front();
      if (!Force(out.forced, e, out.graph.edge(e).other(c.vertex))) {
        return std::nullopt;
      }
    } else {
      kept.push_back(std::move(c));
    }
  }
  out.conflicts = std::move(kept);
  return out;
}

Orientation ForcedContraction::Expand(const Orientation& reduced_orientation) const {
  Orientation o{fixed_head};
  for (size_t i = 0; i < kept.size(); ++i) {
    o.head[kept[i]] = reduced_orientation.head[i];
  }
  return o;
}

std::optional<ForcedContraction> ContractForced(const Instance& inst) {
  const Multigraph& g = inst.graph;
  std::vector<VertexId> head(g.edge_count(), -1);
  ParityMap parity = inst.parity;
  std::vector<Conflict> conflicts = inst.conflicts;
  std::deque<std::pair<EdgeId, VertexId>> pending(inst.forced.begin(),
                                                  inst.forced.end());
  auto queue_singletons = [&]() -> bool {
    for (auto it = conflicts.begin(); it != conflicts.end();) {
      if (it->kind == ConflictKind::kSubset && it->size() == 1) {
        EdgeId e = it->edges.front();
        pending.emplace_back(e, g.edge(e).other(it->vertex));
        it = conflicts.erase(it);
      } else if (it->kind == ConflictKind::kSubset && it->size() == 0) {
        return false;
      } else {
        ++it;
      }
    }
    return true;
  };
  if (!queue_singletons()) return std::nullopt;
  while (!pending.empty()) {
    auto [e, h] = pending.front();
    pending.pop_front();
    if (head[e] != -1) {
      if (head[e] != h) return std::nullopt;
      continue;
    }
    head[e] = h;
    parity.flip(h);
    for (auto it = conflicts.begin(); it != conflicts.end();) {
      if (!it->contains(e)) {
        bool extra_in = it->kind == ConflictKind::kExact && it->vertex == h;
        it = extra_in ? conflicts.erase(it) : it + 1;  // incoming now differs
      } else if (it->vertex != h) {
        it = conflicts.erase(it);  // e leaves the vertex: satisfied
      } else {
        std::erase(it->edges, e);
        ++it;
      }
    }
    if (!queue_singletons()) return std::nullopt;
  }

  ForcedContraction out;
  out.fixed_head = head;
  std::vector<EdgeId> remap(g.edge_count(), -1);
  out.reduced.graph = Multigraph(g.vertex_count());
  out.reduced.parity = parity;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (head[e] != -1) continue;
    remap[e] = out.reduced.graph.AddEdge(g.edge(e).u, g.edge(e).v);
    out.kept.push_back(e);
  }
  for (Conflict& c : conflicts) {
    if (c.edges.empty()) {
      // Incoming set must be nonempty: implied by an odd constraint.
      if (parity.constrained(c.vertex) && parity.parity(c.vertex) == 1) {
        out.needs_incoming.push_back(c.vertex);
        continue;
      }
      throw UnsupportedError("forced edges empty an exact conflict at vertex " +
                             std::to_string(c.vertex));
    }
    for (EdgeId& x : c.edges) x = remap[x];
    std::sort(c.edges.begin(), c.edges.end());
    out.reduced.conflicts.push_back(std::move(c));
  }
  return out;
}

std::vector<Component> Components(const Multigraph& g) {
  std::vector<std::vector<EdgeId>> inc = g.incidence();
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<Component> out;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    Component c;
    std::vector<VertexId> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      for (EdgeId e : inc[v]) {
        VertexId w = g.edge(e).other(v);
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    out.push_back(std::move(c));
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out[comp[g.edge(e).u]].edges.push_back(e);
  }
  return out;
}

}  // namespace orient
