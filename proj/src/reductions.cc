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

#include "orient/reductions.h"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "orient/eo2dec.h"

namespace orient {

const char* ToString(VertexRole role) {
  switch (role) {
    case VertexRole::kOriginal: return "original";
    case VertexRole::kParityDummy: return "parity-dummy";
    case VertexRole::kHub: return "hub";
    case VertexRole::kHubPendant: return "hub-pendant";
    case VertexRole::kPathHead: return "path-head";
    case VertexRole::kPathMiddle: return "path-middle";
    case VertexRole::kPathTail: return "path-tail";
    case VertexRole::kBalanceHub: return "balance-hub";
    case VertexRole::kBalancePendant: return "balance-pendant";
    case VertexRole::kNetworkEntry: return "network-entry";
    case VertexRole::kNetworkExit: return "network-exit";
    case VertexRole::kGadgetCenter: return "gadget-center";
    case VertexRole::kGadgetRelay: return "gadget-relay";
    case VertexRole::kGadgetPendant: return "gadget-pendant";
    case VertexRole::kGadgetParity: return "gadget-parity";
  }
  return "?";
}

int ReductionMap::added_vertex_count(VertexRole role) const {
  return static_cast<int>(std::count(vertex_role.begin(), vertex_role.end(), role));
}

Orientation PullBack(const Orientation& reduced, const ReductionMap& map) {
  Orientation o;
  o.head.resize(map.edge_map.size());
  for (size_t e = 0; e < map.edge_map.size(); ++e) {
    EdgeId image = map.edge_map[e];
    if (image < 0 || image >= reduced.size()) {
      throw std::logic_error("reduction map sends edge " + std::to_string(e) +
                             " outside the reduced orientation");
    }
    VertexId origin = map.vertex_origin[reduced.head[image]];
    if (origin < 0) {
      throw std::logic_error("image of edge " + std::to_string(e) +
                             " points into a gadget vertex");
    }
    o.head[e] = origin;
  }
  return o;
}

namespace {

// Incrementally builds a reduced instance together with its map. Every
// vertex it creates is even-constrained.
class ReductionBuilder {
 public:
  ReductionBuilder(int original_vertex_count, int original_edge_count) {
    map_.original_vertex_count = original_vertex_count;
    map_.edge_map.assign(original_edge_count, -1);
  }

  VertexId AddVertex(VertexRole role, VertexId origin) {
    VertexId v = out_.AddVertex();
    out_.parity.set(v, 0);
    map_.vertex_origin.push_back(origin);
    map_.vertex_role.push_back(role);
    return v;
  }

  // Copies the original vertices with their ids.
  void AddOriginalVertices(int n) {
    for (VertexId v = 0; v < n; ++v) AddVertex(VertexRole::kOriginal, v);
  }

  EdgeId AddEdge(VertexId a, VertexId b) { return out_.AddEdge(a, b); }
  void MapEdge(EdgeId original, EdgeId reduced) { map_.edge_map[original] = reduced; }
  void AddExactPair(VertexId v, EdgeId a, EdgeId b) {
    out_.AddConflict(v, {a, b}, ConflictKind::kExact);
  }
  Instance& instance() { return out_; }

  Reduction Finish() { return {std::move(out_), std::move(map_)}; }

 private:
  Instance out_;
  ReductionMap map_;
};

void RequireNoForced(const Instance& inst, const char* what) {
  if (!inst.forced.empty()) {
    throw InputError(std::string(what) + ": contract forced edges first");
  }
}

}  // namespace

Reduction PcoToEo(const Instance& inst, ConflictMode mode) {
  RequireValid(inst);
  RequireNoForced(inst, "parity-to-even reduction");
  for (const Conflict& c : inst.conflicts) {
    bool ok = (mode == ConflictMode::kExact && c.kind == ConflictKind::kExact) ||
              (mode == ConflictMode::kSubset && c.kind == ConflictKind::kSubset);
    if (!ok) throw InputError("conflict kind does not match the reduction mode");
  }
  const Multigraph& g = inst.graph;
  ReductionBuilder b(g.vertex_count(), g.edge_count());
  b.AddOriginalVertices(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    b.MapEdge(e, b.AddEdge(g.edge(e).u, g.edge(e).v));
  }
  std::vector<Conflict> conflicts = inst.conflicts;
  auto absorb = [&](VertexId v, EdgeId extra) {
    if (mode != ConflictMode::kExact) return;
    for (Conflict& c : conflicts) {
      if (c.vertex == v && c.size() % 2 == 1) {
        c.edges.push_back(extra);
        std::sort(c.edges.begin(), c.edges.end());
      }
    }
  };
  // Step 1: odd constraints become even via a pendant dummy.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!inst.parity.constrained(v) || inst.parity.parity(v) != 1) continue;
    VertexId dummy = b.AddVertex(VertexRole::kParityDummy, -1);
    absorb(v, b.AddEdge(v, dummy));
  }
  // Step 2: unconstrained vertices hang off a common hub.
  VertexId hub = b.AddVertex(VertexRole::kHub, -1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (inst.parity.constrained(v)) continue;
    absorb(v, b.AddEdge(v, hub));
  }
  if (b.instance().graph.edge_count() % 2 == 1) {
    b.AddEdge(hub, b.AddVertex(VertexRole::kHubPendant, -1));
  }
  b.instance().conflicts = std::move(conflicts);
  return b.Finish();
}

int SwitchingNetwork::switches_in_stage(int stage) const {
  return static_cast<int>(std::count_if(switches.begin(), switches.end(),
                                        [stage](const Switch& s) { return s.stage == stage; }));
}

VertexId SwitchingNetwork::right_head(EdgeId e) const {
  const Edge& ed = graph.graph.edge(e);
  if (std::find(inputs.begin(), inputs.end(), e) != inputs.end()) {
    return std::find(input_leaves.begin(), input_leaves.end(), ed.u) != input_leaves.end()
               ? ed.v
               : ed.u;
  }
  return std::find(output_leaves.begin(), output_leaves.end(), ed.u) != output_leaves.end()
             ? ed.u
             : ed.v;
}

namespace {

// Structural plan of a switching network, independent of vertex numbering.
// A line is either network input i (>= 0) or the carry output of switch s
// (encoded as -1 - s).
struct NetworkPlan {
  struct Step {
    int in[2];
    int stage;
    bool final;
  };
  std::vector<Step> steps;
  int stage_count = 0;
};

NetworkPlan PlanNetwork(int k) {
  NetworkPlan plan;
  std::vector<int> lines(k);
  for (int i = 0; i < k; ++i) lines[i] = i;
  int stage = 0;
  while (lines.size() > 2) {
    std::vector<int> next;
    for (size_t i = 0; i < lines.size(); i += 2) {
      if (i + 1 == lines.size()) {
        next.push_back(lines[i]);
        continue;
      }
      plan.steps.push_back({{lines[i], lines[i + 1]}, stage, false});
      next.push_back(-1 - static_cast<int>(plan.steps.size() - 1));
    }
    lines = std::move(next);
    ++stage;
  }
  plan.steps.push_back({{lines[0], lines[1]}, stage, true});
  plan.stage_count = stage + 1;
  return plan;
}

// Emits the network's internal vertices and edges into a target instance.
// Input edges are supplied by the caller, who attaches them to the entry
// vertex returned by input_entry().
class NetworkEmitter {
 public:
  NetworkEmitter(int k, ReductionBuilder& b, VertexId origin)
      : k_(k), plan_(PlanNetwork(k)) {
    for (size_t s = 0; s < plan_.steps.size(); ++s) {
      switches_.push_back({b.AddVertex(VertexRole::kNetworkEntry, origin),
                           b.AddVertex(VertexRole::kNetworkExit, -1),
                           plan_.steps[s].stage});
    }
    entry_of_input_.assign(k, -1);
    for (size_t s = 0; s < plan_.steps.size(); ++s) {
      for (int line : plan_.steps[s].in) {
        if (line >= 0) entry_of_input_[line] = switches_[s].entry;
      }
    }
  }

  const NetworkPlan& plan() const { return plan_; }
  const std::vector<SwitchingNetwork::Switch>& switches() const { return switches_; }
  VertexId input_entry(int i) const { return entry_of_input_[i]; }

  // Adds the internal and output edges plus all conflict pairs. `inputs`
  // are the ids of the k input edges; output j lands on output_target(j).
  // Returns the output edges b_1..b_k.
  template <typename Target>
  std::vector<EdgeId> Emit(ReductionBuilder& b, const std::vector<EdgeId>& inputs,
                           Target output_target) {
    std::vector<EdgeId> carry(plan_.steps.size(), -1);
    std::vector<EdgeId> exported;
    std::vector<EdgeId> finals;
    for (size_t s = 0; s < plan_.steps.size(); ++s) {
      const NetworkPlan::Step& step = plan_.steps[s];
      const auto& sw = switches_[s];
      EdgeId in[2];
      for (int j = 0; j < 2; ++j) {
        int line = step.in[j];
        if (line >= 0) {
          in[j] = inputs[line];
        } else {
          const auto& from = switches_[-1 - line];
          in[j] = b.AddEdge(from.exit, sw.entry);
          carry[-1 - line] = in[j];
        }
      }
      EdgeId c1 = b.AddEdge(sw.entry, sw.exit);
      EdgeId c2 = b.AddEdge(sw.entry, sw.exit);
      b.AddExactPair(sw.entry, in[0], in[1]);
      b.AddExactPair(sw.entry, c1, c2);
      b.AddExactPair(sw.exit, c1, c2);
    }
    // Outputs: b1, b2 from the final switch, then exports in switch order.
    const auto& last = switches_.back();
    finals.push_back(b.AddEdge(last.exit, output_target(0)));
    finals.push_back(b.AddEdge(last.exit, output_target(1)));
    std::vector<EdgeId> outputs = finals;
    for (size_t s = 0; s + 1 < plan_.steps.size(); ++s) {
      int j = static_cast<int>(outputs.size());
      EdgeId out = b.AddEdge(switches_[s].exit, output_target(j));
      outputs.push_back(out);
      if (carry[s] == -1) throw std::logic_error("switch without carry line");
      b.AddExactPair(switches_[s].exit, carry[s], out);
    }
    b.AddExactPair(last.exit, finals[0], finals[1]);
    if (static_cast<int>(outputs.size()) != k_) {
      throw std::logic_error("switching network output count mismatch");
    }
    return outputs;
  }

 private:
  int k_;
  NetworkPlan plan_;
  std::vector<SwitchingNetwork::Switch> switches_;
  std::vector<VertexId> entry_of_input_;
};

}  // namespace

SwitchingNetwork BuildSwitchingNetwork(int k) {
  if (k < 2) throw InputError("switching network needs k >= 2");
  ReductionBuilder b(0, 0);
  NetworkEmitter emitter(k, b, -1);
  SwitchingNetwork net;
  net.k = k;
  net.stage_count = emitter.plan().stage_count;
  net.switches = emitter.switches();
  for (VertexId v = 0; v < b.instance().graph.vertex_count(); ++v) {
    net.internal.push_back(v);
  }
  for (int i = 0; i < k; ++i) {
    VertexId leaf = b.AddVertex(VertexRole::kOriginal, -1);
    b.instance().parity.clear(leaf);
    net.input_leaves.push_back(leaf);
  }
  for (int i = 0; i < k; ++i) {
    VertexId leaf = b.AddVertex(VertexRole::kOriginal, -1);
    b.instance().parity.clear(leaf);
    net.output_leaves.push_back(leaf);
  }
  for (int i = 0; i < k; ++i) {
    net.inputs.push_back(b.AddEdge(net.input_leaves[i], emitter.input_entry(i)));
  }
  net.outputs = emitter.Emit(b, net.inputs,
                             [&net](int j) { return net.output_leaves[j]; });
  net.graph = b.Finish().instance;
  return net;
}

namespace {

void RequireDisjointKind(const Instance& inst, ConflictKind kind) {
  if (!inst.all_conflicts_of(kind)) {
    throw InputError(std::string("expected only ") + ToString(kind) + " conflicts");
  }
  if (!inst.pairwise_disjoint()) {
    throw InputError("conflicts are not pairwise disjoint");
  }
}

}  // namespace

Reduction PcoDecToEo2dec(const Instance& input) {
  RequireValid(input);
  RequireNoForced(input, "disjoint-exact reduction");
  RequireDisjointKind(input, ConflictKind::kExact);
  Instance inst = input;
  std::erase_if(inst.conflicts, [&inst](const Conflict& c) {
    return inst.parity.constrained(c.vertex) &&
           c.size() % 2 != inst.parity.parity(c.vertex);
  });
  for (const Conflict& c : inst.conflicts) {
    if (c.size() < 2) {
      throw UnsupportedError("exact conflict of size 1 at vertex " +
                             std::to_string(c.vertex) +
                             " is not handled by the disjoint-exact route");
    }
  }
  const Multigraph& g = inst.graph;
  const int n = g.vertex_count();
  ReductionBuilder b(n, g.edge_count());

  std::vector<VertexId> head_of(n), middle_of(n), tail_of(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    head_of[v] = b.AddVertex(VertexRole::kPathHead, v);
    middle_of[v] = b.AddVertex(VertexRole::kPathMiddle, -1);
    if (inst.parity.constrained(v) && inst.parity.parity(v) == 0) {
      tail_of[v] = b.AddVertex(VertexRole::kPathTail, -1);
    }
  }
  VertexId balance = b.AddVertex(VertexRole::kBalanceHub, -1);

  // Networks for conflicts of size >= 3; their entries replace v1' as the
  // attachment point of the conflict edges.
  std::vector<NetworkEmitter> networks;
  std::vector<int> network_of_conflict(inst.conflicts.size(), -1);
  std::map<std::pair<VertexId, EdgeId>, VertexId> attach;
  for (size_t i = 0; i < inst.conflicts.size(); ++i) {
    const Conflict& c = inst.conflicts[i];
    if (c.size() < 3) continue;
    network_of_conflict[i] = static_cast<int>(networks.size());
    networks.emplace_back(c.size(), b, c.vertex);
    for (int j = 0; j < c.size(); ++j) {
      attach[{c.vertex, c.edges[j]}] = networks.back().input_entry(j);
    }
  }
  auto attach_point = [&](VertexId v, EdgeId e) {
    auto it = attach.find({v, e});
    return it == attach.end() ? head_of[v] : it->second;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    b.MapEdge(e, b.AddEdge(attach_point(ed.u, e), attach_point(ed.v, e)));
  }

  for (VertexId v = 0; v < n; ++v) {
    b.AddEdge(head_of[v], middle_of[v]);
    if (tail_of[v] != -1) b.AddEdge(middle_of[v], tail_of[v]);
    if (!inst.parity.constrained(v)) b.AddEdge(balance, middle_of[v]);
  }
  for (size_t i = 0; i < inst.conflicts.size(); ++i) {
    const Conflict& c = inst.conflicts[i];
    if (c.size() == 2) {
      b.AddExactPair(head_of[c.vertex], c.edges[0], c.edges[1]);
      continue;
    }
    NetworkEmitter& net = networks[network_of_conflict[i]];
    VertexId v = c.vertex;
    std::vector<EdgeId> out =
        net.Emit(b, c.edges, [&](int j) { return j < 2 ? head_of[v] : middle_of[v]; });
    b.AddExactPair(head_of[v], out[0], out[1]);
  }
  if (b.instance().graph.edge_count() % 2 == 1) {
    b.AddEdge(balance, b.AddVertex(VertexRole::kBalancePendant, -1));
  }
  return b.Finish();
}

Reduction EoDscToEo2dec(const Instance& inst) {
  RequireValid(inst);
  RequireNoForced(inst, "disjoint-subset reduction");
  RequireDisjointKind(inst, ConflictKind::kSubset);
  const Multigraph& g = inst.graph;
  const int n = g.vertex_count();
  for (VertexId v = 0; v < n; ++v) {
    if (!inst.parity.constrained(v) || inst.parity.parity(v) != 0) {
      throw InputError("disjoint-subset reduction needs every vertex even-constrained");
    }
  }
  for (const Conflict& c : inst.conflicts) {
    if (c.size() < 2) {
      throw InputError("size-1 subset conflict: normalize the instance first");
    }
  }
  ReductionBuilder b(n, g.edge_count());
  b.AddOriginalVertices(n);

  struct Gadget {
    VertexId center, pendant, parity;
    std::vector<VertexId> relays;
  };
  std::vector<Gadget> gadgets;
  std::map<std::pair<VertexId, EdgeId>, VertexId> relay_of;
  for (const Conflict& c : inst.conflicts) {
    Gadget gd;
    gd.center = b.AddVertex(VertexRole::kGadgetCenter, -1);
    for (EdgeId e : c.edges) {
      gd.relays.push_back(b.AddVertex(VertexRole::kGadgetRelay, c.vertex));
      relay_of[{c.vertex, e}] = gd.relays.back();
    }
    gd.pendant = b.AddVertex(VertexRole::kGadgetPendant, -1);
    gd.parity = c.size() % 2 == 1 ? b.AddVertex(VertexRole::kGadgetParity, -1) : -1;
    gadgets.push_back(std::move(gd));
  }
  auto endpoint = [&](VertexId v, EdgeId e) {
    auto it = relay_of.find({v, e});
    return it == relay_of.end() ? v : it->second;
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    b.MapEdge(e, b.AddEdge(endpoint(ed.u, e), endpoint(ed.v, e)));
  }
  for (size_t i = 0; i < inst.conflicts.size(); ++i) {
    const Conflict& c = inst.conflicts[i];
    const Gadget& gd = gadgets[i];
    for (VertexId relay : gd.relays) b.AddEdge(gd.center, relay);
    EdgeId to_vertex = b.AddEdge(gd.center, c.vertex);
    EdgeId to_pendant = b.AddEdge(gd.center, gd.pendant);
    b.AddExactPair(gd.center, to_vertex, to_pendant);
    if (gd.parity != -1) b.AddEdge(gd.parity, c.vertex);
  }
  return b.Finish();
}

namespace {

// Normalizes, then removes forced edges. nullopt means infeasible.
std::optional<ForcedContraction> Prepare(const Instance& inst) {
  std::optional<Instance> normalized = Normalize(inst);
  if (!normalized) return std::nullopt;
  std::optional<ForcedContraction> contraction = ContractForced(*normalized);
  if (!contraction) return std::nullopt;
  std::optional<Instance> again = Normalize(contraction->reduced);
  if (!again) return std::nullopt;
  contraction->reduced = std::move(*again);
  return contraction;
}

DecisionResult Finish(const Instance& inst, const ForcedContraction& contraction,
                      const EoResult& eo,
                      std::initializer_list<const ReductionMap*> maps) {
  DecisionResult result;
  if (eo.t != 0) return result;
  Orientation o = eo.orientation;
  for (const ReductionMap* map : maps) o = PullBack(o, *map);
  o = contraction.Expand(o);
  if (!Verify(inst, o).feasible()) {
    throw std::logic_error("pulled-back orientation fails verification");
  }
  result.feasible = true;
  result.orientation = std::move(o);
  return result;
}

}  // namespace

DecisionResult SolvePcoDec(const Instance& inst) {
  RequireValid(inst);
  RequireDisjointKind(inst, ConflictKind::kExact);
  for (const Conflict& c : inst.conflicts) {
    if (c.size() == 1) {
      throw UnsupportedError(
          "size-1 exact conflicts are not handled by the disjoint-exact solver");
    }
  }
  std::optional<ForcedContraction> contraction = Prepare(inst);
  if (!contraction) return {};
  Reduction pairs = PcoDecToEo2dec(contraction->reduced);
  EoResult eo = SolveEo2dec(pairs.instance);
  return Finish(inst, *contraction, eo, {&pairs.map});
}

DecisionResult SolvePcoDsc(const Instance& inst) {
  RequireValid(inst);
  RequireDisjointKind(inst, ConflictKind::kSubset);
  std::optional<ForcedContraction> contraction = Prepare(inst);
  if (!contraction) return {};
  Reduction even = PcoToEo(contraction->reduced, ConflictMode::kSubset);
  Reduction pairs = EoDscToEo2dec(even.instance);
  EoResult eo = SolveEo2dec(pairs.instance);
  return Finish(inst, *contraction, eo, {&pairs.map, &even.map});
}

}  // namespace orient
