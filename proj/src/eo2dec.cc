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

#include "orient/eo2dec.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "orient/reductions.h"

namespace orient {

SimpleGraph LPrimeGraph::AsSimpleGraph() const {
  SimpleGraph g;
  g.node_count = node_count;
  g.links.reserve(links.size());
  for (const Link& l : links) g.links.emplace_back(l.a, l.b);
  return g;
}

std::span<const VertexId> LPrimeGraph::witnesses(EdgeId a, EdgeId b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(
      links.begin(), links.end(), std::make_pair(a, b),
      [](const Link& l, const std::pair<EdgeId, EdgeId>& key) {
        return std::make_pair(l.a, l.b) < key;
      });
  if (it == links.end() || it->a != a || it->b != b) return {};
  return it->witnesses;
}

void RequireDisjointExactPairs(const Instance& inst) {
  for (size_t i = 0; i < inst.conflicts.size(); ++i) {
    const Conflict& c = inst.conflicts[i];
    if (c.kind != ConflictKind::kExact || c.size() != 2) {
      throw InputError("conflict " + std::to_string(i) +
                       " is not an exact conflict pair");
    }
  }
  if (!inst.pairwise_disjoint()) {
    throw InputError("conflicts are not pairwise disjoint");
  }
}

namespace {

using PairKey = std::tuple<VertexId, EdgeId, EdgeId>;

std::set<PairKey> ConflictPairs(std::span<const Conflict> conflicts) {
  std::set<PairKey> out;
  for (const Conflict& c : conflicts) {
    if (c.size() == 2) out.emplace(c.vertex, c.edges[0], c.edges[1]);
  }
  return out;
}

bool IsConflictAt(const std::set<PairKey>& pairs, VertexId v, EdgeId a, EdgeId b) {
  if (a > b) std::swap(a, b);
  return pairs.contains({v, a, b});
}

}  // namespace

LPrimeGraph BuildLPrime(const Multigraph& g, std::span<const Conflict> conflicts) {
  for (const Conflict& c : conflicts) {
    if (c.kind != ConflictKind::kExact || c.size() != 2) {
      throw InputError("line graph construction takes exact conflict pairs only");
    }
  }
  std::set<PairKey> pairs = ConflictPairs(conflicts);
  if (pairs.size() != conflicts.size()) {
    throw InputError("duplicate conflict pair");
  }
  std::map<std::pair<EdgeId, EdgeId>, std::vector<VertexId>> links;
  std::vector<std::vector<EdgeId>> inc = g.incidence();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::vector<EdgeId>& at = inc[v];
    for (size_t i = 0; i < at.size(); ++i) {
      for (size_t j = i + 1; j < at.size(); ++j) {
        if (IsConflictAt(pairs, v, at[i], at[j])) continue;
        links[{at[i], at[j]}].push_back(v);
      }
    }
  }
  LPrimeGraph lp;
  lp.node_count = g.edge_count();
  lp.links.reserve(links.size());
  for (auto& [key, witnesses] : links) {
    std::sort(witnesses.begin(), witnesses.end());
    lp.links.push_back({key.first, key.second, std::move(witnesses)});
  }
  return lp;
}

namespace {

// Unmatched edges, grouped by endpoint.
std::vector<std::vector<EdgeId>> StarLists(const Multigraph& g,
                                           const std::vector<bool>& unmatched) {
  std::vector<std::vector<EdgeId>> star(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!unmatched[e]) continue;
    star[g.edge(e).u].push_back(e);
    star[g.edge(e).v].push_back(e);
  }
  return star;
}

// The unmatched edges of a maximum matching meet each vertex at most twice,
// and two of them meet only where they form a conflict pair.
void CheckStarShape(const Multigraph& g, const LPrimeGraph& lp,
                    const std::vector<std::vector<EdgeId>>& star) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (star[v].size() > 2) {
      throw std::logic_error("unmatched edges meet vertex " + std::to_string(v) +
                             " three or more times; matching not maximum");
    }
    if (star[v].size() == 2) {
      auto w = lp.witnesses(star[v][0], star[v][1]);
      if (std::find(w.begin(), w.end(), v) != w.end()) {
        throw std::logic_error("two matchable unmatched edges at vertex " +
                               std::to_string(v) + "; matching not maximum");
      }
    }
  }
}

// Orients the path or circuit starting with edge `first` out of `start`,
// each edge pointing away from the previous one.
void WalkForward(const Multigraph& g, const std::vector<std::vector<EdgeId>>& star,
                 VertexId start, EdgeId first, std::vector<bool>& done,
                 std::vector<VertexId>& head) {
  VertexId cur = start;
  EdgeId e = first;
  while (true) {
    done[e] = true;
    cur = g.edge(e).other(cur);
    head[e] = cur;
    auto next = std::find_if(star[cur].begin(), star[cur].end(),
                             [&done](EdgeId x) { return !done[x]; });
    if (next == star[cur].end()) return;
    e = *next;
  }
}

// Circuit start edge at `v`: towards the smaller neighbour, then smaller id.
EdgeId CircuitStart(const Multigraph& g, const std::vector<EdgeId>& at, VertexId v) {
  EdgeId a = at[0];
  EdgeId b = at[1];
  auto key = [&](EdgeId e) { return std::make_pair(g.edge(e).other(v), e); };
  return key(a) < key(b) ? a : b;
}

}  // namespace

EoResult MatchingToOrientation(const Multigraph& g, const LPrimeGraph& lp,
                               const Matching& m) {
  if (static_cast<int>(m.mate.size()) != g.edge_count()) {
    throw InputError("matching size does not match the line graph");
  }
  std::vector<VertexId> head(g.edge_count(), -1);
  std::vector<bool> unmatched(g.edge_count(), false);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    EdgeId f = m.mate[e];
    if (f == -1) {
      unmatched[e] = true;
      continue;
    }
    auto w = lp.witnesses(e, f);
    if (w.empty()) throw InputError("matched pair is not a link of the line graph");
    head[e] = w.front();
  }
  std::vector<std::vector<EdgeId>> star = StarLists(g, unmatched);
  CheckStarShape(g, lp, star);

  std::vector<bool> done(g.edge_count(), false);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (star[v].size() == 1 && !done[star[v][0]]) {
      WalkForward(g, star, v, star[v][0], done, head);
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (star[v].size() == 2 && !done[star[v][0]]) {
      WalkForward(g, star, v, CircuitStart(g, star[v], v), done, head);
    }
  }

  EoResult result;
  result.orientation.head = std::move(head);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (unmatched[e]) result.odd_vertices.push_back(result.orientation.head[e]);
  }
  std::sort(result.odd_vertices.begin(), result.odd_vertices.end());
  result.t = static_cast<int>(result.odd_vertices.size());
  return result;
}

EoResult SolveEo2dec(const Instance& inst) {
  RequireValid(inst);
  if (!inst.forced.empty()) {
    throw InputError("even-orientation solver takes no forced edges");
  }
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v) {
    if (inst.parity.constrained(v) && inst.parity.parity(v) != 0) {
      throw InputError("even-orientation solver: vertex " + std::to_string(v) +
                       " has an odd constraint");
    }
  }
  RequireDisjointExactPairs(inst);
  LPrimeGraph lp = BuildLPrime(inst.graph, inst.conflicts);
  Matching m = MaxMatching(lp.AsSimpleGraph());
  return MatchingToOrientation(inst.graph, lp, m);
}

namespace {

// Maximum number of satisfied parity constraints over conflict-free
// orientations, for disjoint exact pairs.
//
// Matching model: nodes are the edges plus one partner node per odd vertex
// (must be covered for the vertex to count) and one per unconstrained vertex
// (free to stay exposed). A partner links to every edge at its vertex. The
// exposed non-free nodes of a matching that covers as many of them as
// possible equal the minimum number of violated constraints. That matching
// is found as a maximum matching of two copies of the graph whose free
// partners are joined to their twins.
class ParityMaximizer {
 public:
  explicit ParityMaximizer(const Instance& inst)
      : g_(inst.graph),
        parity_(inst.parity),
        pairs_(ConflictPairs(inst.conflicts)),
        lp_(BuildLPrime(g_, inst.conflicts)),
        inc_(g_.incidence()),
        partner_of_(g_.vertex_count(), -1) {
    int nodes = g_.edge_count();
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      bool odd = parity_.constrained(v) && parity_.parity(v) == 1;
      if (odd || !parity_.constrained(v)) {
        partner_of_[v] = nodes++;
        partner_vertex_.push_back(v);
      }
    }
    node_count_ = nodes;
  }

  Orientation Run() {
    mate_ = InitialMatching();
    const int limit = 4 * (g_.edge_count() + g_.vertex_count()) + 16;
    for (int round = 0; round < limit; ++round) {
      if (auto o = TryOrient()) return *o;
    }
    throw std::logic_error("parity maximizer did not settle");
  }

 private:
  bool IsPartner(NodeId x) const { return x >= g_.edge_count(); }
  VertexId PartnerVertex(NodeId x) const {
    return partner_vertex_[x - g_.edge_count()];
  }

  std::vector<NodeId> InitialMatching() const {
    SimpleGraph h;
    h.node_count = 2 * node_count_;
    auto add = [&h, this](NodeId a, NodeId b) {
      h.links.emplace_back(a, b);
      h.links.emplace_back(a + node_count_, b + node_count_);
    };
    for (const auto& l : lp_.links) add(l.a, l.b);
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (partner_of_[v] == -1) continue;
      for (EdgeId e : inc_[v]) add(e, partner_of_[v]);
      if (!parity_.constrained(v)) {
        h.links.emplace_back(partner_of_[v], partner_of_[v] + node_count_);
      }
    }
    Matching doubled = MaxMatching(h);
    std::vector<NodeId> mate(node_count_, -1);
    for (NodeId x = 0; x < node_count_; ++x) {
      if (doubled.mate[x] != -1 && doubled.mate[x] < node_count_) {
        mate[x] = doubled.mate[x];
      }
    }
    return mate;
  }

  // Builds the orientation for the current matching, or performs one
  // re-matching step and returns nullopt.
  std::optional<Orientation> TryOrient() {
    const int m = g_.edge_count();
    std::vector<VertexId> head(m, -1);
    std::vector<bool> unmatched(m, false);
    std::vector<int> paired_in(g_.vertex_count(), 0);
    std::vector<EdgeId> via_partner(g_.vertex_count(), -1);
    for (EdgeId e = 0; e < m; ++e) {
      NodeId x = mate_[e];
      if (x == -1) {
        unmatched[e] = true;
      } else if (IsPartner(x)) {
        head[e] = PartnerVertex(x);
        via_partner[head[e]] = e;
      } else {
        head[e] = lp_.witnesses(e, x).front();
        ++paired_in[head[e]];
      }
    }
    std::vector<std::vector<EdgeId>> star = StarLists(g_, unmatched);
    CheckStarShape(g_, lp_, star);

    // An endpoint may not receive its unmatched edge when that edge and the
    // one brought in by the partner are a conflict pair there.
    auto risky = [&](VertexId s) {
      EdgeId f = star[s][0];
      return paired_in[s] == 0 && via_partner[s] != -1 &&
             IsConflictAt(pairs_, s, via_partner[s], f);
    };

    std::vector<bool> done(m, false);
    for (VertexId s = 0; s < g_.vertex_count(); ++s) {
      if (star[s].size() != 1 || done[star[s][0]]) continue;
      VertexId t = PathEnd(star, s);
      bool t_risky = risky(t);
      if (t_risky && risky(s)) {
        // Let a partner bring in the unmatched edge instead. A component
        // created by the previous swap is continued at its far end.
        VertexId x = s == last_swap_ ? t : s;
        NodeId p = partner_of_[x];
        EdgeId f = star[x][0];
        mate_[via_partner[x]] = -1;
        mate_[p] = f;
        mate_[f] = p;
        last_swap_ = x;
        return std::nullopt;
      }
      // The walk ends in the far endpoint, so a risky one becomes the tail.
      VertexId tail = t_risky ? t : s;
      WalkForward(g_, star, tail, star[tail][0], done, head);
    }
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
      if (star[v].size() == 2 && !done[star[v][0]]) {
        WalkForward(g_, star, v, CircuitStart(g_, star[v], v), done, head);
      }
    }
    return Orientation{std::move(head)};
  }

  VertexId PathEnd(const std::vector<std::vector<EdgeId>>& star, VertexId s) const {
    VertexId cur = s;
    EdgeId prev = -1;
    while (true) {
      auto next = std::find_if(star[cur].begin(), star[cur].end(),
                               [prev](EdgeId x) { return x != prev; });
      if (next == star[cur].end()) return cur;
      prev = *next;
      cur = g_.edge(prev).other(cur);
    }
  }

  const Multigraph& g_;
  const ParityMap& parity_;
  std::set<PairKey> pairs_;
  LPrimeGraph lp_;
  std::vector<std::vector<EdgeId>> inc_;
  std::vector<NodeId> partner_of_;      // vertex -> partner node or -1
  std::vector<VertexId> partner_vertex_;
  int node_count_ = 0;
  std::vector<NodeId> mate_;
  VertexId last_swap_ = -1;
};

}  // namespace

PcoResult SolvePco2dec(const Instance& inst) {
  RequireValid(inst);
  RequireDisjointExactPairs(inst);
  std::optional<ForcedContraction> contraction = ContractForced(inst);
  if (!contraction) throw std::logic_error("exact pairs cannot contradict forcings");
  const Instance& core = contraction->reduced;
  for (const Conflict& c : core.conflicts) {
    if (c.size() != 2) {
      throw UnsupportedError("forced edges shrink a conflict pair at vertex " +
                             std::to_string(c.vertex));
    }
  }

  Reduction even = PcoToEo(core, ConflictMode::kExact);
  EoResult eo = SolveEo2dec(even.instance);
  PcoResult result;
  result.feasible = eo.t == 0;
  Orientation core_orientation = result.feasible
                                     ? PullBack(eo.orientation, even.map)
                                     : ParityMaximizer(core).Run();
  Orientation o = contraction->Expand(core_orientation);
  result.constrained_count = inst.parity.constrained_count();
  result.satisfied_count = SatisfiedParities(inst, o);
  if (!result.feasible && result.satisfied_count == result.constrained_count &&
      Verify(inst, o).feasible()) {
    throw std::logic_error("even-orientation route and parity maximizer disagree");
  }
  VerifyReport report = Verify(inst, o);
  if (!report.conflict_violations.empty() || !report.forced_violations.empty()) {
    if (contraction->needs_incoming.empty()) {
      throw std::logic_error("parity maximizer violated a conflict");
    }
    throw UnsupportedError("cannot maximize parities around a fully forced exact conflict");
  }
  result.orientation = std::move(o);
  return result;
}

}  // namespace orient
