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

#ifndef ORIENT_GRAPH_H_
#define ORIENT_GRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace orient {

using VertexId = int32_t;
using EdgeId = int32_t;

// Malformed input: bad document, structurally invalid instance, violated
// solver precondition.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Valid input that a solver deliberately does not handle (for example a
// size-1 exact conflict on the disjoint-exact route).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  bool has_endpoint(VertexId x) const { return u == x || v == x; }
  // The endpoint that is not `x`. `x` must be an endpoint.
  VertexId other(VertexId x) const { return x == u ? v : u; }
  VertexId low() const { return u < v ? u : v; }
  VertexId high() const { return u < v ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected multigraph. Edges are identified by their position. Parallel
// edges are allowed; self-loops are rejected by AddEdge. The raw
// constructor performs no checks so that validate_instance can report them.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int vertex_count) : vertex_count_(vertex_count) {}
  Multigraph(int vertex_count, std::vector<Edge> edges)
      : vertex_count_(vertex_count), edges_(std::move(edges)) {}

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  VertexId AddVertex() { return vertex_count_++; }
  // Throws InputError on out-of-range endpoints and self-loops.
  EdgeId AddEdge(VertexId u, VertexId v);

  // incidence()[v] lists the edges at v in increasing EdgeId order.
  std::vector<std::vector<EdgeId>> incidence() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Partial map vertex -> required indegree parity.
class ParityMap {
 public:
  ParityMap() = default;
  explicit ParityMap(int vertex_count) : bits_(vertex_count, kFree) {}

  int size() const { return static_cast<int>(bits_.size()); }
  void resize(int vertex_count) { bits_.resize(vertex_count, kFree); }

  bool constrained(VertexId v) const { return bits_[v] != kFree; }
  // Requires constrained(v).
  int parity(VertexId v) const { return bits_[v]; }
  void set(VertexId v, int parity) { bits_[v] = static_cast<int8_t>(parity & 1); }
  void clear(VertexId v) { bits_[v] = kFree; }
  void flip(VertexId v) {
    if (constrained(v)) bits_[v] ^= 1;
  }
  int constrained_count() const;

  friend bool operator==(const ParityMap&, const ParityMap&) = default;

 private:
  static constexpr int8_t kFree = -1;
  std::vector<int8_t> bits_;
};

enum class ConflictKind { kExact, kSubset };

const char* ToString(ConflictKind kind);

struct Conflict {
  VertexId vertex = 0;
  std::vector<EdgeId> edges;  // kept sorted
  ConflictKind kind = ConflictKind::kExact;

  int size() const { return static_cast<int>(edges.size()); }
  bool contains(EdgeId e) const;

  friend bool operator==(const Conflict&, const Conflict&) = default;
};

struct Instance {
  Multigraph graph;
  ParityMap parity;
  std::vector<Conflict> conflicts;
  std::map<EdgeId, VertexId> forced;  // edge -> required head

  // Empty instance with `n` vertices, all unconstrained.
  static Instance WithVertices(int n);

  VertexId AddVertex();
  EdgeId AddEdge(VertexId u, VertexId v) { return graph.AddEdge(u, v); }
  // Sorts `edges` before storing.
  void AddConflict(VertexId v, std::vector<EdgeId> edges, ConflictKind kind);

  bool has_conflicts() const { return !conflicts.empty(); }
  bool all_conflicts_of(ConflictKind kind) const;
  // Conflicts at the same vertex have pairwise disjoint edge sets.
  bool pairwise_disjoint() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// head[e] is the endpoint edge e points into.
struct Orientation {
  std::vector<VertexId> head;

  int size() const { return static_cast<int>(head.size()); }
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

std::vector<int> Indegrees(const Multigraph& g, const Orientation& o);

// Edges pointing into each vertex, in EdgeId order.
std::vector<std::vector<EdgeId>> IncomingSets(const Multigraph& g,
                                              const Orientation& o);

struct StructuralError {
  std::string message;
};

// Checks every structural invariant of the instance model. Returns an empty
// list for a valid instance.
std::vector<StructuralError> ValidateInstance(const Instance& inst);

// Throws InputError carrying the first few structural errors, if any.
void RequireValid(const Instance& inst);

struct VerifyReport {
  std::vector<VertexId> parity_violations;
  std::vector<int> conflict_violations;  // indices into inst.conflicts
  std::vector<EdgeId> forced_violations;

  bool feasible() const {
    return parity_violations.empty() && conflict_violations.empty() &&
           forced_violations.empty();
  }
};

// Throws InputError when `o` does not cover every edge or names a head that
// is not an endpoint.
VerifyReport Verify(const Instance& inst, const Orientation& o);

// Number of constrained vertices whose indegree parity matches.
int SatisfiedParities(const Instance& inst, const Orientation& o);

// Removes exact conflicts that parity alone already rules out and turns
// size-1 subset conflicts into forced edges. Returns nullopt when two
// forcings contradict.
std::optional<Instance> Normalize(const Instance& inst);

// Result of eliminating forced edges from an instance.
struct ForcedContraction {
  Instance reduced;                 // no forced edges, no size-1 subsets
  std::vector<EdgeId> kept;         // reduced EdgeId -> original EdgeId
  std::vector<VertexId> fixed_head; // original EdgeId -> head, -1 if free
  // Odd-constrained vertices whose exact conflict was forced in entirely and
  // dropped; sound only while their parity holds.
  std::vector<VertexId> needs_incoming;

  // Combines an orientation of `reduced` with the fixed heads.
  Orientation Expand(const Orientation& reduced_orientation) const;
};

// Deletes every forced edge, flipping the parity of its head, and rewrites
// the conflicts it touches: a conflict left by the edge is discharged, as is
// an exact conflict at its head that does not contain it; a conflict
// entered by the edge loses that member. Size-1 subset conflicts created on
// the way become forced edges themselves. Returns nullopt when the forcings
// are contradictory or a subset conflict is fully forced in. Throws
// UnsupportedError if an exact conflict loses all its members while its
// vertex is not odd-constrained.
std::optional<ForcedContraction> ContractForced(const Instance& inst);

struct Component {
  std::vector<VertexId> vertices;  // ascending
  std::vector<EdgeId> edges;       // ascending
};

// Connected components ordered by smallest vertex id.
std::vector<Component> Components(const Multigraph& g);

}  // namespace orient

#endif  // ORIENT_GRAPH_H_
