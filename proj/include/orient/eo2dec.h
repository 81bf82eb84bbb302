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

#ifndef ORIENT_EO2DEC_H_
#define ORIENT_EO2DEC_H_

#include <span>
#include <vector>

#include "orient/graph.h"
#include "orient/matching.h"
#include "orient/pco.h"

namespace orient {

// Line graph of a multigraph with conflicting adjacent pairs removed. Node i
// is edge i; two edges are linked when some common endpoint does not carry
// them as a conflict pair.
struct LPrimeGraph {
  struct Link {
    EdgeId a = 0;  // a < b
    EdgeId b = 0;
    std::vector<VertexId> witnesses;  // ascending, never empty
  };

  int node_count = 0;
  std::vector<Link> links;  // ascending by (a, b)

  SimpleGraph AsSimpleGraph() const;
  // Witnesses of the link between a and b; empty if unlinked.
  std::span<const VertexId> witnesses(EdgeId a, EdgeId b) const;
};

// Throws InputError unless every conflict is an exact pair and the conflicts
// are pairwise disjoint.
void RequireDisjointExactPairs(const Instance& inst);

LPrimeGraph BuildLPrime(const Multigraph& g, std::span<const Conflict> conflicts);

struct EoResult {
  Orientation orientation;
  std::vector<VertexId> odd_vertices;  // ascending
  int t = 0;                           // == odd_vertices.size()
};

// Orients each matched pair into its smallest witness, then walks the
// unmatched edges (which form vertex-disjoint paths and circuits when the
// matching is maximum) so that each gets a distinct head. Paths start at
// their smallest endpoint; circuits start at their smallest vertex towards
// its smaller neighbour. Throws std::logic_error if the unmatched edges do
// not have that shape, which means `m` was not maximum.
EoResult MatchingToOrientation(const Multigraph& g, const LPrimeGraph& lp,
                               const Matching& m);

// Even orientation with disjoint exact conflict pairs, minimizing the number
// of odd vertices. Parity entries other than "even" and forced edges are
// rejected.
EoResult SolveEo2dec(const Instance& inst);

// Parity-constrained orientation with disjoint exact conflict pairs. The
// decision goes through the even-orientation reduction; when no feasible
// orientation exists the returned orientation is conflict-free and
// satisfies the maximum number of parity constraints.
PcoResult SolvePco2dec(const Instance& inst);

}  // namespace orient

#endif  // ORIENT_EO2DEC_H_
