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

#ifndef ORIENT_HARDNESS_H_
#define ORIENT_HARDNESS_H_

#include <map>
#include <string>
#include <vector>

#include "orient/graph.h"
#include "orient/sat.h"

namespace orient {

// Names of the construction's vertices and edges, 1-based as in the
// construction: x[i,l], c[j], a[j], b[j], v0, v0' for vertices;
// spine[i,l], leg[i,l,r], ac[j], bc[j] (exact) or z[i,l], y[i,l],
// ybar[i,l], ac[j] (subset), and v0v0' for edges.
struct HardnessLabels {
  std::map<std::string, VertexId> vertices;
  std::map<std::string, EdgeId> edges;
  // 0-based indices into formula.clauses of padding clauses, and the
  // variables they introduced.
  std::vector<int> padding_clauses;
  std::vector<int> padding_variables;

  VertexId vertex(const std::string& name) const;
  EdgeId edge(const std::string& name) const;
};

struct HardnessArtifact {
  Instance instance;
  HardnessLabels labels;
  SatInstance formula;  // the formula actually encoded, padding included
};

// Caterpillar construction with exact conflict pairs. Needs >= 1 clause.
HardnessArtifact ReduceToPco2ec(const SatInstance& f);

// Circuit construction with subset conflict pairs. Needs >= 1 clause;
// formulas with fewer than 3 clauses are padded with copies of one clause
// over 3 fresh variables.
HardnessArtifact ReduceToPco2sc(const SatInstance& f);

}  // namespace orient

#endif  // ORIENT_HARDNESS_H_
