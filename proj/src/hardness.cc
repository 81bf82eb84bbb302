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

#include "orient/hardness.h"

#include <optional>
#include <stdexcept>

namespace orient {

VertexId HardnessLabels::vertex(const std::string& name) const {
  auto it = vertices.find(name);
  if (it == vertices.end()) throw std::out_of_range("no vertex labelled " + name);
  return it->second;
}

EdgeId HardnessLabels::edge(const std::string& name) const {
  auto it = edges.find(name);
  if (it == edges.end()) throw std::out_of_range("no edge labelled " + name);
  return it->second;
}

namespace {

std::string Name(const char* base, int a) {
  return std::string(base) + "[" + std::to_string(a) + "]";
}
std::string Name(const char* base, int a, int b) {
  return std::string(base) + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}
std::string Name(const char* base, int a, int b, int c) {
  return std::string(base) + "[" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + "]";
}

// Literal of variable i (0-based) in clause j, if any.
std::optional<bool> Occurrence(const SatInstance& f, int j, int i) {
  for (const Literal& l : f.clauses[j]) {
    if (l.variable == i) return l.negated;
  }
  return std::nullopt;
}

class Builder {
 public:
  VertexId Vertex(const std::string& name) {
    VertexId v = inst_.AddVertex();
    inst_.parity.set(v, 0);
    labels_.vertices[name] = v;
    return v;
  }
  EdgeId Edge(const std::string& name, VertexId a, VertexId b) {
    EdgeId e = inst_.AddEdge(a, b);
    labels_.edges[name] = e;
    return e;
  }
  void Pair(VertexId v, EdgeId a, EdgeId b, ConflictKind kind) {
    inst_.AddConflict(v, {a, b}, kind);
  }
  // Pendant v0' when the edge total is odd.
  void Balance(VertexId v0) {
    if (inst_.graph.edge_count() % 2 == 1) Edge("v0v0'", v0, Vertex("v0'"));
  }
  HardnessArtifact Finish(SatInstance f) {
    return {std::move(inst_), std::move(labels_), std::move(f)};
  }
  HardnessLabels& labels() { return labels_; }
  const Instance& instance() const { return inst_; }

 private:
  Instance inst_;
  HardnessLabels labels_;
};

void RequireClauses(const SatInstance& f) {
  f.Validate();
  if (f.clauses.empty()) throw InputError("formula needs at least one clause");
}

}  // namespace

HardnessArtifact ReduceToPco2ec(const SatInstance& f) {
  RequireClauses(f);
  const int n = f.variable_count;
  const int m = static_cast<int>(f.clauses.size());
  const int len = 2 * m;
  Builder b;
  std::vector<std::vector<VertexId>> x(n, std::vector<VertexId>(len));
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < len; ++l) x[i][l] = b.Vertex(Name("x", i + 1, l + 1));
  }
  std::vector<VertexId> c(m), a(m), bb(m);
  for (int j = 0; j < m; ++j) {
    c[j] = b.Vertex(Name("c", j + 1));
    a[j] = b.Vertex(Name("a", j + 1));
    bb[j] = b.Vertex(Name("b", j + 1));
  }
  VertexId v0 = b.Vertex("v0");

  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<EdgeId>> at(len);
    for (int l = 0; l + 1 < len; ++l) {
      EdgeId e = b.Edge(Name("spine", i + 1, l + 1), x[i][l], x[i][l + 1]);
      at[l].push_back(e);
      at[l + 1].push_back(e);
    }
    for (int l = 0; l < len; ++l) {
      // Spine vertex l (0-based) serves clause l / 2: a positive literal
      // at even l, a negated one at odd l.
      int j = l / 2;
      std::optional<bool> occ = Occurrence(f, j, i);
      VertexId clause_end = occ && *occ == (l % 2 == 1) ? c[j] : -1;
      int legs = l == 0 || l == len - 1 ? 3 : 2;
      for (int r = 0; r < legs; ++r) {
        VertexId end = v0;
        if (clause_end != -1) {
          end = clause_end;
          clause_end = -1;
        }
        at[l].push_back(b.Edge(Name("leg", i + 1, l + 1, r + 1), x[i][l], end));
      }
      for (size_t p = 0; p < at[l].size(); ++p) {
        for (size_t q = p + 1; q < at[l].size(); ++q) {
          b.Pair(x[i][l], at[l][p], at[l][q], ConflictKind::kExact);
        }
      }
    }
  }
  for (int j = 0; j < m; ++j) {
    EdgeId ac = b.Edge(Name("ac", j + 1), a[j], c[j]);
    EdgeId bc = b.Edge(Name("bc", j + 1), bb[j], c[j]);
    b.Pair(c[j], ac, bc, ConflictKind::kExact);
  }
  b.Balance(v0);
  return b.Finish(f);
}

HardnessArtifact ReduceToPco2sc(const SatInstance& input) {
  RequireClauses(input);
  SatInstance f = input;
  std::vector<int> padding_clauses, padding_variables;
  if (f.clauses.size() < 3) {
    int first = f.variable_count;
    f.variable_count += 3;
    for (int k = 0; k < 3; ++k) padding_variables.push_back(first + k);
    Clause pad = {Literal{first, false}, Literal{first + 1, false}, Literal{first + 2, false}};
    while (f.clauses.size() < 3) {
      padding_clauses.push_back(static_cast<int>(f.clauses.size()));
      f.clauses.push_back(pad);
    }
  }
  const int n = f.variable_count;
  const int m = static_cast<int>(f.clauses.size());
  Builder b;
  std::vector<std::vector<VertexId>> x(n, std::vector<VertexId>(m));
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < m; ++l) x[i][l] = b.Vertex(Name("x", i + 1, l + 1));
  }
  std::vector<VertexId> c(m), a(m);
  for (int j = 0; j < m; ++j) {
    c[j] = b.Vertex(Name("c", j + 1));
    a[j] = b.Vertex(Name("a", j + 1));
  }
  VertexId v0 = b.Vertex("v0");

  std::vector<std::vector<EdgeId>> literal_edges(m);
  for (int i = 0; i < n; ++i) {
    std::vector<EdgeId> z(m), y(m), ybar(m);
    for (int l = 0; l < m; ++l) {
      z[l] = b.Edge(Name("z", i + 1, l + 1), x[i][l], x[i][(l + 1) % m]);
    }
    for (int l = 0; l < m; ++l) {
      std::optional<bool> occ = Occurrence(f, l, i);
      VertexId y_end = occ && !*occ ? c[l] : v0;
      VertexId ybar_end = occ && *occ ? c[l] : v0;
      y[l] = b.Edge(Name("y", i + 1, l + 1), x[i][l], y_end);
      ybar[l] = b.Edge(Name("ybar", i + 1, l + 1), x[i][l], ybar_end);
      if (occ) literal_edges[l].push_back(*occ ? ybar[l] : y[l]);
    }
    for (int l = 0; l < m; ++l) {
      int next = (l + 1) % m;
      b.Pair(x[i][next], z[l], z[next], ConflictKind::kSubset);
      b.Pair(x[i][next], z[l], y[next], ConflictKind::kSubset);
      b.Pair(x[i][l], z[l], ybar[l], ConflictKind::kSubset);
    }
  }
  for (int j = 0; j < m; ++j) {
    const std::vector<EdgeId>& lits = literal_edges[j];
    for (size_t p = 0; p < lits.size(); ++p) {
      for (size_t q = p + 1; q < lits.size(); ++q) {
        b.Pair(c[j], lits[p], lits[q], ConflictKind::kSubset);
      }
    }
    b.Edge(Name("ac", j + 1), a[j], c[j]);
  }
  b.Balance(v0);
  b.labels().padding_clauses = std::move(padding_clauses);
  b.labels().padding_variables = std::move(padding_variables);
  return b.Finish(std::move(f));
}

}  // namespace orient
