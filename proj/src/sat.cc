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

#include "orient/sat.h"

#include <sstream>

#include "orient/graph.h"

namespace orient {

void SatInstance::Validate() const {
  if (variable_count < 0) throw InputError("negative variable count");
  for (size_t j = 0; j < clauses.size(); ++j) {
    const Clause& c = clauses[j];
    for (int a = 0; a < 3; ++a) {
      if (c[a].variable < 0 || c[a].variable >= variable_count) {
        throw InputError("clause " + std::to_string(j + 1) + ": variable out of range");
      }
      for (int b = 0; b < a; ++b) {
        if (c[a].variable == c[b].variable) {
          throw InputError("clause " + std::to_string(j + 1) + ": variable " +
                           std::to_string(c[a].variable + 1) + " repeated");
        }
      }
    }
  }
}

bool SatInstance::Satisfied(const std::vector<bool>& assignment) const {
  for (const Clause& c : clauses) {
    int true_count = 0;
    for (const Literal& l : c) true_count += assignment[l.variable] != l.negated;
    if (true_count != 1) return false;
  }
  return true;
}

SatInstance ParseDimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int declared_clauses = 0;
  SatInstance f;
  std::vector<int> pending;
  auto fail = [&line_no](const std::string& what) {
    throw InputError("dimacs line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first) || first[0] == 'c' || first == "%") continue;
    if (first == "p") {
      std::string format;
      if (have_header) fail("second header");
      if (!(tokens >> format >> f.variable_count >> declared_clauses) || format != "cnf" ||
          f.variable_count < 0 || declared_clauses < 0) {
        fail("expected 'p cnf <variables> <clauses>'");
      }
      have_header = true;
      continue;
    }
    if (!have_header) fail("clause before header");
    std::istringstream all(line);
    long long value;
    while (all >> value) {
      if (value == 0) {
        if (pending.size() != 3) fail("clause must have exactly 3 literals");
        Clause c;
        for (int a = 0; a < 3; ++a) {
          int v = pending[a] < 0 ? -pending[a] : pending[a];
          if (v > f.variable_count) fail("variable " + std::to_string(v) + " out of range");
          c[a] = {v - 1, pending[a] < 0};
        }
        f.clauses.push_back(c);
        pending.clear();
      } else {
        if (value > 1'000'000'000 || value < -1'000'000'000) fail("literal out of range");
        pending.push_back(static_cast<int>(value));
      }
    }
    if (!all.eof()) fail("unexpected token");
  }
  if (!have_header) throw InputError("dimacs: missing header");
  if (!pending.empty()) throw InputError("dimacs: unterminated clause");
  if (static_cast<int>(f.clauses.size()) != declared_clauses) {
    throw InputError("dimacs: header declares " + std::to_string(declared_clauses) +
                     " clauses, found " + std::to_string(f.clauses.size()));
  }
  f.Validate();
  return f;
}

std::string ToDimacs(const SatInstance& f) {
  std::ostringstream out;
  out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c) out << (l.negated ? -(l.variable + 1) : l.variable + 1) << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace orient
