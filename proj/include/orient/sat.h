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

#ifndef ORIENT_SAT_H_
#define ORIENT_SAT_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace orient {

struct Literal {
  int variable = 0;  // 0-based
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

// A 1-in-3-SAT formula: every clause holds three literals over three
// distinct variables.
struct SatInstance {
  int variable_count = 0;
  std::vector<Clause> clauses;

  // Throws InputError on out-of-range or repeated variables.
  void Validate() const;
  // Exactly one literal of every clause is true under `assignment`.
  bool Satisfied(const std::vector<bool>& assignment) const;

  friend bool operator==(const SatInstance&, const SatInstance&) = default;
};

// DIMACS CNF restricted to three literals per clause. Comment lines start
// with 'c'. Throws InputError with a line number on malformed input.
SatInstance ParseDimacs(std::string_view text);
std::string ToDimacs(const SatInstance& f);

}  // namespace orient

#endif  // ORIENT_SAT_H_
