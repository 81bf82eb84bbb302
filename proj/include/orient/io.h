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

#ifndef ORIENT_IO_H_
#define ORIENT_IO_H_

#include <string>
#include <string_view>

#include "orient/graph.h"

namespace orient {

inline constexpr int kFormatVersion = 1;

// JSON instance document:
//   {"conflicts": [{"edges": [..], "kind": "exact"|"subset", "vertex": v}],
//    "edges": [[u, v], ..], "forced": {"e": head}, "parity": {"v": 0|1},
//    "version": 1, "vertices": n}
// Throws InputError naming the line or field at fault, or carrying the
// structural errors of the decoded instance.
Instance ParseInstance(std::string_view text);

// Canonical form: keys sorted, map entries in numeric order, conflict edge
// lists sorted, one edge or conflict per line.
std::string SerializeInstance(const Instance& inst);

// One head per line, in EdgeId order.
Orientation ParseOrientation(std::string_view text);
std::string SerializeOrientation(const Orientation& o);

// Graphviz text. Undirected without an orientation; otherwise each arc
// points to its head. Edges carry the conflicts they belong to.
std::string ExportDot(const Instance& inst, const Orientation* o = nullptr);

// Throw InputError on I/O failure.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace orient

#endif  // ORIENT_IO_H_
