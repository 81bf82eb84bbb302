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

#include "orient/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace orient {
namespace {

using Json = nlohmann::json;

[[noreturn]] void Fail(const std::string& field, const std::string& what) {
  throw InputError(field + ": " + what);
}

int ToInt(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) Fail(field, "expected an integer");
  auto value = j.get<int64_t>();
  if (value < std::numeric_limits<int32_t>::min() ||
      value > std::numeric_limits<int32_t>::max()) {
    Fail(field, "integer out of range");
  }
  return static_cast<int>(value);
}

int KeyToInt(const std::string& key, const std::string& field) {
  int value = 0;
  auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), value);
  if (ec != std::errc() || end != key.data() + key.size() || key.empty()) {
    Fail(field, "key \"" + key + "\" is not an integer");
  }
  return value;
}

const Json& Require(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) Fail(key, "missing");
  return *it;
}

}  // namespace

Instance ParseInstance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("syntax error: ") + e.what());
  }
  if (!doc.is_object()) Fail("document", "expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "version" && key != "vertices" && key != "edges" && key != "parity" &&
        key != "conflicts" && key != "forced") {
      Fail(key, "unknown field");
    }
  }
  if (int version = ToInt(Require(doc, "version"), "version"); version != kFormatVersion) {
    Fail("version", "unsupported version " + std::to_string(version));
  }
  int n = ToInt(Require(doc, "vertices"), "vertices");
  if (n < 0) Fail("vertices", "negative count");

  const Json& edges = Require(doc, "edges");
  if (!edges.is_array()) Fail("edges", "expected an array");
  std::vector<Edge> list;
  for (size_t i = 0; i < edges.size(); ++i) {
    std::string field = "edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) Fail(field, "expected [u, v]");
    list.push_back({ToInt(edges[i][0], field), ToInt(edges[i][1], field)});
  }
  Instance inst;
  inst.graph = Multigraph(n, std::move(list));
  inst.parity = ParityMap(n);

  if (auto it = doc.find("parity"); it != doc.end()) {
    if (!it->is_object()) Fail("parity", "expected an object");
    for (const auto& [key, value] : it->items()) {
      std::string field = "parity." + key;
      int v = KeyToInt(key, field);
      int p = ToInt(value, field);
      if (p != 0 && p != 1) Fail(field, "parity must be 0 or 1");
      if (v < 0 || v >= n) Fail(field, "vertex out of range");
      inst.parity.set(v, p);
    }
  }
  if (auto it = doc.find("conflicts"); it != doc.end()) {
    if (!it->is_array()) Fail("conflicts", "expected an array");
    for (size_t i = 0; i < it->size(); ++i) {
      const Json& c = (*it)[i];
      std::string field = "conflicts[" + std::to_string(i) + "]";
      if (!c.is_object()) Fail(field, "expected an object");
      for (const auto& [key, value] : c.items()) {
        if (key != "vertex" && key != "edges" && key != "kind") {
          Fail(field + "." + key, "unknown field");
        }
      }
      auto vertex = c.find("vertex");
      auto members = c.find("edges");
      auto kind = c.find("kind");
      if (vertex == c.end()) Fail(field + ".vertex", "missing");
      if (members == c.end() || !members->is_array()) Fail(field + ".edges", "expected an array");
      if (kind == c.end() || !kind->is_string()) Fail(field + ".kind", "expected a string");
      Conflict conflict;
      conflict.vertex = ToInt(*vertex, field + ".vertex");
      for (size_t k = 0; k < members->size(); ++k) {
        conflict.edges.push_back(
            ToInt((*members)[k], field + ".edges[" + std::to_string(k) + "]"));
      }
      std::sort(conflict.edges.begin(), conflict.edges.end());
      const std::string& name = kind->get_ref<const std::string&>();
      if (name == "exact") {
        conflict.kind = ConflictKind::kExact;
      } else if (name == "subset") {
        conflict.kind = ConflictKind::kSubset;
      } else {
        Fail(field + ".kind", "expected \"exact\" or \"subset\", got \"" + name + "\"");
      }
      inst.conflicts.push_back(std::move(conflict));
    }
  }
  if (auto it = doc.find("forced"); it != doc.end()) {
    if (!it->is_object()) Fail("forced", "expected an object");
    for (const auto& [key, value] : it->items()) {
      std::string field = "forced." + key;
      inst.forced[KeyToInt(key, field)] = ToInt(value, field);
    }
  }
  RequireValid(inst);
  return inst;
}

std::string SerializeInstance(const Instance& inst) {
  std::ostringstream out;
  auto join = [&out](const auto& items, auto write) {
    bool first = true;
    for (const auto& item : items) {
      out << (first ? "\n    " : ",\n    ");
      write(item);
      first = false;
    }
    if (!first) out << "\n  ";
  };
  out << "{\n  \"conflicts\": [";
  join(inst.conflicts, [&out](const Conflict& c) {
    out << "{\"edges\": [";
    for (size_t k = 0; k < c.edges.size(); ++k) out << (k ? ", " : "") << c.edges[k];
    out << "], \"kind\": \"" << ToString(c.kind) << "\", \"vertex\": " << c.vertex << "}";
  });
  out << "],\n  \"edges\": [";
  join(inst.graph.edges(), [&out](const Edge& e) { out << "[" << e.u << ", " << e.v << "]"; });
  out << "],\n  \"forced\": {";
  join(inst.forced, [&out](const auto& entry) {
    out << "\"" << entry.first << "\": " << entry.second;
  });
  out << "},\n  \"parity\": {";
  std::vector<std::pair<VertexId, int>> parity;
  for (VertexId v = 0; v < inst.parity.size(); ++v) {
    if (inst.parity.constrained(v)) parity.emplace_back(v, inst.parity.parity(v));
  }
  join(parity, [&out](const auto& entry) {
    out << "\"" << entry.first << "\": " << entry.second;
  });
  out << "},\n  \"version\": " << kFormatVersion << ",\n  \"vertices\": "
      << inst.graph.vertex_count() << "\n}\n";
  return out.str();
}

Orientation ParseOrientation(std::string_view text) {
  Orientation o;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    size_t end = line.find_last_not_of(" \t\r") + 1;
    int head = 0;
    auto [ptr, ec] = std::from_chars(line.data() + begin, line.data() + end, head);
    if (ec != std::errc() || ptr != line.data() + end) {
      throw InputError("orientation line " + std::to_string(line_no) +
                       ": expected a vertex id");
    }
    o.head.push_back(head);
  }
  return o;
}

std::string SerializeOrientation(const Orientation& o) {
  std::string out;
  for (VertexId h : o.head) out += std::to_string(h) + "\n";
  return out;
}

std::string ExportDot(const Instance& inst, const Orientation* o) {
  const Multigraph& g = inst.graph;
  if (o && o->size() != g.edge_count()) {
    throw InputError("orientation does not cover every edge");
  }
  std::vector<std::string> notes(g.edge_count());
  for (size_t i = 0; i < inst.conflicts.size(); ++i) {
    const Conflict& c = inst.conflicts[i];
    for (EdgeId e : c.edges) {
      if (!notes[e].empty()) notes[e] += ", ";
      notes[e] += "C" + std::to_string(i) + " " + ToString(c.kind) + "@" +
                  std::to_string(c.vertex);
    }
  }
  std::ostringstream out;
  out << (o ? "digraph" : "graph") << " orientation {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << v;
    if (inst.parity.constrained(v)) out << (inst.parity.parity(v) ? " odd" : " even");
    out << "\"];\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    VertexId tail = g.edge(e).u, head = g.edge(e).v;
    if (o) {
      head = o->head[e];
      if (!g.edge(e).has_endpoint(head)) {
        throw InputError("head of edge " + std::to_string(e) + " is not an endpoint");
      }
      tail = g.edge(e).other(head);
    }
    out << "  " << tail << (o ? " -> " : " -- ") << head << " [label=\"e" << e;
    if (!notes[e].empty()) out << " {" << notes[e] << "}";
    out << "\"";
    if (inst.forced.contains(e)) out << ", style=bold";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << contents;
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace orient
