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

// Command-line front end. Exit codes: 0 feasible or ok, 1 infeasible,
// 2 input error, 3 unsupported configuration.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "orient/graph.h"
#include "orient/hardness.h"
#include "orient/io.h"
#include "orient/oracle.h"
#include "orient/sat.h"
#include "orient/solve.h"

namespace {

constexpr int kOk = 0;
constexpr int kInfeasible = 1;
constexpr int kInputError = 2;
constexpr int kUnsupported = 3;

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    orient::WriteFile(path, text);
  }
}

struct SolveArgs {
  std::string input;
  std::string solver = "auto";
  bool max_parities = false;
  std::string output;
};

int RunSolve(const SolveArgs& args) {
  auto kind = orient::ParseSolverKind(args.solver);
  if (!kind) throw orient::InputError("unknown solver " + args.solver);
  orient::Instance inst = orient::ParseInstance(orient::ReadFile(args.input));
  orient::SolveOutcome out = orient::Solve(inst, *kind, args.max_parities);
  const orient::PcoResult& r = out.result;
  std::cerr << (r.feasible ? "feasible" : "infeasible") << " (solver "
            << orient::ToString(out.solver) << "; satisfied " << r.satisfied_count << "/"
            << r.constrained_count << ")\n";
  if (r.orientation) Emit(args.output, orient::SerializeOrientation(*r.orientation));
  return r.feasible ? kOk : kInfeasible;
}

int RunVerify(const std::string& instance_path, const std::string& orientation_path) {
  orient::Instance inst = orient::ParseInstance(orient::ReadFile(instance_path));
  orient::Orientation o = orient::ParseOrientation(orient::ReadFile(orientation_path));
  orient::VerifyReport report = orient::Verify(inst, o);
  for (orient::VertexId v : report.parity_violations) {
    std::cout << "parity violated at vertex " << v << "\n";
  }
  for (int i : report.conflict_violations) {
    std::cout << "conflict " << i << " violated at vertex " << inst.conflicts[i].vertex << "\n";
  }
  for (orient::EdgeId e : report.forced_violations) {
    std::cout << "forced edge " << e << " points the wrong way\n";
  }
  std::cout << (report.feasible() ? "ok" : "infeasible") << "\n";
  return report.feasible() ? kOk : kInfeasible;
}

int RunOracle(const std::string& input, int max_edges, const std::string& output) {
  orient::Instance inst = orient::ParseInstance(orient::ReadFile(input));
  orient::OracleResult r = orient::EnumerateBest(inst, max_edges);
  std::cout << "feasible " << (r.feasible ? "yes" : "no") << "\n"
            << "best_satisfied_parities " << r.best_satisfied_parities << "\n"
            << "min_odd_vertices " << r.min_odd_vertices << "\n";
  if (r.witness && !output.empty()) {
    orient::WriteFile(output, orient::SerializeOrientation(*r.witness));
  }
  return r.feasible ? kOk : kInfeasible;
}

int RunGenerate(const std::string& kind, const std::string& formula,
                const std::string& output, const std::string& labels_path) {
  orient::SatInstance f = orient::ParseDimacs(orient::ReadFile(formula));
  orient::HardnessArtifact art =
      kind == "ec" ? orient::ReduceToPco2ec(f) : orient::ReduceToPco2sc(f);
  Emit(output, orient::SerializeInstance(art.instance));
  if (!labels_path.empty()) {
    std::ostringstream text;
    for (const auto& [name, v] : art.labels.vertices) text << "vertex " << name << " " << v << "\n";
    for (const auto& [name, e] : art.labels.edges) text << "edge " << name << " " << e << "\n";
    for (int j : art.labels.padding_clauses) text << "padding-clause " << j + 1 << "\n";
    orient::WriteFile(labels_path, text.str());
  }
  return kOk;
}

int RunExportDot(const std::string& input, const std::string& orientation,
                 const std::string& output) {
  orient::Instance inst = orient::ParseInstance(orient::ReadFile(input));
  if (orientation.empty()) {
    Emit(output, orient::ExportDot(inst));
  } else {
    orient::Orientation o = orient::ParseOrientation(orient::ReadFile(orientation));
    Emit(output, orient::ExportDot(inst, &o));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parity-constrained orientations of multigraphs with conflicts"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Find a feasible orientation");
  solve_cmd->add_option("instance", solve.input, "Instance file")->required();
  solve_cmd->add_option("--solver", solve.solver, "auto|pco|pco-2dec|pco-dec|pco-dsc|fpt");
  solve_cmd->add_flag("--max-parities", solve.max_parities,
                      "Emit an orientation satisfying the most parities");
  solve_cmd->add_option("-o,--output", solve.output, "Orientation file (default stdout)");

  std::string verify_instance, verify_orientation;
  auto* verify_cmd = app.add_subcommand("verify", "Check an orientation");
  verify_cmd->add_option("instance", verify_instance)->required();
  verify_cmd->add_option("orientation", verify_orientation)->required();

  std::string oracle_input, oracle_output;
  int max_edges = orient::kDefaultOracleEdges;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force every orientation");
  oracle_cmd->add_option("instance", oracle_input)->required();
  oracle_cmd->add_option("--max-edges", max_edges);
  oracle_cmd->add_option("-o,--output", oracle_output, "Witness orientation file");

  std::string gen_kind, gen_formula, gen_output, gen_labels;
  auto* gen_cmd = app.add_subcommand("generate", "Encode a 1-in-3-SAT formula");
  gen_cmd->add_option("kind", gen_kind, "ec|sc")->required()->check(CLI::IsMember({"ec", "sc"}));
  gen_cmd->add_option("formula", gen_formula, "DIMACS file")->required();
  gen_cmd->add_option("-o,--output", gen_output);
  gen_cmd->add_option("--labels", gen_labels, "Write construction labels here");

  std::string dot_input, dot_orientation, dot_output;
  auto* dot_cmd = app.add_subcommand("export-dot", "Render as Graphviz");
  dot_cmd->add_option("instance", dot_input)->required();
  dot_cmd->add_option("--orientation", dot_orientation);
  dot_cmd->add_option("-o,--output", dot_output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*verify_cmd) return RunVerify(verify_instance, verify_orientation);
    if (*oracle_cmd) return RunOracle(oracle_input, max_edges, oracle_output);
    if (*gen_cmd) return RunGenerate(gen_kind, gen_formula, gen_output, gen_labels);
    if (*dot_cmd) return RunExportDot(dot_input, dot_orientation, dot_output);
  } catch (const orient::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const orient::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
