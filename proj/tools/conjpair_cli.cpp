// Copyright 2026 The conjpair Authors
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

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conjpair/reports.hpp"

using namespace conjpair;

int main(int argc, char** argv) {
  CLI::App app{"Product vectors with partial conjugates in subspace pairs"};
  app.require_subcommand(1);

  std::string format = "json";
  std::uint64_t seed = 0;
  int restarts = SolverConfig{}.restarts;
  double tol = SolverConfig{}.tol_residual;
  bool trace = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", seed, "Seed for every stochastic step");
  app.add_option("--restarts", restarts, "Solver restarts")->check(CLI::PositiveNumber);
  app.add_option("--tol", tol, "Residual threshold for a witness")->check(CLI::PositiveNumber);
  app.add_flag("--trace", trace, "Include per-restart residuals");

  int m = 0, n = 0, k = 0, l = 0;
  auto* condition = app.add_subcommand("condition", "Verdict of the obstruction calculus");
  condition->add_option("m", m)->required();
  condition->add_option("n", n)->required();
  condition->add_option("k", k)->required();
  condition->add_option("l", l)->required();

  int max_product = 0;
  auto* scan = app.add_subcommand("scan", "Exceptional quadruples with m*n bounded");
  scan->add_option("max_product", max_product)->required();

  std::string d_path, e_path, example;
  auto* find = app.add_subcommand("find", "Search for a witness pair");
  find->add_option("D", d_path, "Subspace JSON for D");
  find->add_option("E", e_path, "Subspace JSON for E");
  find->add_option("--example", example, "Built-in example")
      ->check(CLI::IsMember(example_names()));

  auto* types = app.add_subcommand("types", "Edge-state types not ruled out");
  types->add_option("m", m)->required();
  types->add_option("n", n)->required();

  app.add_subcommand("trace-cert", "Trace-map certificate for the 3x3 example");

  std::string state_path;
  double rank_tol = 1e-8;
  auto* edge = app.add_subcommand("edge", "Range check of a PPT state");
  edge->add_option("state", state_path, "State JSON")->required();
  edge->add_option("--rank-tol", rank_tol, "Relative eigenvalue cutoff");

  int codim = 0;
  auto* sample = app.add_subcommand("sample", "Random subspace as Subspace JSON");
  sample->add_option("m", m)->required();
  sample->add_option("n", n)->required();
  sample->add_option("codim", codim)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  SolverConfig config;
  config.seed = seed;
  config.restarts = restarts;
  config.tol_residual = tol;

  const auto start = std::chrono::steady_clock::now();
  Report report;
  Json inputs;
  if (condition->parsed()) {
    inputs = {{"m", m}, {"n", n}, {"k", k}, {"l", l}};
    try {
      report = cmd_condition(Quadruple(m, n, k, l));
    } catch (const std::exception& e) {
      report = {{{"command", "condition"}, {"error", e.what()}}, kExitError};
    }
  } else if (scan->parsed()) {
    inputs = {{"max_product", max_product}};
    report = cmd_scan(max_product);
  } else if (find->parsed()) {
    FindRequest request{d_path, e_path, std::nullopt, config, trace};
    if (!example.empty()) {
      request.example = example;
    } else if (d_path.empty() || e_path.empty()) {
      std::cerr << "find: give D and E files or --example\n";
      return kExitError;
    }
    inputs = {{"D", d_path}, {"E", e_path}, {"example", example}, {"restarts", restarts}, {"tol", tol}};
    report = cmd_find(request);
  } else if (types->parsed()) {
    inputs = {{"m", m}, {"n", n}};
    report = cmd_types(m, n);
  } else if (edge->parsed()) {
    inputs = {{"state", state_path}, {"rank_tol", rank_tol}, {"restarts", restarts}};
    report = cmd_edge(state_path, config, rank_tol);
  } else if (sample->parsed()) {
    inputs = {{"m", m}, {"n", n}, {"codim", codim}};
    report = cmd_sample(m, n, codim, seed);
  } else {
    inputs = Json::object();
    report = cmd_trace_cert();
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (sample->parsed() && report.exit_code == kExitOk) {
    // plain Subspace JSON so that the output feeds `find` directly
    report.body.erase("command");
    std::cout << report.body.dump(2) << "\n";
    return report.exit_code;
  }
  stamp(report, std::vector<std::string>(argv, argv + argc), inputs, seed, wall);
  if (format == "table") {
    std::cout << render_table(report);
  } else {
    std::cout << report.body.dump(2) << "\n";
  }
  return report.exit_code;
}
