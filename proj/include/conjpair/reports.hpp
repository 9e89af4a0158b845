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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conjpair/serialization.hpp"

namespace conjpair {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotFound = 2;

struct Report {
  Json body;
  int exit_code = kExitOk;
};

Report cmd_condition(const Quadruple& q);
Report cmd_scan(int max_product);

struct FindRequest {
  std::string d_path;
  std::string e_path;
  std::optional<std::string> example;
  SolverConfig config;
  bool trace = false;
};
Report cmd_find(const FindRequest& request);

Report cmd_types(int m, int n);

/// Range check of a PPT state read from a State JSON file.
Report cmd_edge(const std::string& state_path, const SolverConfig& config, double rank_tol);

/// Subspace JSON for a random subspace of the given codimension.
Report cmd_sample(int m, int n, int codim, std::uint64_t seed);
Report cmd_trace_cert();

/// Fills the common envelope: command echo, input digest, version, seed and
/// wall time.
void stamp(Report& report, const std::vector<std::string>& argv, const Json& inputs,
           std::uint64_t seed, double wall_seconds);

/// 64-bit FNV-1a of the compact JSON dump, as 16 hex digits.
std::string digest(const Json& inputs);

/// Human-readable rendering for --format table.
std::string render_table(const Report& report);

}  // namespace conjpair
