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

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "conjpair/edge_state.hpp"
#include "conjpair/exact_obstruction.hpp"
#include "conjpair/pair_solver.hpp"
#include "conjpair/tensor_space.hpp"

namespace conjpair {

using Json = nlohmann::json;

/// Malformed or inconsistent input documents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// {"m": int, "n": int, "complement": [[[re, im], ... n*m entries, row-major], ...]}
/// Reading orthonormalizes the complement spanners.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

/// {"m": int, "n": int, "matrix": [[[re, im], ...], ...]} with mn rows.
Json state_to_json(const State& s);
State state_from_json(const Json& j);

Json vector_to_json(const CVec& v);
Json outcome_to_json(const SolveOutcome& outcome, const SolverConfig& config, bool trace);
Json verdict_to_json(const Quadruple& q, const ConditionVerdict& v);
Json quadruple_to_json(const Quadruple& q);

Json load_json_file(const std::string& path);

}  // namespace conjpair
