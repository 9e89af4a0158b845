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

#include "conjpair/serialization.hpp"

#include <fstream>
#include <sstream>

namespace conjpair {

namespace {

int positive_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw FormatError(std::string("missing integer field '") + key + "'");
  }
  const int v = j.at(key).get<int>();
  if (v < 1) throw FormatError(std::string("field '") + key + "' must be positive");
  return v;
}

const Json& array_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw FormatError(std::string("missing array field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw FormatError("complex numbers are written as [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json subspace_to_json(const Subspace& s) {
  Json complement = Json::array();
  for (const auto& p : s.complement()) {
    Json flat = Json::array();
    for (Eigen::Index r = 0; r < p.rows(); ++r) {
      for (Eigen::Index c = 0; c < p.cols(); ++c) flat.push_back(complex_to_json(p(r, c)));
    }
    complement.push_back(std::move(flat));
  }
  return {{"m", s.dim().m}, {"n", s.dim().n}, {"complement", std::move(complement)}};
}

Subspace subspace_from_json(const Json& j) {
  const Dim dim(positive_int(j, "m"), positive_int(j, "n"));
  std::vector<CMat> spanners;
  for (const auto& flat : array_field(j, "complement")) {
    if (!flat.is_array() || static_cast<int>(flat.size()) != dim.ambient()) {
      throw FormatError("each complement spanner needs n*m = " + std::to_string(dim.ambient()) +
                        " entries");
    }
    CMat p(dim.n, dim.m);
    for (int r = 0; r < dim.n; ++r) {
      for (int c = 0; c < dim.m; ++c) p(r, c) = complex_from_json(flat[static_cast<std::size_t>(r * dim.m + c)]);
    }
    spanners.push_back(std::move(p));
  }
  return Subspace::complement_of(dim, spanners);
}

Json state_to_json(const State& s) {
  Json rows = Json::array();
  const CMat& a = s.matrix();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(complex_to_json(a(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"m", s.dim().m}, {"n", s.dim().n}, {"matrix", std::move(rows)}};
}

State state_from_json(const Json& j) {
  const Dim dim(positive_int(j, "m"), positive_int(j, "n"));
  const Json& rows = array_field(j, "matrix");
  const int size = dim.ambient();
  if (static_cast<int>(rows.size()) != size) throw FormatError("state matrix needs mn rows");
  CMat a(size, size);
  for (int r = 0; r < size; ++r) {
    const Json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != size) {
      throw FormatError("state matrix row " + std::to_string(r) + " needs mn entries");
    }
    for (int c = 0; c < size; ++c) a(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  try {
    return State(dim, std::move(a));
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
}

Json vector_to_json(const CVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Json outcome_to_json(const SolveOutcome& outcome, const SolverConfig& config, bool trace) {
  Json out = {
      {"status", outcome.status == SolveStatus::Found ? "FOUND" : "NOT_FOUND"},
      {"residual", outcome.best.residual},
      {"x", vector_to_json(outcome.best.x)},
      {"y", vector_to_json(outcome.best.y)},
      {"restarts_used", outcome.restarts_used},
      {"best_restart", outcome.best_restart},
      {"iterations", outcome.total_iterations},
      {"tol_residual", config.tol_residual},
      {"tol_sigma", config.tol_sigma},
      {"seed", config.seed},
  };
  if (trace) {
    Json restarts = Json::array();
    for (const auto& r : outcome.restarts) {
      restarts.push_back({{"iterations", r.iterations}, {"residual", r.best_residual}});
    }
    out["trace"] = std::move(restarts);
  }
  return out;
}

Json quadruple_to_json(const Quadruple& q) {
  return {{"m", q.m}, {"n", q.n}, {"k", q.k}, {"l", q.l}};
}

Json verdict_to_json(const Quadruple& q, const ConditionVerdict& v) {
  Json values = Json::array();
  for (const auto& c : v.window.values) values.push_back(c.str());
  Json window = Json::object();
  if (!v.window.empty() && !values.empty()) {
    window = {{"lo", v.window.lo}, {"hi", v.window.hi}, {"coefficients", std::move(values)}};
  }
  return {{"quadruple", quadruple_to_json(q)},
          {"verdict", std::string(to_string(v.verdict))},
          {"window", std::move(window)}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace conjpair
