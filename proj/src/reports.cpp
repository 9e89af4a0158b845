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

#include "conjpair/reports.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

#include "conjpair/constructions.hpp"

namespace conjpair {

namespace {

Report failure(const std::string& command, const std::string& message) {
  return {{{"command", command}, {"error", message}}, kExitError};
}

Report guarded(const std::string& command, const std::function<Report()>& body) {
  try {
    Report r = body();
    r.body["command"] = command;
    return r;
  } catch (const std::exception& e) {
    return failure(command, e.what());
  }
}

Json type_to_json(const StateType& t) { return Json::array({t.p, t.q}); }

}  // namespace

std::string digest(const Json& inputs) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : inputs.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void stamp(Report& report, const std::vector<std::string>& argv, const Json& inputs,
           std::uint64_t seed, double wall_seconds) {
  report.body["argv"] = argv;
  report.body["inputs_digest"] = digest(inputs);
  report.body["version"] = CONJPAIR_VERSION;
  report.body["seed"] = seed;
  report.body["wall_seconds"] = wall_seconds;
}

Report cmd_condition(const Quadruple& q) {
  return guarded("condition", [&] {
    Report r;
    r.body = verdict_to_json(q, condition_C(q));
    r.body["boundary"] = q.m + q.n - 2;
    return r;
  });
}

Report cmd_scan(int max_product) {
  return guarded("scan", [&] {
    Report r;
    Json list = Json::array();
    for (const auto& q : enumerate_exceptional(max_product)) list.push_back(quadruple_to_json(q));
    Json families = Json::array();
    bool all_agree = true;
    for (const auto& check : cross_check_families(max_product)) {
      Json members = Json::array();
      for (const auto& q : check.closed_form) members.push_back(quadruple_to_json(q));
      families.push_back({{"family", std::string(to_string(check.family))},
                          {"agree", check.agree},
                          {"closed_form", std::move(members)},
                          {"enumerated_count", check.enumerated.size()}});
      all_agree = all_agree && check.agree;
    }
    r.body = {{"max_product", max_product},
              {"exceptional", std::move(list)},
              {"families", std::move(families)},
              {"family_check", all_agree ? "PASS" : "FAIL"}};
    r.exit_code = all_agree ? kExitOk : kExitError;
    return r;
  });
}

Report cmd_find(const FindRequest& request) {
  return guarded("find", [&] {
    Report r;
    std::optional<NamedPair> example;
    std::optional<Subspace> d;
    std::optional<Subspace> e;
    if (request.example) {
      example = named_example(*request.example);
      d = example->d;
      e = example->e;
    } else {
      d = subspace_from_json(load_json_file(request.d_path));
      e = subspace_from_json(load_json_file(request.e_path));
    }
    const SolveOutcome outcome = find_pair(*d, *e, request.config);
    r.body = outcome_to_json(outcome, request.config, request.trace);
    r.body["quadruple"] = {{"m", d->dim().m}, {"n", d->dim().n}, {"k", d->codim()}, {"l", e->codim()}};
    r.body["verified"] = outcome.status == SolveStatus::Found &&
                         verify_pair(*d, *e, outcome.best, request.config.tol_residual);
    if (example) {
      r.body["example"] = example->name;
      r.body["certificate"] = std::string(to_string(example->certificate.kind));
    }
    if (outcome.status == SolveStatus::NotFound) {
      r.body["note"] = "no witness found; this is not a proof of nonexistence";
    }
    r.exit_code = outcome.status == SolveStatus::Found ? kExitOk : kExitNotFound;
    return r;
  });
}

Report cmd_types(int m, int n) {
  return guarded("types", [&] {
    Report r;
    const auto admissible = admissible_types(m, n);
    const auto published = published_types(m, n);
    Json types = Json::array();
    for (const auto& t : admissible) {
      const bool listed = std::find(published.begin(), published.end(), t) != published.end();
      types.push_back({{"type", type_to_json(t)}, {"published", listed}});
    }
    Json missing = Json::array();
    for (const auto& t : published) {
      if (std::find(admissible.begin(), admissible.end(), t) == admissible.end()) {
        missing.push_back(type_to_json(t));
      }
    }
    Json excluded = Json::array();
    const int bound = 2 * m * n - m - n + 2;
    for (int p = std::max(m, n) + 1; p <= m * n; ++p) {
      const int q = bound - p;
      if (q > std::max(m, n) && q <= m * n &&
          std::find(admissible.begin(), admissible.end(), StateType{p, q}) == admissible.end()) {
        excluded.push_back(type_to_json({p, q}));
      }
    }
    r.body = {{"m", m},
              {"n", n},
              {"bound", bound},
              {"types", std::move(types)},
              {"excluded_on_boundary", std::move(excluded)},
              {"published_not_admissible", std::move(missing)}};
    return r;
  });
}

Report cmd_edge(const std::string& state_path, const SolverConfig& config, double rank_tol) {
  return guarded("edge", [&] {
    Report r;
    const State state = state_from_json(load_json_file(state_path));
    if (!is_ppt(state)) throw DomainError("state is not PPT");
    const EdgeReport edge = edge_heuristic_check(state, config, rank_tol);
    r.body = {{"type", type_to_json(edge.type)},
              {"rank_tol", edge.rank_tol},
              {"solver", outcome_to_json(edge.outcome, config, false)},
              {"conclusion", edge.conclusion}};
    if (edge.witness) {
      r.body["witness"] = {{"range_vector", vector_to_json(edge.witness->first)},
                           {"partner_vector", vector_to_json(edge.witness->second)}};
    }
    r.exit_code = edge.outcome.status == SolveStatus::Found ? kExitOk : kExitNotFound;
    return r;
  });
}

Report cmd_sample(int m, int n, int codim, std::uint64_t seed) {
  return guarded("sample", [&] {
    Report r;
    r.body = subspace_to_json(random_subspace(Dim(m, n), codim, seed));
    return r;
  });
}

Report cmd_trace_cert() {
  return guarded("trace-cert", [&] {
    Report r;
    const TraceMapCertificate cert = trace_map_images();
    Json images = Json::array();
    for (int idx = 0; idx < 9; ++idx) {
      const IntMat& img = cert.images[static_cast<std::size_t>(idx)];
      Json rows = Json::array();
      for (int i = 0; i < 3; ++i) rows.push_back({img(i, 0), img(i, 1), img(i, 2)});
      images.push_back({{"unit", Json::array({idx / 3 + 1, idx % 3 + 1})}, {"image", std::move(rows)}});
    }
    r.body = {{"images", std::move(images)}, {"result", cert.is_trace_map ? "PASS" : "FAIL"}};
    r.exit_code = cert.is_trace_map ? kExitOk : kExitError;
    return r;
  });
}

std::string render_table(const Report& report) {
  const Json& b = report.body;
  std::ostringstream out;
  if (b.contains("error")) {
    out << "error: " << b["error"].get<std::string>() << "\n";
    return out.str();
  }
  const std::string command = b.value("command", "");
  if (command == "condition") {
    const Json& q = b["quadruple"];
    out << "(m,n,k,l) = (" << q["m"] << "," << q["n"] << "," << q["k"] << "," << q["l"] << ")  "
        << "k+l vs m+n-2 = " << (q["k"].get<int>() + q["l"].get<int>()) << " vs " << b["boundary"]
        << "\n";
    out << "verdict: " << b["verdict"].get<std::string>() << "\n";
    if (b["window"].contains("coefficients")) {
      out << "window t=" << b["window"]["lo"] << ".." << b["window"]["hi"] << ":";
      for (const auto& c : b["window"]["coefficients"]) out << " " << c.get<std::string>();
      out << "\n";
    }
  } else if (command == "scan") {
    out << "exceptional quadruples with m<=n, mn<=" << b["max_product"] << "\n";
    out << "   m    n    k    l\n";
    for (const auto& q : b["exceptional"]) {
      char line[64];
      std::snprintf(line, sizeof line, "%4d %4d %4d %4d\n", q["m"].get<int>(), q["n"].get<int>(),
                    q["k"].get<int>(), q["l"].get<int>());
      out << line;
    }
    for (const auto& f : b["families"]) {
      out << "family " << f["family"].get<std::string>() << ": "
          << (f["agree"].get<bool>() ? "agrees" : "MISMATCH") << "\n";
    }
    out << "family check: " << b["family_check"].get<std::string>() << "\n";
  } else if (command == "find") {
    out << "status: " << b["status"].get<std::string>() << "  residual: " << b["residual"]
        << "  (tol " << b["tol_residual"] << ", seed " << b["seed"] << ")\n";
    out << "restarts used: " << b["restarts_used"] << "  iterations: " << b["iterations"] << "\n";
    if (b.contains("note")) out << b["note"].get<std::string>() << "\n";
  } else if (command == "types") {
    out << "types (p,q) for " << b["m"] << "x" << b["n"] << ", p+q <= " << b["bound"] << "\n";
    for (const auto& t : b["types"]) {
      out << "  (" << t["type"][0] << "," << t["type"][1] << ")"
          << (t["published"].get<bool>() ? "  *published" : "") << "\n";
    }
    out << "excluded on the boundary:";
    for (const auto& t : b["excluded_on_boundary"]) out << " (" << t[0] << "," << t[1] << ")";
    out << "\n";
  } else if (command == "trace-cert") {
    for (const auto& img : b["images"]) {
      out << "Phi(e" << img["unit"][0] << img["unit"][1] << ") = " << img["image"].dump() << "\n";
    }
    out << "trace map: " << b["result"].get<std::string>() << "\n";
  } else {
    out << b.dump(2) << "\n";
  }
  return out.str();
}

}  // namespace conjpair
