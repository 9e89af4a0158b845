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

#include "conjpair/exact_obstruction.hpp"

#include <algorithm>
#include <set>

#include "conjpair/tensor_space.hpp"

namespace conjpair {

Quadruple::Quadruple(int m_, int n_, int k_, int l_) : m(m_), n(n_), k(k_), l(l_) {
  if (m < 1 || n < 1) throw DomainError("m and n must be positive");
  if (k < 0 || l < 0) throw DomainError("codimensions must be nonnegative");
  if (k > m * n || l > m * n) throw DomainError("codimensions must not exceed m*n");
}

std::string to_string(const Quadruple& q) {
  return "(" + std::to_string(q.m) + "," + std::to_string(q.n) + "," + std::to_string(q.k) + "," +
         std::to_string(q.l) + ")";
}

BigInt CoeffTable::at_or_zero(int t) const {
  if (t < 0 || t > k + l) return 0;
  return coeffs[static_cast<std::size_t>(t)];
}

CoeffTable coeff_table(int k, int l) {
  if (k < 0 || l < 0) throw DomainError("exponents must be nonnegative");
  CoeffTable table{k, l, {BigInt(1)}};
  auto& c = table.coeffs;
  c.reserve(static_cast<std::size_t>(k + l + 1));
  // multiply by (1 - x), then by (1 + x); in place from the top degree down
  for (int i = 0; i < k; ++i) {
    c.push_back(0);
    for (std::size_t t = c.size() - 1; t > 0; --t) c[t] -= c[t - 1];
  }
  for (int i = 0; i < l; ++i) {
    c.push_back(0);
    for (std::size_t t = c.size() - 1; t > 0; --t) c[t] += c[t - 1];
  }
  return table;
}

BigInt coeff(int k, int l, int t) {
  if (k < 0 || l < 0) throw DomainError("exponents must be nonnegative");
  if (t < 0 || t > k + l) {
    throw DomainError("coefficient index " + std::to_string(t) + " outside [0, " +
                      std::to_string(k + l) + "]");
  }
  return coeff_table(k, l)[t];
}

CoeffWindow surviving_window(const Quadruple& q) {
  const int degree = q.k + q.l;
  CoeffWindow w;
  w.lo = std::max(0, degree - (q.n - 1));
  w.hi = std::min(q.m - 1, degree);
  if (w.empty()) return w;
  const CoeffTable table = coeff_table(q.k, q.l);
  for (int t = w.lo; t <= w.hi; ++t) w.values.push_back(table[t]);
  return w;
}

bool reduced_is_nonzero(const Quadruple& q) {
  const CoeffWindow w = surviving_window(q);
  return std::any_of(w.values.begin(), w.values.end(), [](const BigInt& v) { return v != 0; });
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::NotGuaranteed: return "NOT_GUARANTEED";
    case Verdict::Exceptional: return "EXCEPTIONAL";
  }
  return "?";
}

ConditionVerdict condition_C(const Quadruple& q) {
  ConditionVerdict out;
  if (q.k + q.l > q.m + q.n - 2) {
    out.verdict = Verdict::NotGuaranteed;
    return out;
  }
  out.window = surviving_window(q);
  const bool nonzero = std::any_of(out.window.values.begin(), out.window.values.end(),
                                   [](const BigInt& v) { return v != 0; });
  out.verdict = nonzero ? Verdict::Holds : Verdict::Exceptional;
  return out;
}

bool is_exceptional(const Quadruple& q) {
  return q.k + q.l == q.m + q.n - 2 && coeff(q.k, q.l, q.m - 1) == 0;
}

std::vector<Quadruple> enumerate_exceptional(int max_product) {
  if (max_product < 4) throw DomainError("max_product must be at least 4");
  std::vector<Quadruple> out;
  for (int m = 1; m * m <= max_product; ++m) {
    for (int n = m; m * n <= max_product; ++n) {
      const int degree = m + n - 2;
      for (int k = 0; k <= degree; ++k) {
        // one table per (k, l); the coefficient is read at t = m - 1
        if (coeff_table(k, degree - k)[m - 1] == 0) out.emplace_back(m, n, k, degree - k);
      }
    }
  }
  return out;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::M2: return "M2";
    case Family::M3: return "M3";
    case Family::Square: return "SQUARE";
    case Family::Balanced: return "BALANCED";
    case Family::FourK: return "FOUR_K";
  }
  return "?";
}

Family family_from_string(std::string_view name) {
  for (Family f : {Family::M2, Family::M3, Family::Square, Family::Balanced, Family::FourK}) {
    if (to_string(f) == name) return f;
  }
  throw DomainError("unknown family id '" + std::string(name) + "'");
}

namespace {

int binom2(int a) { return a * (a - 1) / 2; }

Quadruple square_member(int r) {
  // n = 2 contributes one member (k = 1), n contributes n - 1 members
  for (int n = 2;; ++n) {
    if (r <= n - 1) {
      const int k = 2 * r - 1;
      return {n, n, k, 2 * n - 2 - k};
    }
    r -= n - 1;
  }
}

Quadruple balanced_member(int r) {
  for (int sum = 4;; sum += 2) {
    for (int m = 2; 2 * m <= sum; m += 2) {
      if (--r == 0) {
        const int n = sum - m;
        return {m, n, (sum - 2) / 2, (sum - 2) / 2};
      }
    }
  }
}

}  // namespace

Quadruple family_quadruple(Family family, int r) {
  if (r < 1) throw DomainError("family index must be >= 1");
  Quadruple q;
  switch (family) {
    case Family::M2: q = {2, 2 * r, r, r}; break;
    case Family::M3: q = {3, r * (r + 2), binom2(r + 1), binom2(r + 2)}; break;
    case Family::Square: q = square_member(r); break;
    case Family::Balanced: q = balanced_member(r); break;
    case Family::FourK: q = {4 * r, 4 * r + 3, 2 * r, 6 * r + 1}; break;
  }
  if (!is_exceptional(q)) {
    throw std::logic_error("family " + std::string(to_string(family)) + " produced " + to_string(q) +
                           ", which is not exceptional");
  }
  return q;
}

std::vector<Quadruple> family_members(Family family, int max_product) {
  std::set<Quadruple> members;
  const bool add_swap = family == Family::M3 || family == Family::FourK;
  for (int r = 1;; ++r) {
    const Quadruple q = family_quadruple(family, r);
    // every family is increasing in m*n except SQUARE/BALANCED, which grow
    // in n and m + n respectively; stop once a full "row" exceeds the bound
    if (q.m * q.n > max_product) {
      if (family == Family::Square) break;
      if (family == Family::Balanced) {
        if (2 * (q.m + q.n) > 4 + max_product) break;  // min product in this row is 2(m+n-2)
        continue;
      }
      break;
    }
    members.insert(q);
    if (add_swap) members.insert(q.swapped());
  }
  return {members.begin(), members.end()};
}

std::vector<FamilyCheck> cross_check_families(int max_product) {
  const std::vector<Quadruple> all = enumerate_exceptional(max_product);
  auto slice = [&](auto pred) {
    std::vector<Quadruple> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), pred);
    return out;
  };

  std::vector<FamilyCheck> checks;
  auto add = [&](Family f, std::vector<Quadruple> enumerated) {
    FamilyCheck c{f, std::move(enumerated), family_members(f, max_product), false};
    c.agree = c.enumerated == c.closed_form;
    checks.push_back(std::move(c));
  };
  add(Family::M2, slice([](const Quadruple& q) { return q.m == 2; }));
  add(Family::M3, slice([](const Quadruple& q) { return q.m == 3; }));
  add(Family::Square, slice([](const Quadruple& q) { return q.m == q.n; }));
  add(Family::Balanced, slice([](const Quadruple& q) { return q.k == q.l; }));

  FamilyCheck four{Family::FourK, {}, family_members(Family::FourK, max_product), true};
  for (const auto& q : four.closed_form) {
    if (std::binary_search(all.begin(), all.end(), q)) {
      four.enumerated.push_back(q);
    } else {
      four.agree = false;
    }
  }
  checks.push_back(std::move(four));
  return checks;
}

}  // namespace conjpair
