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

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace conjpair {

using BigInt = boost::multiprecision::cpp_int;

/// Dimensions (m, n) of C^n (x) C^m together with the codimensions (k, l)
/// of the subspaces D and E.
struct Quadruple {
  int m = 1;
  int n = 1;
  int k = 0;
  int l = 0;

  Quadruple() = default;
  Quadruple(int m_, int n_, int k_, int l_);

  Quadruple swapped() const { return {m, n, l, k}; }
  friend bool operator==(const Quadruple&, const Quadruple&) = default;
  friend auto operator<=>(const Quadruple&, const Quadruple&) = default;
};

std::string to_string(const Quadruple& q);

/// Coefficients of (1 - x)^k (1 + x)^l, lowest degree first.
struct CoeffTable {
  int k = 0;
  int l = 0;
  std::vector<BigInt> coeffs;

  const BigInt& operator[](int t) const { return coeffs.at(static_cast<std::size_t>(t)); }
  /// Out-of-range indices read as zero.
  BigInt at_or_zero(int t) const;
};

CoeffTable coeff_table(int k, int l);

/// Coefficient of x^t in (1 - x)^k (1 + x)^l.
BigInt coeff(int k, int l, int t);

/// Indices t with t <= m-1 and k+l-t <= n-1: the monomials alpha^t beta^(k+l-t)
/// that survive reduction modulo (alpha^m, beta^n).
struct CoeffWindow {
  int lo = 0;
  int hi = -1;  // empty when hi < lo
  std::vector<BigInt> values;

  bool empty() const { return hi < lo; }
};

CoeffWindow surviving_window(const Quadruple& q);

/// True iff (-alpha + beta)^k (alpha + beta)^l is nonzero modulo alpha^m, beta^n.
bool reduced_is_nonzero(const Quadruple& q);

enum class Verdict { Holds, NotGuaranteed, Exceptional };

std::string_view to_string(Verdict v);

struct ConditionVerdict {
  Verdict verdict = Verdict::Holds;
  CoeffWindow window;
};

/// Whether every pair of subspaces with codimensions (k, l) admits a product
/// vector x (x) y in D with conj(x) (x) y in E.
///
///   k + l >  m + n - 2                  -> NotGuaranteed
///   k + l <= m + n - 2, window nonzero  -> Holds
///   otherwise                           -> Exceptional
///
/// The window is only inspected when k + l <= m + n - 2; Exceptional therefore
/// always has k + l = m + n - 2 and C^{k,l}_{m-1} = 0.
ConditionVerdict condition_C(const Quadruple& q);

/// k + l = m + n - 2 and C^{k,l}_{m-1} = 0.
bool is_exceptional(const Quadruple& q);

/// All exceptional quadruples with 1 <= m <= n and m*n <= max_product, in
/// lexicographic (m, n, k, l) order. Both (k, l) and (l, k) are reported.
std::vector<Quadruple> enumerate_exceptional(int max_product);

/// Closed-form families of exceptional quadruples.
///   M2       (2, 2r, r, r)
///   M3       (3, r(r+2), C(r+1,2), C(r+2,2))
///   SQUARE   (n, n, k, 2n-2-k) with k odd; r-th member in (n, k) order
///   BALANCED (m, n, k, k) with m <= n even and m + n = 2k + 2; r-th member
///            in (m + n, m) order
///   FOUR_K   (4r, 4r+3, 2r, 6r+1)
enum class Family { M2, M3, Square, Balanced, FourK };

std::string_view to_string(Family f);
Family family_from_string(std::string_view name);

/// r-th member (r >= 1). Every result is checked against is_exceptional.
Quadruple family_quadruple(Family family, int r);

/// Members with m*n <= max_product. M3 and FOUR_K are closed under the
/// k <-> l swap here so that the result is comparable with enumeration.
std::vector<Quadruple> family_members(Family family, int max_product);

/// Outcome of comparing enumeration slices against the closed forms.
struct FamilyCheck {
  Family family;
  std::vector<Quadruple> enumerated;
  std::vector<Quadruple> closed_form;
  bool agree = false;
};

/// Slices: m = 2 (M2), m = 3 (M3), m = n (SQUARE), k = l (BALANCED).
/// FOUR_K is a sequence, not a characterization: checked as a subset.
std::vector<FamilyCheck> cross_check_families(int max_product);

}  // namespace conjpair
