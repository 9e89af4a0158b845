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

#include <algorithm>

#include "conjpair/exact_obstruction.hpp"
#include "conjpair/tensor_space.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace conjpair;

namespace {

std::vector<BigInt> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("coeff spot values") {
  CHECK(coeff(2, 2, 2) == -2);
  CHECK(coeff(1, 3, 2) == 0);
  CHECK(coeff(0, 0, 0) == 1);
  CHECK(coeff(2, 7, 3) == 0);
  CHECK(oracle::closed_sum(2, 7, 3) == 0);
  CHECK(oracle::expand(2, 7)[3] == 0);
  CHECK_THROWS_AS(coeff(2, 2, 5), DomainError);
  CHECK_THROWS_AS(coeff(2, 2, -1), DomainError);
}

TEST_CASE("coeff_table expansions") {
  CHECK(coeff_table(2, 2).coeffs == ints({1, 0, -2, 0, 1}));
  CHECK(coeff_table(1, 3).coeffs == ints({1, 2, 0, -2, -1}));
  CHECK(coeff_table(0, 0).coeffs == ints({1}));
  for (int k = 0; k <= 12; ++k) {
    const CoeffTable table = coeff_table(k, 0);
    for (int t = 0; t <= k; ++t) {
      CHECK(table[t] == (t % 2 == 0 ? oracle::binomial(k, t) : BigInt(-oracle::binomial(k, t))));
    }
  }
}

TEST_CASE("coeff_table invariants and agreement with both oracles") {
  for (int k = 0; k <= 30; ++k) {
    for (int l = 0; l <= 30; ++l) {
      const CoeffTable table = coeff_table(k, l);
      REQUIRE(table.coeffs.size() == static_cast<std::size_t>(k + l + 1));
      CHECK(table[0] == 1);
      CHECK(table[k + l] == (k % 2 == 0 ? 1 : -1));
      BigInt sum = 0;
      for (const auto& c : table.coeffs) sum += c;
      CHECK(sum == (k >= 1 ? BigInt(0) : BigInt(1) << l));
      CHECK(table.coeffs == oracle::expand(k, l));
      for (int t = 0; t <= k + l; ++t) CHECK(table[t] == oracle::closed_sum(k, l, t));
    }
  }
}

TEST_CASE("coefficients exceed 64 bits without loss") {
  // C^{0,100}_50 = binom(100, 50)
  const BigInt expected("100891344545564193334812497256");
  CHECK(coeff(0, 100, 50) == expected);
  CHECK(coeff(100, 0, 50) == expected);
}

TEST_CASE("recurrences, swap symmetry and no two consecutive zeros") {
  for (int k = 0; k <= 20; ++k) {
    for (int l = 0; l <= 20; ++l) {
      const CoeffTable c = coeff_table(k, l);
      for (int t = 0; t <= k + l; ++t) {
        if (k >= 1) {
          const CoeffTable a = coeff_table(k - 1, l);
          CHECK(c[t] == a.at_or_zero(t) - a.at_or_zero(t - 1));
        }
        if (l >= 1) {
          const CoeffTable b = coeff_table(k, l - 1);
          CHECK(c[t] == b.at_or_zero(t) + b.at_or_zero(t - 1));
        }
        if (k >= 1 && l >= 1) {
          CHECK(t * c[t] == -k * coeff_table(k - 1, l).at_or_zero(t - 1) +
                                l * coeff_table(k, l - 1).at_or_zero(t - 1));
        }
        CHECK(coeff_table(l, k)[t] == (t % 2 == 0 ? c[t] : BigInt(-c[t])));
        if (t < k + l) CHECK_FALSE((c[t] == 0 && c[t + 1] == 0));
      }
    }
  }
}

TEST_CASE("Quadruple validation") {
  CHECK_THROWS_AS(Quadruple(0, 3, 1, 1), DomainError);
  CHECK_THROWS_AS(Quadruple(2, 2, -1, 1), DomainError);
  CHECK_THROWS_AS(Quadruple(2, 2, 5, 1), DomainError);
  CHECK_NOTHROW(Quadruple(2, 2, 4, 4));
  CHECK(to_string(Quadruple(3, 3, 1, 3)) == "(3,3,1,3)");
}

TEST_CASE("reduced_is_nonzero and the surviving window") {
  const CoeffWindow w = surviving_window({3, 3, 2, 2});
  CHECK(w.lo == 2);
  CHECK(w.hi == 2);
  CHECK(w.values == ints({-2}));
  CHECK(reduced_is_nonzero({3, 3, 2, 2}));
  CHECK_FALSE(reduced_is_nonzero({3, 3, 1, 3}));

  const CoeffWindow small = surviving_window({3, 3, 1, 1});
  CHECK(small.lo == 0);
  CHECK(small.hi == 2);
  CHECK(small.values == ints({1, 0, -1}));
  CHECK(reduced_is_nonzero({3, 3, 1, 1}));

  // k + l beyond m + n - 2 leaves no surviving monomial
  CHECK(surviving_window({2, 2, 2, 2}).empty());
  CHECK_FALSE(reduced_is_nonzero({2, 2, 2, 2}));
}

TEST_CASE("condition_C verdicts") {
  CHECK(condition_C({3, 3, 1, 1}).verdict == Verdict::Holds);
  CHECK(condition_C({2, 4, 1, 3}).verdict == Verdict::Holds);
  CHECK(condition_C({2, 4, 1, 3}).window.values == ints({2}));
  CHECK(condition_C({3, 3, 3, 3}).verdict == Verdict::NotGuaranteed);
  CHECK(condition_C({3, 3, 3, 3}).window.values.empty());
  CHECK(condition_C({2, 2, 1, 1}).verdict == Verdict::Exceptional);
  CHECK(condition_C({3, 3, 2, 2}).verdict == Verdict::Holds);
  CHECK(condition_C({2, 4, 2, 2}).verdict == Verdict::Exceptional);
  // codimension zero is admitted
  CHECK(condition_C({3, 3, 0, 4}).verdict == Verdict::Holds);
  CHECK(condition_C({1, 1, 0, 0}).verdict == Verdict::Holds);
  CHECK(to_string(Verdict::NotGuaranteed) == "NOT_GUARANTEED");
}

TEST_CASE("below the boundary the window never vanishes") {
  for (int m = 1; m <= 100; ++m) {
    for (int n = 1; m * n <= 100; ++n) {
      for (int k = 0; k <= m * n; ++k) {
        for (int l = 0; k + l < m + n - 2 && l <= m * n; ++l) {
          const Quadruple q(m, n, k, l);
          CHECK(reduced_is_nonzero(q));
        }
      }
    }
  }
}

TEST_CASE("verdict invariants") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = 1; n <= 6; ++n) {
      for (int k = 0; k <= m * n; ++k) {
        for (int l = 0; l <= m * n; ++l) {
          const Quadruple q(m, n, k, l);
          const Verdict v = condition_C(q).verdict;
          if (v == Verdict::Exceptional) CHECK(is_exceptional(q));
          if (v == Verdict::NotGuaranteed) CHECK(k + l > m + n - 2);
          CHECK(is_exceptional(q) == is_exceptional(q.swapped()));
        }
      }
    }
  }
}

TEST_CASE("enumerate_exceptional") {
  const std::vector<Quadruple> small = enumerate_exceptional(9);
  CHECK(small == std::vector<Quadruple>{{2, 2, 1, 1}, {2, 4, 2, 2}, {3, 3, 1, 3}, {3, 3, 3, 1}});

  for (const auto& q : enumerate_exceptional(100)) {
    if (q.m == 2) {
      CHECK(q.n == 2 * q.k);
      CHECK(q.l == q.k);
    }
    CHECK(q.m <= q.n);
    CHECK(q.m * q.n <= 100);
  }

  const auto with28 = enumerate_exceptional(28);
  CHECK(std::find(with28.begin(), with28.end(), Quadruple(4, 7, 2, 7)) != with28.end());
  const auto with27 = enumerate_exceptional(27);
  CHECK(std::find(with27.begin(), with27.end(), Quadruple(4, 7, 2, 7)) == with27.end());

  CHECK_THROWS_AS(enumerate_exceptional(3), DomainError);
}

TEST_CASE("family members") {
  CHECK(family_quadruple(Family::M3, 1) == Quadruple(3, 3, 1, 3));
  CHECK(family_quadruple(Family::M3, 2) == Quadruple(3, 8, 3, 6));
  CHECK(oracle::closed_sum(3, 6, 2) == 0);
  CHECK(family_quadruple(Family::M2, 3) == Quadruple(2, 6, 3, 3));
  CHECK(family_quadruple(Family::FourK, 1) == Quadruple(4, 7, 2, 7));
  CHECK(family_quadruple(Family::Balanced, 1) == Quadruple(2, 2, 1, 1));
  CHECK(family_quadruple(Family::Balanced, 2) == Quadruple(2, 4, 2, 2));
  CHECK(family_quadruple(Family::Balanced, 4) == Quadruple(4, 4, 3, 3));

  std::vector<Quadruple> fours;
  for (int r = 1; r <= 12; ++r) {
    const Quadruple q = family_quadruple(Family::Square, r);
    if (q.n == 4) fours.push_back(q);
  }
  CHECK(fours == std::vector<Quadruple>{{4, 4, 1, 5}, {4, 4, 3, 3}, {4, 4, 5, 1}});
  CHECK(coeff(3, 3, 3) == 0);

  CHECK(family_from_string("FOUR_K") == Family::FourK);
  CHECK_THROWS_AS(family_from_string("M7"), DomainError);
  CHECK_THROWS_AS(family_quadruple(Family::M2, 0), DomainError);
}

TEST_CASE("closed forms agree with enumeration up to mn = 100") {
  for (const auto& check : cross_check_families(100)) {
    INFO(to_string(check.family));
    CHECK(check.agree);
    CHECK_FALSE(check.closed_form.empty());
  }
}
