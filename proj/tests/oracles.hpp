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

// Test-only reference computations. Nothing here calls into the solver or the
// convolution path it checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "conjpair/exact_obstruction.hpp"
#include "conjpair/tensor_space.hpp"

namespace conjpair::oracle {

inline BigInt binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

/// C^{k,l}_t = sum_{r+s=t} (-1)^r binom(k,r) binom(l,s).
inline BigInt closed_sum(int k, int l, int t) {
  BigInt acc = 0;
  for (int r = 0; r <= t; ++r) {
    const BigInt term = binomial(k, r) * binomial(l, t - r);
    acc += (r % 2 == 0) ? term : BigInt(-term);
  }
  return acc;
}

/// Schoolbook product of the k + l linear factors.
inline std::vector<BigInt> expand(int k, int l) {
  std::vector<BigInt> poly{1};
  auto times = [&poly](int sign) {
    std::vector<BigInt> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] += sign * poly[i];
    }
    poly = std::move(next);
  };
  for (int i = 0; i < k; ++i) times(-1);
  for (int i = 0; i < l; ++i) times(+1);
  return poly;
}

/// Residual straight from the definition with explicit traces.
inline double raw_residual(const std::vector<CMat>& p, const std::vector<CMat>& q, const CVec& x,
                           const CVec& y) {
  const CMat a = x * y.adjoint();
  const CMat b = x.conjugate() * y.adjoint();
  double acc = 0.0;
  for (const auto& pi : p) acc += std::norm((pi.adjoint() * a).trace());
  for (const auto& qj : q) acc += std::norm((qj.adjoint() * b).trace());
  return std::sqrt(acc);
}

/// Riemannian gradient descent on the squared residual over the product of
/// unit spheres, with backtracking.
inline double polish(const std::vector<CMat>& p, const std::vector<CMat>& q, CVec x, CVec y,
                     int steps) {
  auto f = [&](const CVec& xx, const CVec& yy) {
    const double r = raw_residual(p, q, xx, yy);
    return r * r;
  };
  double value = f(x, y);
  double eta = 0.5;
  for (int s = 0; s < steps; ++s) {
    CVec gx = CVec::Zero(x.size());
    CVec gy = CVec::Zero(y.size());
    for (const auto& pi : p) {
      const CVec a = pi * y;                 // term |a^* x|^2
      gx += a * a.dot(x);
      const CVec u = pi.adjoint() * x;       // term |u^* y|^2
      gy += u * u.dot(y);
    }
    for (const auto& qj : q) {
      const CVec b = qj * y;                 // term |b^T x|^2
      gx += b.conjugate() * (b.transpose() * x)(0);
      const CVec v = qj.adjoint() * x.conjugate();
      gy += v * v.dot(y);
    }
    gx -= x * x.dot(gx);
    gy -= y * y.dot(gy);
    bool improved = false;
    for (int tries = 0; tries < 30; ++tries) {
      const CVec nx = (x - eta * gx).normalized();
      const CVec ny = (y - eta * gy).normalized();
      const double nv = f(nx, ny);
      if (nv < value) {
        x = nx;
        y = ny;
        value = nv;
        eta *= 1.5;
        improved = true;
        break;
      }
      eta *= 0.5;
    }
    if (!improved) break;
  }
  return std::sqrt(std::max(0.0, value));
}

inline CVec haar(int size, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  CVec v(size);
  for (int i = 0; i < size; ++i) {
    const double re = normal(gen);
    const double im = normal(gen);
    v(i) = Complex(re, im);
  }
  return v.normalized();
}

struct GridResult {
  double sample_min = 0.0;    // over the raw samples
  double polished_min = 0.0;  // after polishing the best candidates
};

/// Minimum residual over `samples` Haar-random unit pairs, followed by
/// gradient polishing of the `keep` best.
inline GridResult grid_and_polish(const std::vector<CMat>& p, const std::vector<CMat>& q, int n,
                                  int m, int samples, int keep, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::tuple<double, CVec, CVec>> best;
  GridResult out{INFINITY, INFINITY};
  for (int s = 0; s < samples; ++s) {
    CVec x = haar(n, gen);
    CVec y = haar(m, gen);
    const double r = raw_residual(p, q, x, y);
    out.sample_min = std::min(out.sample_min, r);
    if (static_cast<int>(best.size()) < keep || r < std::get<0>(best.back())) {
      best.emplace_back(r, std::move(x), std::move(y));
      std::sort(best.begin(), best.end(),
                [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
      if (static_cast<int>(best.size()) > keep) best.pop_back();
    }
  }
  for (const auto& [r, x, y] : best) {
    out.polished_min = std::min(out.polished_min, polish(p, q, x, y, 300));
  }
  out.polished_min = std::min(out.polished_min, out.sample_min);
  return out;
}

}  // namespace conjpair::oracle
