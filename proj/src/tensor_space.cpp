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

#include "conjpair/tensor_space.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace conjpair {

Dim::Dim(int m_, int n_) : m(m_), n(n_) {
  if (m < 1 || n < 1) {
    throw DomainError("dimensions must be positive, got m=" + std::to_string(m) +
                      ", n=" + std::to_string(n));
  }
}

namespace {

void require_same_shape(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("shape mismatch: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
}

void require_nonzero(const CVec& v, const char* what) {
  if (v.size() == 0 || v.norm() == 0.0) {
    throw DomainError(std::string(what) + " must be a nonzero vector");
  }
}

}  // namespace

Complex hs_inner(const CMat& a, const CMat& b) {
  require_same_shape(a, b);
  return a.conjugate().cwiseProduct(b).sum();
}

double hs_norm(const CMat& a) { return a.norm(); }

CMat product_matrix(const CVec& x, const CVec& y) {
  require_nonzero(x, "x");
  require_nonzero(y, "y");
  return x * y.adjoint();
}

CMat partial_conjugate_matrix(const CVec& x, const CVec& y) {
  require_nonzero(x, "x");
  require_nonzero(y, "y");
  return x.conjugate() * y.adjoint();
}

std::vector<CMat> orthonormalize(const std::vector<CMat>& spanners) {
  std::vector<CMat> basis;
  if (spanners.empty()) return basis;
  double scale = 0.0;
  for (const auto& s : spanners) {
    require_same_shape(s, spanners.front());
    scale = std::max(scale, s.norm());
  }
  if (scale == 0.0) return basis;

  for (const auto& s : spanners) {
    CMat r = s;
    // second pass restores orthogonality lost to cancellation
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) r -= hs_inner(b, r) * b;
    }
    const double norm = r.norm();
    if (norm > kRankCutoff * scale) basis.push_back(r / norm);
  }
  return basis;
}

Subspace::Subspace(Dim dim) : dim_(dim) {}

Subspace::Subspace(Dim dim, std::vector<CMat> complement)
    : dim_(dim), complement_(std::move(complement)) {}

Subspace Subspace::complement_of(Dim dim, const std::vector<CMat>& spanners) {
  for (const auto& s : spanners) {
    if (s.rows() != dim.n || s.cols() != dim.m) {
      throw DimensionError("complement spanner must be " + std::to_string(dim.n) + "x" +
                           std::to_string(dim.m));
    }
  }
  return Subspace(dim, orthonormalize(spanners));
}

double Subspace::distance(const CMat& a) const {
  if (a.rows() != dim_.n || a.cols() != dim_.m) {
    throw DimensionError("matrix shape does not match subspace");
  }
  double acc = 0.0;
  for (const auto& p : complement_) acc += std::norm(hs_inner(p, a));
  return std::sqrt(acc);
}

double Subspace::orthonormality_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < complement_.size(); ++i) {
    for (std::size_t j = 0; j < complement_.size(); ++j) {
      const Complex expected = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(hs_inner(complement_[i], complement_[j]) - expected));
    }
  }
  return worst;
}

Subspace random_subspace(Dim dim, int codim, std::uint64_t seed) {
  if (codim < 0 || codim > dim.ambient()) {
    throw DomainError("codimension " + std::to_string(codim) + " outside [0, " +
                      std::to_string(dim.ambient()) + "]");
  }
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  // Gaussian draws are independent with probability one; redraw on the
  // measure-zero event of a rank drop.
  std::vector<CMat> spanners;
  while (true) {
    spanners.clear();
    for (int c = 0; c < codim; ++c) {
      CMat g(dim.n, dim.m);
      for (int j = 0; j < dim.m; ++j) {
        for (int i = 0; i < dim.n; ++i) {
          const double re = normal(gen);
          const double im = normal(gen);
          g(i, j) = Complex(re, im);
        }
      }
      spanners.push_back(std::move(g));
    }
    Subspace s = Subspace::complement_of(dim, spanners);
    if (s.codim() == codim) return s;
  }
}

CMat matrix_unit(int rows, int cols, int i, int j) {
  if (i < 0 || i >= rows || j < 0 || j >= cols) throw DomainError("matrix unit index out of range");
  CMat e = CMat::Zero(rows, cols);
  e(i, j) = 1.0;
  return e;
}

}  // namespace conjpair
