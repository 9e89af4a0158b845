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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace conjpair {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
/// n x m complex matrix; the avatar of a vector in C^n (x) C^m.
using CMat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;

/// Raised on shape mismatches between vectors, matrices and subspaces.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an argument lies outside the domain of an operation
/// (zero vector where a nonzero one is required, index out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dimensions of the ambient space C^n (x) C^m. Matrices are n x m.
struct Dim {
  int m = 1;  // second factor, carries y
  int n = 1;  // first factor, carries x (and the conjugation)

  Dim() = default;
  Dim(int m_, int n_);

  int ambient() const { return m * n; }
  friend bool operator==(const Dim&, const Dim&) = default;
};

inline constexpr double kOrthonormalTol = 1e-12;
inline constexpr double kRankCutoff = 1e-10;

/// Hilbert-Schmidt pairing trace(A^* B), conjugate-linear in A.
Complex hs_inner(const CMat& a, const CMat& b);
double hs_norm(const CMat& a);

/// The matrix x y^* representing x (x) y.
CMat product_matrix(const CVec& x, const CVec& y);
/// The matrix conj(x) y^* representing the partial conjugate of x (x) y.
CMat partial_conjugate_matrix(const CVec& x, const CVec& y);

/// Modified Gram-Schmidt (two passes) over the spanners in the given order.
/// A spanner whose residual falls below kRankCutoff times the largest input
/// norm is dropped, so the output length is the numerical rank.
std::vector<CMat> orthonormalize(const std::vector<CMat>& spanners);

/// A linear subspace of n x m matrices, held through an orthonormal basis of
/// its orthogonal complement.
class Subspace {
 public:
  /// The whole space (codimension 0).
  explicit Subspace(Dim dim);

  /// The orthogonal complement of span(spanners). Spanners are
  /// orthonormalized; dependent ones are dropped.
  static Subspace complement_of(Dim dim, const std::vector<CMat>& spanners);

  const Dim& dim() const { return dim_; }
  int codim() const { return static_cast<int>(complement_.size()); }
  const std::vector<CMat>& complement() const { return complement_; }

  /// Norm of the projection of `a` onto the complement.
  double distance(const CMat& a) const;
  bool contains(const CMat& a, double tol) const { return distance(a) < tol; }

  /// Largest deviation of the complement Gram matrix from the identity.
  double orthonormality_defect() const;

 private:
  Subspace(Dim dim, std::vector<CMat> complement);

  Dim dim_;
  std::vector<CMat> complement_;
};

/// Random subspace of codimension `codim`: the complement is spanned by
/// `codim` standard complex Gaussian matrices. Deterministic in `seed`.
Subspace random_subspace(Dim dim, int codim, std::uint64_t seed);

/// Haar-random unit vector in C^size, drawn from `gen`.
template <class Gen>
CVec random_unit_vector(int size, Gen& gen);

/// Matrix unit e_{i,j} (zero-based indices) of the given shape.
CMat matrix_unit(int rows, int cols, int i, int j);

}  // namespace conjpair

#include "conjpair/detail/random_unit_vector.hpp"
