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

#include <cstdint>
#include <optional>
#include <vector>

#include "conjpair/tensor_space.hpp"

namespace conjpair {

struct SolverConfig {
  int restarts = 50;
  int max_iters = 400;         // relaxation sweeps per restart
  double tol_residual = 1e-8;  // FOUND threshold on the verified residual
  double tol_sigma = 1e-6;     // kernel detection in solve_fixed_y
  std::uint64_t seed = 0;
  int polish_passes = 50;
  double polish_exit = 1e-14;
  /// A restart stops relaxing once a sweep improves the residual by less
  /// than this relative amount.
  double stall_ratio = 1e-10;

  void validate() const;
};

/// Candidate witness (x, y), both unit vectors, with its residual.
struct ProductPair {
  CVec x;
  CVec y;
  double residual = 0.0;
};

enum class SolveStatus { Found, NotFound };

struct RestartTrace {
  int iterations = 0;
  double best_residual = 0.0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::NotFound;
  ProductPair best;
  int restarts_used = 0;
  int total_iterations = 0;
  int best_restart = -1;
  std::vector<RestartTrace> restarts;
};

/// sqrt(sum_i |<P_i, x y^*>|^2 + sum_j |<Q_j, conj(x) y^*>|^2) over the
/// orthonormal complement bases of D and E. Requires unit x and y.
double residual(const Subspace& d, const Subspace& e, const CVec& x, const CVec& y);

/// For fixed y every constraint is complex linear in x:
///   <P_i, x y^*>         = (P_i y)^* x
///   <Q_j, conj(x) y^*>   = conj((Q_j y)^T x)
/// Rows of the result are (P_i y)^* followed by (Q_j y)^T, so that the
/// constraint residual is |N(y) x|.
CMat constraint_rows_for_y(const Subspace& d, const Subspace& e, const CVec& y);

/// The same constraints as a real system acting on (Re x; Im x): shape
/// 2(k + l) x 2n with rows (Re; Im) of every complex constraint.
RMat constraint_matrix_for_y(const Subspace& d, const Subspace& e, const CVec& y);

/// For fixed x the constraints are complex antilinear in y:
///   |<P_i, x y^*>| = |(P_i^* x)^* y|,  |<Q_j, conj(x) y^*>| = |(Q_j^* conj(x))^* y|.
CMat constraint_rows_for_x(const Subspace& d, const Subspace& e, const CVec& x);

/// Smallest singular value of a rows x cols matrix counted among `cols`
/// values (zero when rows < cols) and a unit right singular vector for it.
struct KernelEstimate {
  double sigma = 0.0;
  CVec vector;
};
KernelEstimate smallest_right_singular(const CMat& rows, int cols);

/// Unit x minimizing the residual for this y, provided the minimum is below
/// tol_sigma.
std::optional<CVec> solve_fixed_y(const Subspace& d, const Subspace& e, const CVec& y,
                                  double tol_sigma);

/// Multi-start search for a witness. NotFound never certifies nonexistence.
SolveOutcome find_pair(const Subspace& d, const Subspace& e, const SolverConfig& config = {});

/// Recomputes the residual from the complement spanners alone.
bool verify_pair(const Subspace& d, const Subspace& e, const ProductPair& pair, double tol);

}  // namespace conjpair
