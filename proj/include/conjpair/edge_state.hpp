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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conjpair/constructions.hpp"
#include "conjpair/pair_solver.hpp"
#include "conjpair/tensor_space.hpp"

namespace conjpair {

/// Hermitian mn x mn matrix in M_n (x) M_m. Entry (i*n + a, j*n + b),
/// zero-based, is entry (a, b) of the n x n block a_ij, i, j < m.
class State {
 public:
  static constexpr double kHermitianTol = 1e-10;

  State(Dim dim, CMat mat);

  const Dim& dim() const { return dim_; }
  const CMat& matrix() const { return mat_; }
  CMat block(int i, int j) const;

 private:
  Dim dim_;
  CMat mat_;
};

/// (A, A^tau) ranks.
struct StateType {
  int p = 0;
  int q = 0;
  friend bool operator==(const StateType&, const StateType&) = default;
  friend auto operator<=>(const StateType&, const StateType&) = default;
};

/// Swaps blocks: block (i, j) of the result is block (j, i) of A. This
/// transposes the block factor C^m, so the projector onto x (x) y goes to the
/// projector onto x (x) conj(y).
State partial_transpose(const State& a);

/// Vector of x (x) y in the block convention: entry i*n + a is x_a y_i.
CVec product_vector(const CVec& x, const CVec& y);
State product_projector(const CVec& x, const CVec& y);

/// Both A and A^tau have smallest eigenvalue >= -tol.
bool is_ppt(const State& a, double tol = 1e-10);

/// Numerical ranks of A and A^tau; eigenvalues below rank_tol times the
/// largest magnitude count as zero.
StateType state_type(const State& a, double rank_tol = 1e-8);

/// The subspace pair (D, E) in the n x m matrix picture used by the solver.
/// A state vector v maps to the matrix with entry (a, i) equal to v(i*n + a);
/// D is the image of R(A) and E the entrywise conjugate of the image of
/// R(A^tau). A solver witness (x, y) then corresponds to x (x) conj(y) in R(A)
/// with x (x) y in R(A^tau).
std::pair<Subspace, Subspace> range_pair(const State& a, double rank_tol = 1e-8);

struct EdgeReport {
  StateType type;
  double rank_tol = 0.0;
  SolveOutcome outcome;
  /// State-space product vectors u in R(A) and its partner in R(A^tau).
  std::optional<std::pair<CVec, CVec>> witness;
  std::string conclusion;
};

/// Looks for a product vector in R(A) whose partner lies in R(A^tau).
/// Found: "not an edge state"; otherwise only "consistent with an edge
/// state", never a proof.
EdgeReport edge_heuristic_check(const State& a, const SolverConfig& config = {},
                                double rank_tol = 1e-8, double ppt_tol = 1e-10);

/// Types (p, q) not ruled out by: max(m, n) < p, q <= mn, p + q <= 2mn - m - n + 2,
/// and on the boundary C^{mn-p, mn-q}_{m-1} = 0.
std::vector<StateType> admissible_types(int m, int n);

/// Types printed in the literature table for 2 x 4 and 3 x 3 (closed under
/// the p <-> q swap); empty for other dimensions.
std::vector<StateType> published_types(int m, int n);

/// sum_V V X V^* + sum_W W X^T W^*, for any Eigen scalar type.
template <class Mat>
Mat apply_decomposable(const std::vector<Mat>& v_list, const std::vector<Mat>& w_list,
                       const Mat& x) {
  if (x.rows() != x.cols()) throw DimensionError("decomposable maps act on square matrices");
  auto same_shape = [&](const Mat& a) { return a.rows() == x.rows() && a.cols() == x.cols(); };
  Mat out = Mat::Zero(x.rows(), x.cols());
  for (const auto& v : v_list) {
    if (!same_shape(v)) throw DimensionError("shape mismatch in phi_V");
    out += v * x * v.adjoint();
  }
  for (const auto& w : w_list) {
    if (!same_shape(w)) throw DimensionError("shape mismatch in phi^W");
    out += w * x.transpose() * w.adjoint();
  }
  return out;
}

/// Images of the nine matrix units under the map built from the 3 x 3
/// example's complement spanners, in integer arithmetic.
struct TraceMapCertificate {
  std::vector<IntMat> images;  // index 3*i + j holds the image of e_ij
  bool is_trace_map = false;
};

TraceMapCertificate trace_map_images();
bool trace_map_certificate();

}  // namespace conjpair
