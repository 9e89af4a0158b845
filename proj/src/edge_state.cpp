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

#include "conjpair/edge_state.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "conjpair/exact_obstruction.hpp"

namespace conjpair {

State::State(Dim dim, CMat mat) : dim_(dim), mat_(std::move(mat)) {
  const int size = dim_.ambient();
  if (mat_.rows() != size || mat_.cols() != size) {
    throw DimensionError("state matrix must be " + std::to_string(size) + "x" +
                         std::to_string(size));
  }
  const double defect = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (defect > kHermitianTol * std::max(1.0, mat_.cwiseAbs().maxCoeff())) {
    throw DomainError("state matrix is not Hermitian");
  }
}

CMat State::block(int i, int j) const {
  const int n = dim_.n;
  return mat_.block(i * n, j * n, n, n);
}

State partial_transpose(const State& a) {
  const int m = a.dim().m;
  const int n = a.dim().n;
  CMat out(m * n, m * n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) out.block(i * n, j * n, n, n) = a.matrix().block(j * n, i * n, n, n);
  }
  return State(a.dim(), std::move(out));
}

CVec product_vector(const CVec& x, const CVec& y) {
  const Eigen::Index n = x.size();
  CVec v(n * y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i) v.segment(i * n, n) = x * y(i);
  return v;
}

State product_projector(const CVec& x, const CVec& y) {
  const CVec v = product_vector(x, y);
  return State(Dim(static_cast<int>(y.size()), static_cast<int>(x.size())), v * v.adjoint());
}

namespace {

Eigen::SelfAdjointEigenSolver<CMat> eigen_of(const State& a) {
  return Eigen::SelfAdjointEigenSolver<CMat>(a.matrix());
}

int numerical_rank(const Eigen::VectorXd& eigenvalues, double rank_tol) {
  const double scale = eigenvalues.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0;
  return static_cast<int>((eigenvalues.array().abs() > rank_tol * scale).count());
}

// Orthonormal eigenvectors spanning the numerical kernel, as n x m matrices.
std::vector<CMat> kernel_as_matrices(const State& a, double rank_tol, bool conjugate) {
  const auto es = eigen_of(a);
  const Eigen::VectorXd& values = es.eigenvalues();
  const double scale = values.cwiseAbs().maxCoeff();
  const int m = a.dim().m;
  const int n = a.dim().n;
  std::vector<CMat> out;
  for (Eigen::Index c = 0; c < values.size(); ++c) {
    if (scale > 0.0 && std::abs(values(c)) > rank_tol * scale) continue;
    const CVec v = es.eigenvectors().col(c);
    CMat mat(n, m);
    for (int i = 0; i < m; ++i) mat.col(i) = v.segment(i * n, n);
    out.push_back(conjugate ? CMat(mat.conjugate()) : mat);
  }
  return out;
}

}  // namespace

bool is_ppt(const State& a, double tol) {
  return eigen_of(a).eigenvalues().minCoeff() >= -tol &&
         eigen_of(partial_transpose(a)).eigenvalues().minCoeff() >= -tol;
}

StateType state_type(const State& a, double rank_tol) {
  return {numerical_rank(eigen_of(a).eigenvalues(), rank_tol),
          numerical_rank(eigen_of(partial_transpose(a)).eigenvalues(), rank_tol)};
}

std::pair<Subspace, Subspace> range_pair(const State& a, double rank_tol) {
  return {Subspace::complement_of(a.dim(), kernel_as_matrices(a, rank_tol, false)),
          Subspace::complement_of(a.dim(), kernel_as_matrices(partial_transpose(a), rank_tol, true))};
}

EdgeReport edge_heuristic_check(const State& a, const SolverConfig& config, double rank_tol,
                                double ppt_tol) {
  if (!is_ppt(a, ppt_tol)) throw DomainError("edge check requires a PPT state");
  EdgeReport report;
  report.type = state_type(a, rank_tol);
  report.rank_tol = rank_tol;
  const auto [d, e] = range_pair(a, rank_tol);
  report.outcome = find_pair(d, e, config);
  if (report.outcome.status == SolveStatus::Found) {
    const ProductPair& w = report.outcome.best;
    report.witness = std::make_pair(product_vector(w.x, w.y.conjugate()), product_vector(w.x, w.y));
    report.conclusion = "not an edge state: product vector found in the range";
  } else {
    report.conclusion = "consistent with an edge state (heuristic, no witness found)";
  }
  return report;
}

std::vector<StateType> admissible_types(int m, int n) {
  if (m < 2 || n < 2) throw DomainError("admissible_types needs m, n >= 2");
  const int mn = m * n;
  const int bound = 2 * mn - m - n + 2;
  std::vector<StateType> out;
  for (int p = std::max(m, n) + 1; p <= mn; ++p) {
    for (int q = std::max(m, n) + 1; q <= mn; ++q) {
      if (p + q > bound) continue;
      if (p + q == bound && coeff(mn - p, mn - q, m - 1) != 0) continue;
      out.push_back({p, q});
    }
  }
  return out;
}

std::vector<StateType> published_types(int m, int n) {
  std::vector<StateType> half;
  if (std::min(m, n) == 2 && std::max(m, n) == 4) {
    half = {{5, 5}, {5, 6}, {6, 6}};
  } else if (m == 3 && n == 3) {
    half = {{4, 4}, {5, 5}, {5, 6}, {5, 7}, {6, 6}, {5, 8}, {6, 7}, {6, 8}};
  }
  std::vector<StateType> out;
  for (const auto& t : half) {
    out.push_back(t);
    if (t.p != t.q) out.push_back({t.q, t.p});
  }
  std::sort(out.begin(), out.end());
  return out;
}

TraceMapCertificate trace_map_images() {
  const IntegerSpanners spanners = ex33_spanners();
  TraceMapCertificate cert;
  cert.is_trace_map = true;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      IntMat unit = IntMat::Zero(3, 3);
      unit(i, j) = 1;
      IntMat image = apply_decomposable(spanners.d_complement, spanners.e_complement, unit);
      const IntMat expected = i == j ? IntMat(IntMat::Identity(3, 3)) : IntMat(IntMat::Zero(3, 3));
      if (image != expected) cert.is_trace_map = false;
      cert.images.push_back(std::move(image));
    }
  }
  return cert;
}

bool trace_map_certificate() { return trace_map_images().is_trace_map; }

}  // namespace conjpair
