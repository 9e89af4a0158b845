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

#include "conjpair/pair_solver.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace conjpair {

void SolverConfig::validate() const {
  if (restarts < 1) throw DomainError("restarts must be >= 1");
  if (max_iters < 1) throw DomainError("max_iters must be >= 1");
  if (!(tol_residual > 0.0)) throw DomainError("tol_residual must be positive");
  if (!(tol_sigma > 0.0)) throw DomainError("tol_sigma must be positive");
  if (polish_passes < 0) throw DomainError("polish_passes must be >= 0");
}

namespace {

constexpr double kUnitTol = 1e-10;

void require_compatible(const Subspace& d, const Subspace& e) {
  if (!(d.dim() == e.dim())) throw DimensionError("D and E live in different ambient spaces");
}

void require_unit(const CVec& v, int size, const char* what) {
  if (v.size() != size) {
    throw DimensionError(std::string(what) + " has length " + std::to_string(v.size()) +
                         ", expected " + std::to_string(size));
  }
  if (std::abs(v.norm() - 1.0) > kUnitTol) throw DomainError(std::string(what) + " must be a unit vector");
}

}  // namespace

double residual(const Subspace& d, const Subspace& e, const CVec& x, const CVec& y) {
  require_compatible(d, e);
  require_unit(x, d.dim().n, "x");
  require_unit(y, d.dim().m, "y");
  const CMat direct = product_matrix(x, y);
  const CMat conjugated = partial_conjugate_matrix(x, y);
  double acc = 0.0;
  for (const auto& p : d.complement()) acc += std::norm(hs_inner(p, direct));
  for (const auto& q : e.complement()) acc += std::norm(hs_inner(q, conjugated));
  return std::sqrt(acc);
}

CMat constraint_rows_for_y(const Subspace& d, const Subspace& e, const CVec& y) {
  require_compatible(d, e);
  if (y.size() != d.dim().m) throw DimensionError("y has the wrong length");
  CMat rows(d.codim() + e.codim(), d.dim().n);
  int r = 0;
  for (const auto& p : d.complement()) rows.row(r++) = (p * y).adjoint();
  for (const auto& q : e.complement()) rows.row(r++) = (q * y).transpose();
  return rows;
}

RMat constraint_matrix_for_y(const Subspace& d, const Subspace& e, const CVec& y) {
  const CMat rows = constraint_rows_for_y(d, e, y);
  const Eigen::Index r = rows.rows();
  const Eigen::Index n = rows.cols();
  // c x = (Re c Re x - Im c Im x) + i (Im c Re x + Re c Im x)
  RMat real(2 * r, 2 * n);
  real.topLeftCorner(r, n) = rows.real();
  real.topRightCorner(r, n) = -rows.imag();
  real.bottomLeftCorner(r, n) = rows.imag();
  real.bottomRightCorner(r, n) = rows.real();
  return real;
}

CMat constraint_rows_for_x(const Subspace& d, const Subspace& e, const CVec& x) {
  require_compatible(d, e);
  if (x.size() != d.dim().n) throw DimensionError("x has the wrong length");
  CMat rows(d.codim() + e.codim(), d.dim().m);
  int r = 0;
  const CVec xbar = x.conjugate();
  for (const auto& p : d.complement()) rows.row(r++) = (p.adjoint() * x).adjoint();
  for (const auto& q : e.complement()) rows.row(r++) = (q.adjoint() * xbar).adjoint();
  return rows;
}

KernelEstimate smallest_right_singular(const CMat& rows, int cols) {
  KernelEstimate out;
  if (rows.rows() == 0) {
    out.vector = CVec::Zero(cols);
    out.vector(0) = 1.0;
    return out;
  }
  Eigen::JacobiSVD<CMat> svd(rows, Eigen::ComputeFullV);
  out.vector = svd.matrixV().col(cols - 1);
  out.sigma = rows.rows() < cols ? 0.0 : svd.singularValues()(cols - 1);
  return out;
}

std::optional<CVec> solve_fixed_y(const Subspace& d, const Subspace& e, const CVec& y,
                                  double tol_sigma) {
  require_unit(y, d.dim().m, "y");
  KernelEstimate k = smallest_right_singular(constraint_rows_for_y(d, e, y), d.dim().n);
  if (k.sigma < tol_sigma) return k.vector;
  return std::nullopt;
}

namespace {

struct Relaxation {
  CVec x;
  CVec y;
  double sigma = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

// One sweep: best x for the current y, then best y for that x. Each half
// step can only lower the residual.
void sweep(const Subspace& d, const Subspace& e, Relaxation& state) {
  const Dim dim = d.dim();
  KernelEstimate kx = smallest_right_singular(constraint_rows_for_y(d, e, state.y), dim.n);
  state.x = kx.vector;
  state.sigma = kx.sigma;
  if (kx.sigma == 0.0) return;
  KernelEstimate ky = smallest_right_singular(constraint_rows_for_x(d, e, state.x), dim.m);
  if (ky.sigma <= state.sigma) {
    state.y = ky.vector;
    state.sigma = ky.sigma;
  }
}

Relaxation run_restart(const Subspace& d, const Subspace& e, const SolverConfig& config,
                       CVec start) {
  Relaxation state;
  state.y = std::move(start);
  double previous = std::numeric_limits<double>::infinity();
  for (; state.iterations < config.max_iters; ++state.iterations) {
    sweep(d, e, state);
    if (state.sigma < config.tol_sigma) break;
    if (std::isfinite(previous) && previous - state.sigma <= config.stall_ratio * previous) break;
    previous = state.sigma;
  }
  if (state.sigma < config.tol_sigma) {
    for (int pass = 0; pass < config.polish_passes && state.sigma >= config.polish_exit; ++pass) {
      sweep(d, e, state);
      ++state.iterations;
    }
  }
  return state;
}

std::mt19937_64 restart_generator(std::uint64_t seed, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(restart)};
  return std::mt19937_64(seq);
}

}  // namespace

SolveOutcome find_pair(const Subspace& d, const Subspace& e, const SolverConfig& config) {
  config.validate();
  require_compatible(d, e);
  const Dim dim = d.dim();

  SolveOutcome out;
  out.best.residual = std::numeric_limits<double>::infinity();
  for (int r = 0; r < config.restarts; ++r) {
    auto gen = restart_generator(config.seed, r);
    Relaxation state = run_restart(d, e, config, random_unit_vector(dim.m, gen));

    ProductPair pair{state.x.normalized(), state.y.normalized(), 0.0};
    pair.residual = residual(d, e, pair.x, pair.y);
    out.restarts.push_back({state.iterations, pair.residual});
    out.total_iterations += state.iterations;
    out.restarts_used = r + 1;
    // strict comparison keeps the lowest restart index on ties
    if (pair.residual < out.best.residual) {
      out.best = std::move(pair);
      out.best_restart = r;
    }
    if (out.best.residual < config.tol_residual) break;
  }
  out.status = out.best.residual < config.tol_residual ? SolveStatus::Found : SolveStatus::NotFound;
  return out;
}

bool verify_pair(const Subspace& d, const Subspace& e, const ProductPair& pair, double tol) {
  require_compatible(d, e);
  const Dim dim = d.dim();
  if (pair.x.size() != dim.n || pair.y.size() != dim.m) return false;
  if (std::abs(pair.x.norm() - 1.0) > kUnitTol || std::abs(pair.y.norm() - 1.0) > kUnitTol) {
    return false;
  }
  double acc = 0.0;
  for (const auto& p : d.complement()) {
    acc += std::norm((p.conjugate().cwiseProduct(pair.x * pair.y.adjoint())).sum());
  }
  for (const auto& q : e.complement()) {
    acc += std::norm((q.conjugate().cwiseProduct(pair.x.conjugate() * pair.y.adjoint())).sum());
  }
  return std::sqrt(acc) < tol;
}

}  // namespace conjpair
