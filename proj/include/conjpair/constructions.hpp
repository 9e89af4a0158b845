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

#include <functional>
#include <string>
#include <vector>

#include "conjpair/exact_obstruction.hpp"
#include "conjpair/pair_solver.hpp"
#include "conjpair/tensor_space.hpp"

namespace conjpair {

enum class CertificateKind {
  None,       // nothing known in closed form
  NoWitness,  // two incompatible conditions rule out every witness
  Recipe,     // a witness is constructible (rank-one complement spanner)
};

std::string_view to_string(CertificateKind kind);

/// One of the two conditions a witness would have to satisfy, with a defect
/// function that vanishes exactly when the condition holds for unit (x, y).
struct WitnessCondition {
  std::string statement;
  std::function<double(const CVec& x, const CVec& y)> defect;
};

struct Certificate {
  CertificateKind kind = CertificateKind::None;
  std::vector<WitnessCondition> conditions;  // two entries for NoWitness
};

struct NamedPair {
  std::string name;
  Subspace d;
  Subspace e;
  Certificate certificate;

  Quadruple quadruple() const { return {d.dim().m, d.dim().n, d.codim(), e.codim()}; }
};

/// D = P^perp and E = Q^perp in 2 x 2 matrices, P = diag(1, t), Q = (a b; c d).
/// NoWitness when a = d = 0, b and c are real and b c t < 0; Recipe when Q has
/// rank one.
NamedPair pair_2x2(double t, Complex a, Complex b, Complex c, Complex d);

/// Stacks k certified 2 x 2 pairs into 2k x 2 matrices, the i-th 2 x 2 block
/// of the i-th spanner carrying P_i (resp. Q_i).
NamedPair pair_2x2k(const std::vector<NamedPair>& subpairs);

using IntMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// Raw integer spanners of the 3 x 3 example: {I} and
/// {e12 - e21, e23 - e32, e31 - e13}.
struct IntegerSpanners {
  std::vector<IntMat> d_complement;
  std::vector<IntMat> e_complement;
};
IntegerSpanners ex33_spanners();

/// D = I^perp, E = {e12 - e21, e23 - e32, e31 - e13}^perp in 3 x 3 matrices.
NamedPair pair_3x3();

/// Catalogue: "ex-2x2-extreme", "ex-2x2k" (k = 2), "ex-3x3".
NamedPair named_example(const std::string& name);
std::vector<std::string> example_names();

/// For Q = z w^*: unit y orthogonal to w, then unit x orthogonal to P y. The
/// pair is a witness for D = P^perp, E = (z w^*)^perp. Phases are fixed so
/// that the first nonzero entry of x and of y is real and positive.
ProductPair rank_one_recipe(const CMat& p, const CVec& z, const CVec& w);

/// Smallest |det [P y, conj(Q y)]| over unit y = (cos a, e^{ib} sin a) on a
/// steps x steps grid. A value bounded away from zero suggests that
/// {P y, conj(Q y)} spans C^2 for every y (heuristic, grid based).
double min_determinant_on_grid(double t, Complex a, Complex b, Complex c, Complex d, int steps);

}  // namespace conjpair
