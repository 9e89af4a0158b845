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

#include "conjpair/constructions.hpp"

#include <cmath>
#include <numbers>

namespace conjpair {

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::None: return "NONE";
    case CertificateKind::NoWitness: return "NONE_ANALYTIC";
    case CertificateKind::Recipe: return "RECIPE";
  }
  return "?";
}

namespace {

// |y^* x| and the distance of x from the line through y, for unit vectors.
WitnessCondition orthogonal_condition() {
  return {"x orthogonal to y", [](const CVec& x, const CVec& y) { return std::abs(y.dot(x)); }};
}

WitnessCondition parallel_condition() {
  return {"x parallel to y", [](const CVec& x, const CVec& y) {
            const double overlap = std::abs(y.dot(x));
            return std::sqrt(std::max(0.0, 1.0 - overlap * overlap));
          }};
}

WitnessCondition side_condition(std::string statement, Subspace side, bool conjugate) {
  return {std::move(statement), [side = std::move(side), conjugate](const CVec& x, const CVec& y) {
            return side.distance(conjugate ? partial_conjugate_matrix(x, y) : product_matrix(x, y));
          }};
}

bool is_real(Complex z) { return z.imag() == 0.0; }

CVec fix_phase(CVec v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-14) return v * (std::conj(v(i)) / std::abs(v(i)));
  }
  return v;
}

CVec unit_orthogonal_to(const CVec& v) {
  KernelEstimate k = smallest_right_singular(v.adjoint(), static_cast<int>(v.size()));
  return fix_phase(k.vector.normalized());
}

}  // namespace

NamedPair pair_2x2(double t, Complex a, Complex b, Complex c, Complex d) {
  if (t == 0.0) throw DomainError("pair_2x2 requires t != 0");
  const Dim dim(2, 2);
  CMat p = CMat::Zero(2, 2);
  p(0, 0) = 1.0;
  p(1, 1) = t;
  CMat q(2, 2);
  q << a, b, c, d;

  const bool extreme = t == 1.0 && a == 0.0 && d == 0.0 && b == 1.0 && c == -1.0;
  NamedPair out{extreme ? "ex-2x2-extreme" : "ex-2x2", Subspace::complement_of(dim, {p}),
                Subspace::complement_of(dim, {q}), {}};

  const bool no_witness = a == 0.0 && d == 0.0 && is_real(b) && is_real(c) &&
                          t * b.real() * c.real() < 0.0;
  if (no_witness) {
    out.certificate.kind = CertificateKind::NoWitness;
    if (extreme) {
      out.certificate.conditions = {orthogonal_condition(), parallel_condition()};
    } else {
      out.certificate.conditions = {side_condition("x orthogonal to P y", out.d, false),
                                    side_condition("x orthogonal to conj(Q y)", out.e, true)};
    }
    return out;
  }
  Eigen::JacobiSVD<CMat> svd(q);
  const auto& s = svd.singularValues();
  if (s(0) > 0.0 && s(1) <= 1e-12 * s(0)) out.certificate.kind = CertificateKind::Recipe;
  return out;
}

NamedPair pair_2x2k(const std::vector<NamedPair>& subpairs) {
  if (subpairs.empty()) throw DomainError("pair_2x2k needs at least one block");
  const int k = static_cast<int>(subpairs.size());
  const Dim dim(2, 2 * k);
  std::vector<CMat> ps;
  std::vector<CMat> qs;
  for (int i = 0; i < k; ++i) {
    const NamedPair& sub = subpairs[static_cast<std::size_t>(i)];
    if (sub.certificate.kind != CertificateKind::NoWitness || !(sub.d.dim() == Dim(2, 2)) ||
        sub.d.codim() != 1 || sub.e.codim() != 1) {
      throw DomainError("block " + std::to_string(i) + " is not a certified 2x2 pair");
    }
    CMat p = CMat::Zero(2 * k, 2);
    CMat q = CMat::Zero(2 * k, 2);
    p.block(2 * i, 0, 2, 2) = sub.d.complement().front();
    q.block(2 * i, 0, 2, 2) = sub.e.complement().front();
    ps.push_back(std::move(p));
    qs.push_back(std::move(q));
  }
  NamedPair out{k == 1 ? subpairs.front().name : "ex-2x2k", Subspace::complement_of(dim, ps),
                Subspace::complement_of(dim, qs), {}};
  if (k == 1) {
    out.certificate = subpairs.front().certificate;
    return out;
  }
  out.certificate.kind = CertificateKind::NoWitness;
  out.certificate.conditions = {
      side_condition("each block of x orthogonal to P_i y", out.d, false),
      side_condition("each block of x orthogonal to conj(Q_i y)", out.e, true)};
  return out;
}

IntegerSpanners ex33_spanners() {
  auto e = [](int i, int j) {
    IntMat u = IntMat::Zero(3, 3);
    u(i, j) = 1;
    return u;
  };
  return {{IntMat::Identity(3, 3)}, {e(0, 1) - e(1, 0), e(1, 2) - e(2, 1), e(2, 0) - e(0, 2)}};
}

NamedPair pair_3x3() {
  const Dim dim(3, 3);
  auto to_complex = [](const std::vector<IntMat>& mats) {
    std::vector<CMat> out;
    for (const auto& m : mats) out.push_back(m.cast<double>().cast<Complex>());
    return out;
  };
  const IntegerSpanners raw = ex33_spanners();
  NamedPair out{"ex-3x3", Subspace::complement_of(dim, to_complex(raw.d_complement)),
                Subspace::complement_of(dim, to_complex(raw.e_complement)), {}};
  out.certificate.kind = CertificateKind::NoWitness;
  out.certificate.conditions = {orthogonal_condition(), parallel_condition()};
  return out;
}

NamedPair named_example(const std::string& name) {
  if (name == "ex-2x2-extreme") return pair_2x2(1.0, 0.0, 1.0, -1.0, 0.0);
  if (name == "ex-2x2k") {
    const NamedPair block = pair_2x2(1.0, 0.0, 1.0, -1.0, 0.0);
    return pair_2x2k({block, block});
  }
  if (name == "ex-3x3") return pair_3x3();
  throw DomainError("unknown example '" + name + "'");
}

std::vector<std::string> example_names() { return {"ex-2x2-extreme", "ex-2x2k", "ex-3x3"}; }

ProductPair rank_one_recipe(const CMat& p, const CVec& z, const CVec& w) {
  if (p.rows() < 2 || p.cols() < 2) throw DomainError("recipe needs both dimensions >= 2");
  if (w.size() != p.cols() || z.size() != p.rows()) throw DimensionError("z, w do not match P");
  if (w.norm() == 0.0) throw DomainError("w must be nonzero");
  if (z.norm() == 0.0) throw DomainError("z must be nonzero");

  ProductPair out;
  out.y = unit_orthogonal_to(w);
  const CVec py = p * out.y;
  if (py.norm() == 0.0) {
    out.x = CVec::Zero(p.rows());
    out.x(0) = 1.0;
  } else {
    out.x = unit_orthogonal_to(py);
  }
  const Dim dim(static_cast<int>(p.cols()), static_cast<int>(p.rows()));
  out.residual = residual(Subspace::complement_of(dim, {p}),
                          Subspace::complement_of(dim, {CMat(z * w.adjoint())}), out.x, out.y);
  return out;
}

double min_determinant_on_grid(double t, Complex a, Complex b, Complex c, Complex d, int steps) {
  if (steps < 2) throw DomainError("grid needs at least 2 steps");
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < steps; ++i) {
    const double theta = 0.5 * std::numbers::pi * i / (steps - 1);
    for (int j = 0; j < steps; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / steps;
      const Complex y1 = std::cos(theta);
      const Complex y2 = std::polar(std::sin(theta), phi);
      // columns P y and conj(Q y)
      const Complex det = y1 * std::conj(c * y1 + d * y2) - t * y2 * std::conj(a * y1 + b * y2);
      best = std::min(best, std::abs(det));
    }
  }
  return best;
}

}  // namespace conjpair
