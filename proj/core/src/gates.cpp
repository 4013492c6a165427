// Copyright 2026 The hybridpulse Authors
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

#include "hybridpulse/gates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hybridpulse/errors.hpp"

namespace hp {

namespace {
const cplx I{0.0, 1.0};
}

void GateSpec::validate() const {
  auto need = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::ValidationError, what);
  };
  need(std::isfinite(beta) && beta >= 0 && beta < kTwoPi, "beta must lie in [0, 2pi)");
  need(std::isfinite(eta) && eta >= 0 && eta <= kPi, "eta must lie in [0, pi]");
  need(std::isfinite(zeta) && zeta >= 0 && zeta < kTwoPi, "zeta must lie in [0, 2pi)");
}

const char* to_string(SequenceOrder o) noexcept {
  return o == SequenceOrder::Standard ? "standard" : "alternative";
}

Mat3 gate_B(double phi_B) {
  const cplx m = -I * std::exp(I * phi_B);
  Mat3 b = Mat3::Zero();
  b(0, 0) = 1.0;
  b(1, 2) = m;
  b(2, 1) = m;
  return b;
}

Mat3 gate_A(double theta, double alpha_A) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Mat3 a = Mat3::Zero();
  a(0, 0) = c;
  a(0, 2) = -I * s;
  a(2, 0) = -I * s;
  a(2, 2) = c;
  a(1, 1) = std::exp(I * alpha_A);
  return a;
}

Mat3 gate_P(double phi, double alpha) {
  Mat3 p = Mat3::Zero();
  p(0, 0) = 1.0;
  p(1, 1) = std::exp(I * alpha);
  p(2, 2) = std::exp(I * phi);
  return p;
}

Mat2 rotation(const GateSpec& s) {
  const double nx = std::sin(s.eta) * std::cos(s.zeta);
  const double ny = std::sin(s.eta) * std::sin(s.zeta);
  const double nz = std::cos(s.eta);
  const double c = std::cos(s.beta / 2), sn = std::sin(s.beta / 2);
  Mat2 r;
  r(0, 0) = cplx(c, -sn * nz);
  r(0, 1) = cplx(-sn * ny, -sn * nx);
  r(1, 0) = cplx(sn * ny, -sn * nx);
  r(1, 1) = cplx(c, sn * nz);
  return r;
}

ControlParams compile(const GateSpec& spec, const PhaseRecord& ph) {
  const double sb = std::sin(spec.beta / 2), cb = std::cos(spec.beta / 2);
  const double arg = std::clamp(std::sin(spec.eta) * sb, -1.0, 1.0);
  const double y = std::cos(spec.eta) * sb;
  // Both arguments vanish only at beta = pi on the equator, where the
  // correct limit is zero; atan2 of two rounding residues is not.
  const double mu = std::hypot(y, cb) < 1e-12 ? 0.0 : std::atan2(y, cb);
  ControlParams cp;
  cp.theta = 2.0 * std::asin(arg);
  cp.phi1 = wrap_angle(mu - ph.phi_B - spec.zeta + kPi / 2);
  cp.phi2 = wrap_angle(mu - ph.phi_B + spec.zeta + kPi / 2);
  return cp;
}

Mat3 compose_sequence(SequenceOrder order, const ControlParams& cp,
                      const PhaseRecord& ph) {
  const Mat3 b = gate_B(ph.phi_B);
  const Mat3 a = gate_A(cp.theta, ph.alpha_A);
  if (order == SequenceOrder::Standard)
    return b * gate_P(cp.phi2, ph.alpha_2) * a * gate_P(cp.phi1, ph.alpha_1) * b;
  return gate_P(ph.alpha_2, cp.phi2) * b * a * b * gate_P(ph.alpha_1, cp.phi1);
}

LogicalBlock logical_block(const Mat3& U) {
  LogicalBlock lb;
  lb.block = U.topLeftCorner<2, 2>();
  const double n0 = lb.block.col(0).squaredNorm();
  const double n1 = lb.block.col(1).squaredNorm();
  lb.leakage = std::max(0.0, 1.0 - std::min(n0, n1));
  return lb;
}

std::array<cplx, 4> pauli_decompose(const Mat2& R) {
  // Tr[sigma_j R]/2 written out per Pauli matrix.
  return {0.5 * (R(0, 0) + R(1, 1)), 0.5 * (R(1, 0) + R(0, 1)),
          0.5 * I * (R(0, 1) - R(1, 0)), 0.5 * (R(0, 0) - R(1, 1))};
}

Mat2 pauli_compose(const std::array<cplx, 4>& c) {
  Mat2 r;
  r(0, 0) = c[0] + c[3];
  r(1, 1) = c[0] - c[3];
  r(0, 1) = c[1] - I * c[2];
  r(1, 0) = c[1] + I * c[2];
  return r;
}

PhaseDistance equal_up_to_global_phase(const MatX& U, const MatX& V,
                                       double tol) {
  if (U.rows() != V.rows() || U.cols() != V.cols())
    throw Error(ErrorKind::DimensionMismatch,
                "matrices differ in shape: " + std::to_string(U.rows()) + "x" +
                    std::to_string(U.cols()) + " vs " + std::to_string(V.rows()) +
                    "x" + std::to_string(V.cols()));
  const cplx overlap = (V.adjoint() * U).trace();
  PhaseDistance pd;
  pd.phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1.0);
  pd.distance = (U - pd.phase * V).norm();
  pd.equal = pd.distance < tol;
  return pd;
}

MatX closest_unitary(const MatX& M) {
  Eigen::JacobiSVD<MatX> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace hp
