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

// Independent reference computations. Nothing here calls into the library
// beyond its types, so agreement is evidence rather than tautology.

#pragma once

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double hbar = 0.6582119569;
inline constexpr double pi = 3.14159265358979323846;

// Written out from the matrix, not from build_hamiltonian.
inline Eigen::Matrix3cd hamiltonian(double E01, double t1, double t2, double eps) {
  Eigen::Matrix3cd h;
  h << 0.0, 0.0, t1,
       0.0, E01, -t2,
       t1, -t2, -eps;
  return h;
}

// cos(b/2) I - i sin(b/2) n.sigma, entry by entry.
inline Eigen::Matrix2cd rotation(double beta, double eta, double zeta) {
  const cplx i{0.0, 1.0};
  const double c = std::cos(beta / 2), s = std::sin(beta / 2);
  Eigen::Matrix2cd r;
  r << c - i * s * std::cos(eta), -i * s * std::sin(eta) * std::exp(-i * zeta),
       -i * s * std::sin(eta) * std::exp(i * zeta), c + i * s * std::cos(eta);
  return r;
}

// min over |c| = 1 of |U - c V|_F; the minimiser is the phase of Tr(V^dag U).
// Evaluated directly because |U|^2 + |V|^2 - 2 |Tr(V^dag U)| cancels to
// roundoff and its square root floors near 1e-8.
inline double phase_distance(const Eigen::MatrixXcd& U, const Eigen::MatrixXcd& V) {
  const cplx tr = (V.adjoint() * U).trace();
  const cplx c = std::abs(tr) > 0 ? tr / std::abs(tr) : cplx(1.0);
  return (U - c * V).norm();
}

inline Eigen::MatrixXcd propagator(const Eigen::MatrixXcd& H, double T) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
  const cplx i{0.0, 1.0};
  Eigen::VectorXcd ph = (-i * T / hbar * es.eigenvalues().cast<cplx>()).array().exp();
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

// Sum of |eigenvalues| of the difference, halved.
inline double trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const Eigen::MatrixXcd d = a - b;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (d + d.adjoint()));
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

// Landau-Zener diabatic probability for full gap `gap` and sweep rate v.
inline double landau_zener(double gap, double v) {
  return std::exp(-pi * gap * gap / (2.0 * hbar * v));
}

// Two-level transfer for coupling `gap`/2, detuning `det`, duration T.
inline double rabi_transfer(double gap, double det, double T) {
  const double w = std::sqrt(gap * gap + det * det);
  const double s = std::sin(w * T / (2.0 * hbar));
  return gap * gap / (w * w) * s * s;
}

struct Minimum {
  double eps;
  double gap;
};

// Dense scan of the spacing between sorted levels lo and lo + 1, refined by
// parabolic interpolation through the best three samples.
inline Minimum scan_spacing(double E01, double t1, double t2, double a, double b,
                            double step, int lo) {
  auto spacing = [&](double e) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> es(hamiltonian(E01, t1, t2, e),
                                                       Eigen::EigenvaluesOnly);
    return es.eigenvalues()(lo + 1) - es.eigenvalues()(lo);
  };
  double best_e = a, best = spacing(a);
  for (double e = a; e <= b; e += step) {
    const double s = spacing(e);
    if (s < best) {
      best = s;
      best_e = e;
    }
  }
  const double f0 = spacing(best_e - step), f1 = best, f2 = spacing(best_e + step);
  const double den = f0 - 2.0 * f1 + f2;
  const double shift = den > 0 ? 0.5 * step * (f0 - f2) / den : 0.0;
  const double e = best_e + shift;
  return {e, spacing(e)};
}

}  // namespace oracle
