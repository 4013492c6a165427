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

#include "hybridpulse/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <ostream>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "hybridpulse/errors.hpp"

namespace hp {

namespace {
const cplx I{0.0, 1.0};

std::mutex g_audit_mu;
AuditSummary g_audit;
}  // namespace

void DephasingSpec::validate() const {
  if (!(Gamma >= 0) || !(gamma >= 0))
    throw Error(ErrorKind::ValidationError, "dephasing rates must be >= 0");
}

Eigen::MatrixXd rate_matrix(const DephasingSpec& d) {
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(3, 3);
  r(0, 1) = r(1, 0) = d.gamma;
  r(0, 2) = r(2, 0) = d.Gamma;
  r(1, 2) = r(2, 1) = d.Gamma;
  return r;
}

Eigen::MatrixXd joint_rates(const Eigen::MatrixXd& Ra, const Eigen::MatrixXd& Rb) {
  const Eigen::Index na = Ra.rows(), nb = Rb.rows();
  Eigen::MatrixXd r(na * nb, na * nb);
  for (Eigen::Index a = 0; a < na; ++a)
    for (Eigen::Index b = 0; b < nb; ++b)
      for (Eigen::Index c = 0; c < na; ++c)
        for (Eigen::Index e = 0; e < nb; ++e)
          r(a * nb + b, c * nb + e) = Ra(a, c) + Rb(b, e);
  return r;
}

DensityState pure_state(const VecX& psi) {
  const VecX v = psi / psi.norm();
  return {v * v.adjoint()};
}

DensityState basis_state(Eigen::Index n, Eigen::Index k) {
  DensityState s{MatX::Zero(n, n)};
  s.rho(k, k) = 1.0;
  return s;
}

InvariantCheck check_invariants(const MatX& rho) {
  InvariantCheck c;
  c.trace_error = std::abs(rho.trace() - 1.0);
  c.hermiticity_error = (rho - rho.adjoint()).norm();
  const MatX h = 0.5 * (rho + rho.adjoint());
  c.min_eigenvalue =
      Eigen::SelfAdjointEigenSolver<MatX>(h, Eigen::EigenvaluesOnly).eigenvalues()(0);
  c.ok = c.trace_error < kTraceTol && c.hermiticity_error < kHermTol &&
         c.min_eigenvalue > kPosTol;
  return c;
}

AuditSummary audit_summary() {
  std::lock_guard lk(g_audit_mu);
  return g_audit;
}

void audit_reset() {
  std::lock_guard lk(g_audit_mu);
  g_audit = {};
}

void audit(const MatX& rho) {
  const InvariantCheck c = check_invariants(rho);
  {
    std::lock_guard lk(g_audit_mu);
    ++g_audit.snapshots;
    g_audit.worst_trace_error = std::max(g_audit.worst_trace_error, c.trace_error);
    g_audit.worst_hermiticity_error =
        std::max(g_audit.worst_hermiticity_error, c.hermiticity_error);
    g_audit.worst_min_eigenvalue = std::min(g_audit.worst_min_eigenvalue, c.min_eigenvalue);
    if (!c.ok) ++g_audit.violations;
  }
  if (!c.ok)
    throw Error(ErrorKind::Diagnostics,
                "density matrix invariant broken: trace err " + fmt17(c.trace_error) +
                    ", herm err " + fmt17(c.hermiticity_error) + ", min eig " +
                    fmt17(c.min_eigenvalue));
}

MatX liouvillian(const MatX& H, const Eigen::MatrixXd& R) {
  const Eigen::Index n = H.rows();
  const MatX id = MatX::Identity(n, n);
  MatX L = (-I / kHbar) * (Eigen::kroneckerProduct(id, H).eval() -
                           Eigen::kroneckerProduct(H.transpose(), id).eval());
  // vec index of rho(i, j) is j * n + i.
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) L(j * n + i, j * n + i) -= R(i, j);
  return L;
}

MatX plateau_superoperator(const MatX& H, const Eigen::MatrixXd& R, double T) {
  const MatX LT = liouvillian(H, R) * T;
  return LT.exp();
}

MatX unitary_propagator(const MatX& H, double T) {
  Eigen::SelfAdjointEigenSolver<MatX> es(H);
  const Eigen::VectorXd& w = es.eigenvalues();
  VecX ph(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) ph(k) = std::exp(-I * w(k) * T / kHbar);
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

namespace {

MatX apply_superop(const MatX& S, const MatX& rho) {
  const Eigen::Index n = rho.rows();
  const VecX v = Eigen::Map<const VecX>(rho.data(), n * n);
  const VecX out = S * v;
  MatX r = Eigen::Map<const MatX>(out.data(), n, n);
  return 0.5 * (r + r.adjoint());
}

}  // namespace

DensityState evolve_plateau(const DensityState& rho0, const MatX& H,
                            const Eigen::MatrixXd& R, double T) {
  if (T == 0.0) return rho0;
  return {apply_superop(plateau_superoperator(H, R, T), rho0.rho)};
}

DensityState evolve_plateau(const DensityState& rho0, const MatX& H,
                            const DephasingSpec& d, double T) {
  return evolve_plateau(rho0, H, rate_matrix(d), T);
}

namespace {

template <class M, class RM>
M rk4_run(const M& rho0, const M& H0, const M& H1, const RM& R, double T,
          long steps) {
  M rho = rho0;
  const double dt = T / static_cast<double>(steps);
  const M dH = H1 - H0;
  auto f = [&](double t, const M& r) -> M {
    const M H = H0 + dH * (t / T);
    M d = (-I / kHbar) * (H * r - r * H);
    d.array() -= R.array().template cast<cplx>() * r.array();
    return d;
  };
  for (long k = 0; k < steps; ++k) {
    const double t = dt * static_cast<double>(k);
    const M k1 = f(t, rho);
    const M k2 = f(t + 0.5 * dt, rho + 0.5 * dt * k1);
    const M k3 = f(t + 0.5 * dt, rho + 0.5 * dt * k2);
    const M k4 = f(t + dt, rho + dt * k3);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = (0.5 * (rho + rho.adjoint())).eval();
  }
  return rho;
}

}  // namespace

MatX rk4_fixed(const MatX& rho0, const MatX& H0, const MatX& H1,
               const Eigen::MatrixXd& R, double T, long steps) {
  if (T <= 0 || steps <= 0) return rho0;
  if (rho0.rows() == 3) {
    const Mat3 r = rk4_run<Mat3, Eigen::Matrix3d>(rho0, H0, H1, R, T, steps);
    return r;
  }
  return rk4_run<MatX, Eigen::MatrixXd>(rho0, H0, H1, R, T, steps);
}

DensityState evolve_ramp(const DensityState& rho0, const HybridParams& p,
                         const PulseSegment& seg, const DephasingSpec& d,
                         const RampOptions& opt) {
  if (seg.duration == 0.0) return rho0;
  const MatX H0 = build_hamiltonian(p, seg.eps_start);
  const MatX H1 = build_hamiltonian(p, seg.eps_end);
  const Eigen::MatrixXd R = rate_matrix(d);
  double dt = std::min(opt.dt_max, seg.duration);
  long steps = static_cast<long>(std::ceil(seg.duration / dt));
  MatX coarse = rk4_fixed(rho0.rho, H0, H1, R, seg.duration, steps);
  for (;;) {
    const MatX fine = rk4_fixed(rho0.rho, H0, H1, R, seg.duration, 2 * steps);
    if (trace_distance(coarse, fine) < opt.tolerance) return {fine};
    steps *= 2;
    if (seg.duration / static_cast<double>(steps) < opt.dt_min)
      throw Error(ErrorKind::StepTooLarge,
                  "ramp did not converge above dt_min = " + std::to_string(opt.dt_min));
    coarse = fine;
  }
}

double trace_distance(const MatX& a, const MatX& b) {
  const MatX d = 0.5 * ((a - b) + (a - b).adjoint());
  return 0.5 * Eigen::SelfAdjointEigenSolver<MatX>(d, Eigen::EigenvaluesOnly)
                   .eigenvalues()
                   .cwiseAbs()
                   .sum();
}

double purity(const DensityState& s) { return (s.rho * s.rho).trace().real(); }

Trajectory run_schedule(const DensityState& rho0, const HybridParams& p,
                        const PulseSchedule& sched, const DephasingSpec& d,
                        const RunOptions& opt) {
  sched.validate();
  const Eigen::MatrixXd R = rate_matrix(d);
  Trajectory tr;
  double t = 0.0;
  DensityState cur = rho0;
  audit(cur.rho);
  tr.times.push_back(t);
  tr.states.push_back(cur);
  for (const auto& seg : sched.segments) {
    if (seg.duration == 0.0) continue;
    if (seg.shape == Shape::Plateau) {
      const MatX H = build_hamiltonian(p, seg.eps_start);
      const int k = opt.samples_per_segment + 1;
      const double h = seg.duration / k;
      const MatX S = plateau_superoperator(H, R, h);
      for (int j = 0; j < k; ++j) {
        cur.rho = apply_superop(S, cur.rho);
        t += h;
        audit(cur.rho);
        tr.times.push_back(t);
        tr.states.push_back(cur);
      }
    } else {
      cur = evolve_ramp(cur, p, seg, d, opt.ramp);
      t += seg.duration;
      audit(cur.rho);
      tr.times.push_back(t);
      tr.states.push_back(cur);
    }
  }
  return tr;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr,
                          const std::vector<std::string>& header) {
  for (const auto& h : header) os << "# " << h << '\n';
  os << "time,pop0,pop1,popE,purity,re01,im01,re0E,im0E,re1E,im1E\n";
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    const MatX& r = tr.states[k].rho;
    os << fmt17(tr.times[k]) << ',' << fmt17(r(0, 0).real()) << ','
       << fmt17(r(1, 1).real()) << ',' << fmt17(r(2, 2).real()) << ','
       << fmt17(purity(tr.states[k])) << ',' << fmt17(r(0, 1).real()) << ','
       << fmt17(r(0, 1).imag()) << ',' << fmt17(r(0, 2).real()) << ','
       << fmt17(r(0, 2).imag()) << ',' << fmt17(r(1, 2).real()) << ','
       << fmt17(r(1, 2).imag()) << '\n';
  }
}

}  // namespace hp
