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

#include "hybridpulse/two_qubit.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <unsupported/Eigen/KroneckerProduct>

#include "hybridpulse/errors.hpp"
#include "lsq.hpp"

namespace hp {

namespace {

const cplx I{0.0, 1.0};
constexpr int kLogical[4] = {0, 1, 3, 4};  // |00>,|01>,|10>,|11> in 3x3 indexing

struct Interval {
  double eps_c, eps_t, dt;
};

double lane_eps_at(const PulseSchedule& s, double t) {
  double t0 = 0.0;
  for (const auto& g : s.segments) {
    if (t < t0 + g.duration) return g.eps_at(t - t0);
    t0 += g.duration;
  }
  return s.segments.back().eps_end;
}

std::vector<Interval> joint_intervals(const ConditionalSchedule& s) {
  for (const auto* lane : {&s.control, &s.target})
    for (const auto& g : lane->segments)
      if (g.shape != Shape::Plateau)
        throw Error(ErrorKind::InvalidArgument, "two-qubit lanes must be plateaus");
  const double Tc = s.control.total_duration(), Tt = s.target.total_duration();
  if (std::abs(Tc - Tt) > 1e-12 * std::max(1.0, Tc))
    throw Error(ErrorKind::ValidationError, "control and target lanes differ in length");
  std::vector<double> cuts{0.0};
  for (const auto* lane : {&s.control, &s.target}) {
    double t = 0.0;
    for (const auto& g : lane->segments) cuts.push_back(t += g.duration);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<Interval> out;
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    const double a = cuts[k - 1], b = cuts[k];
    if (b - a <= 1e-15 * std::max(1.0, Tc)) continue;
    const double m = 0.5 * (a + b);
    out.push_back({lane_eps_at(s.control, m), lane_eps_at(s.target, m), b - a});
  }
  return out;
}

MatX joint_unitary(const TwoQubitParams& p, const ConditionalSchedule& s) {
  MatX U = MatX::Identity(9, 9);
  for (const auto& iv : joint_intervals(s))
    U = unitary_propagator(build_joint_hamiltonian(p, iv.eps_c, iv.eps_t), iv.dt) * U;
  return U;
}

MatX joint_superoperator(const TwoQubitParams& p, const ConditionalSchedule& s,
                         const DephasingSpec& d) {
  const Eigen::MatrixXd R = joint_rates(rate_matrix(d), rate_matrix(d));
  MatX S = MatX::Identity(81, 81);
  for (const auto& iv : joint_intervals(s))
    S = plateau_superoperator(build_joint_hamiltonian(p, iv.eps_c, iv.eps_t), R, iv.dt) * S;
  return S;
}

MatX apply_super(const MatX& S, const MatX& rho) {
  const VecX out = S * Eigen::Map<const VecX>(rho.data(), 81);
  return Eigen::Map<const MatX>(out.data(), 9, 9);
}

double conditional_of(const MatX& U) {
  auto a = [&](int k) { return std::arg(U(kLogical[k], kLogical[k])); };
  return wrap_signed(a(3) - a(1) - a(2) + a(0));
}

// Worst population lost by the control-|0> inputs.
double spurious_of(const MatX& U) {
  return std::max(1.0 - std::norm(U(kLogical[0], kLogical[0])),
                  1.0 - std::norm(U(kLogical[1], kLogical[1])));
}

double control_phase_of(const MatX& U) {
  return wrap_signed(std::arg(U(kLogical[2], kLogical[2])) -
                     std::arg(U(kLogical[0], kLogical[0])));
}

int branch_of(const Spectrum& s, int level) {
  int best = 0;
  for (int k = 1; k < 3; ++k)
    if (std::norm(s.vectors(level, k)) > std::norm(s.vectors(level, best))) best = k;
  return best;
}

double dressed_split(const HybridParams& p, double eps, int hi, int lo) {
  const Spectrum s = spectrum(p, eps);
  return s.values(branch_of(s, hi)) - s.values(branch_of(s, lo));
}

}  // namespace

void TwoQubitParams::validate() const {
  control.validate();
  target.validate();
  if (!(delta_eps >= 0) || !std::isfinite(delta_eps))
    throw Error(ErrorKind::ValidationError, "delta_eps must be >= 0");
}

MatX build_joint_hamiltonian(const TwoQubitParams& p, double eps_c, double eps_t) {
  const MatX id = MatX::Identity(3, 3);
  const MatX hc = build_hamiltonian(p.control, eps_c);
  const MatX ht = build_hamiltonian(p.target, eps_t);
  MatX h = Eigen::kroneckerProduct(hc, id).eval() + Eigen::kroneckerProduct(id, ht).eval();
  h(3 * kLevelE + kLevelE, 3 * kLevelE + kLevelE) += p.delta_eps;
  return h;
}

ConditionalSchedule conditional_phase_schedule(const TwoQubitParams& p, double phi,
                                               const TwoQubitOptions& opt) {
  p.validate();
  const double tmax = std::max(p.target.t1, p.target.t2);
  if (p.delta_eps < 4.0 * tmax)
    throw Error(ErrorKind::ConditioningTooWeak,
                "delta_eps " + fmt17(p.delta_eps) + " below 4 max(t1, t2) = " +
                    fmt17(4.0 * tmax));
  const Anticrossings acc = find_anticrossings(p.control);
  const Anticrossings act = find_anticrossings(p.target);
  const CalibratedGate Bc = calibrate_gate(p.control, GateTarget::B(), opt.calibration);
  // The conditioned target block at eps equals the bare target at eps - delta_eps.
  const CalibratedGate Bt = calibrate_gate(p.target, GateTarget::B(), opt.calibration);
  const double eps_Bp = Bt.segment.eps_start + p.delta_eps;
  const double TBp = Bt.segment.duration;
  const double TBc = Bc.segment.duration;
  const double idle_c = idle_detuning(p.control, acc, opt.idle_depth);
  const double idle_t = idle_detuning(p.target, act, opt.idle_depth);
  const double eps_Pp = idle_t;

  auto build = [&](double TP) {
    ConditionalSchedule s;
    s.phi = phi;
    s.control.eps_init = s.control.eps_final = idle_c;
    s.target.eps_init = s.target.eps_final = idle_t;
    s.control.segments = {Bc.segment, PulseSegment::plateau(idle_c, 2 * TBp + TP),
                          Bc.segment};
    s.target.segments = {PulseSegment::plateau(idle_t, TBc),
                         PulseSegment::plateau(eps_Bp, TBp),
                         PulseSegment::plateau(eps_Pp, TP),
                         PulseSegment::plateau(eps_Bp, TBp),
                         PulseSegment::plateau(idle_t, TBc)};
    return s;
  };

  // Conditional phase falls at the rate of the conditioned |E> sector
  // relative to the bare |1> sector while P' runs.
  const double rate = dressed_split(p.target, eps_Pp - p.delta_eps, kLevelE, kLevel0) -
                      dressed_split(p.target, eps_Pp, kLevel1, kLevel0);
  const double c0 = conditional_of(joint_unitary(p, build(0.0)));
  const double period = kTwoPi * kHbar / std::abs(rate);
  const double T0 = kHbar * wrap_angle(rate > 0 ? c0 - phi : phi - c0) / std::abs(rate);

  // Every extra period of the conditional rate leaves phi unchanged but
  // rotates the unconditioned branch, which sets whether the off-resonant
  // excitations from the two B' pulses add or cancel. Keep the quietest.
  constexpr int kPeriods = 16;
  int best_n = 0;
  double best_spur = 2.0;
  for (int n = 0; n < kPeriods; ++n) {
    const double sp = spurious_of(joint_unitary(p, build(T0 + n * period)));
    if (sp < best_spur - 1e-12) {
      best_spur = sp;
      best_n = n;
    }
  }

  const detail::Residual f = [&](const Eigen::VectorXd& x, Eigen::VectorXd& r) {
    const double TP = std::abs(T0 + period * (best_n + x(0)));
    r(0) = wrap_signed(conditional_of(joint_unitary(p, build(TP))) - phi);
  };
  Eigen::VectorXd x = Eigen::VectorXd::Zero(1);
  Eigen::VectorXd r(1);
  f(x, r);
  if (std::abs(r(0)) > 1e-12) detail::least_squares(f, x, 1, opt.calibration.max_evaluations);
  return build(std::abs(T0 + period * (best_n + x(0))));
}

ConditionalSchedule cancel_control_phase(const TwoQubitParams& p,
                                         const ConditionalSchedule& s,
                                         const TwoQubitOptions& opt) {
  if (s.control.segments.size() != 3 || s.target.segments.empty())
    throw Error(ErrorKind::InvalidArgument, "expected a compiled conditional schedule");
  const Anticrossings acc = find_anticrossings(p.control);
  const double idle_c = idle_detuning(p.control, acc, opt.idle_depth);
  // The control |1> branch sits in |E> during the middle idle.
  const double rate = dressed_split(p.control, idle_c, kLevelE, kLevel0);
  const double period = kTwoPi * kHbar / std::abs(rate);
  ConditionalSchedule out = s;
  for (int iter = 0; iter < 4; ++iter) {
    const double cp = control_phase_of(joint_unitary(p, out));
    if (std::abs(cp) < 1e-10) break;
    // Later steps are small corrections of either sign.
    const double a = rate > 0 ? cp : -cp;
    const double tau = kHbar * (iter == 0 ? wrap_angle(a) : wrap_signed(a)) / std::abs(rate);
    // The middle idle also sets how the two control B pulses' off-resonant
    // leaks interfere; the first step picks the whole period that keeps the
    // control-|0> branch quietest.
    int best_n = 0;
    if (iter == 0) {
      double best = 2.0;
      for (int n = 0; n < 8; ++n) {
        ConditionalSchedule c = out;
        c.control.segments[1].duration += tau + n * period;
        c.target.segments.back().duration += tau + n * period;
        const double loss = spurious_of(joint_unitary(p, c));
        if (loss < best - 1e-12) {
          best = loss;
          best_n = n;
        }
      }
    }
    out.control.segments[1].duration += tau + best_n * period;
    out.target.segments.back().duration += tau + best_n * period;
  }
  return out;
}

TruthTable truth_table(const TwoQubitParams& p, const ConditionalSchedule& s,
                       const DephasingSpec& d) {
  p.validate();
  d.validate();
  const MatX S = joint_superoperator(p, s, d);
  TruthTable tt;
  for (int j = 0; j < 4; ++j) {
    MatX rho = MatX::Zero(9, 9);
    rho(kLogical[j], kLogical[j]) = 1.0;
    MatX out = apply_super(S, rho);
    out = 0.5 * (out + out.adjoint());
    audit(out);
    double kept = 0.0;
    for (int i = 0; i < 4; ++i) {
      tt.populations(i, j) = out(kLogical[i], kLogical[i]).real();
      kept += tt.populations(i, j);
    }
    tt.leakage[j] = std::max(0.0, 1.0 - kept);
  }
  // Coherence |j><0| is the linear combination of the superposition probes
  // (|0> + e^{ia}|j>)/sqrt 2, so apply it directly.
  for (int j = 1; j < 4; ++j) {
    MatX e = MatX::Zero(9, 9);
    e(kLogical[j], kLogical[0]) = 1.0;
    const MatX out = apply_super(S, e);
    tt.phases[j] = wrap_signed(std::arg(out(kLogical[j], kLogical[0])));
  }
  tt.target_phase = tt.phases[1];
  tt.control_phase = tt.phases[2];
  tt.conditional_phase = wrap_signed(tt.phases[3] - tt.phases[1] - tt.phases[2]);
  tt.conditioned = std::abs(tt.conditional_phase) > 1e-3;
  tt.spurious_excitation =
      std::max(1.0 - tt.populations(0, 0), 1.0 - tt.populations(1, 1));

  // Ideal: CPHASE(phi) dressed with the measured single-qubit phases.
  std::array<cplx, 4> u{1.0, std::exp(I * tt.target_phase), std::exp(I * tt.control_phase),
                        std::exp(I * (tt.target_phase + tt.control_phase + s.phi))};
  // Process fidelity on the logical subspace from E(|i><j|).
  cplx acc = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      MatX e = MatX::Zero(9, 9);
      e(kLogical[i], kLogical[j]) = 1.0;
      const MatX out = apply_super(S, e);
      acc += std::conj(u[i]) * out(kLogical[i], kLogical[j]) * u[j];
    }
  const double fpro = acc.real() / 16.0;
  tt.fidelity = (4.0 * fpro + 1.0) / 5.0;
  return tt;
}

Trajectory run_joint(const DensityState& rho0, const TwoQubitParams& p,
                     const ConditionalSchedule& s, const DephasingSpec& d) {
  const Eigen::MatrixXd R = joint_rates(rate_matrix(d), rate_matrix(d));
  Trajectory tr;
  double t = 0.0;
  DensityState cur = rho0;
  audit(cur.rho);
  tr.times.push_back(t);
  tr.states.push_back(cur);
  for (const auto& iv : joint_intervals(s)) {
    cur = evolve_plateau(cur, build_joint_hamiltonian(p, iv.eps_c, iv.eps_t), R, iv.dt);
    t += iv.dt;
    audit(cur.rho);
    tr.times.push_back(t);
    tr.states.push_back(cur);
  }
  return tr;
}

void write_truth_table_csv(std::ostream& os, const TruthTable& t,
                           const std::vector<std::string>& header) {
  static const char* names[4] = {"00", "01", "10", "11"};
  for (const auto& h : header) os << "# " << h << '\n';
  os << "input,p00,p01,p10,p11,leakage,phase\n";
  for (int j = 0; j < 4; ++j) {
    os << names[j];
    for (int i = 0; i < 4; ++i) os << ',' << fmt17(t.populations(i, j));
    os << ',' << fmt17(t.leakage[j]) << ',' << fmt17(t.phases[j]) << '\n';
  }
  os << "fidelity," << fmt17(t.fidelity) << '\n';
}

}  // namespace hp
