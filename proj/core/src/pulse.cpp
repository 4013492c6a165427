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

#include "hybridpulse/pulse.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hybridpulse/dynamics.hpp"
#include "hybridpulse/errors.hpp"
#include "lsq.hpp"

namespace hp {

namespace {

const cplx I{0.0, 1.0};

cplx unit_phase(cplx z) { return std::abs(z) > 0 ? z / std::abs(z) : cplx(1.0); }

Mat3 plateau_unitary(const HybridParams& p, double eps, double T) {
  if (T == 0.0) return Mat3::Identity();
  return unitary_propagator(build_hamiltonian(p, eps), T);
}

Mat2 sub_block(const Mat3& U, int a, int b) {
  Mat2 w;
  w << U(a, a), U(a, b), U(b, a), U(b, b);
  return w;
}

// Index of the eigenvector with the largest weight on a bare level.
int branch_of(const Spectrum& s, int level) {
  int best = 0;
  for (int k = 1; k < 3; ++k)
    if (std::norm(s.vectors(level, k)) > std::norm(s.vectors(level, best))) best = k;
  return best;
}

double leakage_outside(const Mat3& U, const Mat3& ideal) {
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    double out = 0.0;
    for (int i = 0; i < 3; ++i)
      if (std::abs(ideal(i, k)) < 1e-12) out += std::norm(U(i, k));
    worst = std::max(worst, out);
  }
  return worst;
}

struct Active {
  int a, b, spectator;
};

Active active_levels(const GateTarget& g) {
  if (g.kind == GateKind::B) return {kLevel1, kLevelE, kLevel0};
  if (g.kind == GateKind::P && g.logical_pair) return {kLevel0, kLevel1, kLevelE};
  return {kLevel0, kLevelE, kLevel1};
}

Mat2 ideal_block(const GateTarget& g) {
  Mat2 k;
  if (g.kind == GateKind::B) {
    k << 0, -I, -I, 0;
  } else {
    const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
    k << c, -I * s, -I * s, c;
  }
  return k;
}

CalibratedGate calibrate_rotation(const HybridParams& p, const GateTarget& g,
                                  const Anticrossings& ac,
                                  const CalibrationOptions& opt) {
  const Active lv = active_levels(g);
  const bool is_B = g.kind == GateKind::B;
  const double eps0 = std::isnan(g.eps) ? (is_B ? ac.eps_B : ac.eps_A) : g.eps;
  const double gap = is_B ? ac.gap_B : ac.gap_A;
  const double angle = is_B ? kPi : g.angle;
  const double T0 = rabi_pi_time(gap) * angle / kPi;
  const double ts = is_B ? p.t2 : p.t1;
  const Mat2 K = ideal_block(g);

  CalibratedGate out;
  out.target = g;
  if (T0 == 0.0) {
    out.segment = PulseSegment::plateau(eps0, 0.0);
    out.realized_unitary = Mat3::Identity();
    out.leakage = 0.0;
    return out;
  }

  auto unpack = [&](const Eigen::VectorXd& x, double& T, double& eps) {
    T = T0 * std::abs(x(0));
    eps = eps0 + ts * x(1);
  };
  const detail::Residual f = [&](const Eigen::VectorXd& x, Eigen::VectorXd& r) {
    double T, eps;
    unpack(x, T, eps);
    const Mat3 U = plateau_unitary(p, eps, T);
    const Mat2 Q = closest_unitary(sub_block(U, lv.a, lv.b));
    const cplx c = unit_phase((K.adjoint() * Q).trace());
    const Mat2 d = Q - c * K;
    for (int k = 0; k < 4; ++k) {
      r(2 * k) = d(k).real();
      r(2 * k + 1) = d(k).imag();
    }
  };
  Eigen::VectorXd x(2);
  x << 1.0, 0.0;
  const detail::LsqResult res = detail::least_squares(f, x, 8, opt.max_evaluations);

  double T, eps;
  unpack(x, T, eps);
  const Mat3 U = plateau_unitary(p, eps, T);
  const Mat2 Q = closest_unitary(sub_block(U, lv.a, lv.b));
  const cplx c = unit_phase((K.adjoint() * Q).trace());
  out.segment = PulseSegment::plateau(eps, T);
  out.realized_unitary = U;
  out.calibration_error = res.norm;
  if (is_B) {
    const cplx g0 = unit_phase(U(kLevel0, kLevel0));
    out.phases.phi_B = wrap_angle(std::arg(c / g0));
    out.leakage = leakage_outside(U, gate_B(out.phases.phi_B));
  } else {
    out.phases.alpha_A = wrap_angle(std::arg(U(kLevel1, kLevel1) / c));
    out.leakage = leakage_outside(U, gate_A(g.angle, out.phases.alpha_A));
  }
  return out;
}

CalibratedGate calibrate_phase(const HybridParams& p, const GateTarget& g,
                               const CalibrationOptions& opt) {
  if (std::isnan(g.eps))
    throw Error(ErrorKind::InvalidArgument, "P gate needs a plateau detuning");
  const Active lv = active_levels(g);
  const Spectrum s = spectrum(p, g.eps);
  const double split = s.values(branch_of(s, lv.b)) - s.values(branch_of(s, lv.a));
  if (std::abs(split) < 1e-12)
    throw Error(ErrorKind::NonpositiveSplitting, "degenerate P-gate levels");
  const double period = kTwoPi * kHbar / std::abs(split);
  // Level b picks up exp(-i split T / hbar) relative to level a.
  const double T0 = kHbar * wrap_angle(split > 0 ? -g.angle : g.angle) / std::abs(split);

  auto rel_phase = [&](const Mat3& U) {
    return std::arg(U(lv.b, lv.b)) - std::arg(U(lv.a, lv.a));
  };
  const detail::Residual f = [&](const Eigen::VectorXd& x, Eigen::VectorXd& r) {
    const Mat3 U = plateau_unitary(p, g.eps, std::abs(T0 + period * x(0)));
    r(0) = wrap_signed(rel_phase(U) - g.angle);
  };
  Eigen::VectorXd x = Eigen::VectorXd::Zero(1);
  Eigen::VectorXd r0(1);
  f(x, r0);
  double err = std::abs(r0(0));
  if (err > 1e-14) err = detail::least_squares(f, x, 1, opt.max_evaluations).norm;

  const double T = std::abs(T0 + period * x(0));
  const Mat3 U = plateau_unitary(p, g.eps, T);
  CalibratedGate out;
  out.target = g;
  out.segment = PulseSegment::plateau(g.eps, T);
  out.realized_unitary = U;
  out.calibration_error = err;
  const cplx g0 = unit_phase(U(lv.a, lv.a));
  out.phases.alpha_1 = wrap_angle(std::arg(U(lv.spectator, lv.spectator) / g0));
  Mat3 ideal = Mat3::Identity();
  out.leakage = leakage_outside(U, ideal);
  return out;
}

}  // namespace

double rabi_pi_time(double gap) {
  if (!(gap > 0)) throw Error(ErrorKind::NonpositiveGap, "gap must be > 0");
  return kPi * kHbar / gap;
}

double phase_gate_time(double splitting, double phi) {
  if (!(splitting > 0))
    throw Error(ErrorKind::NonpositiveSplitting, "splitting must be > 0");
  return kHbar * phi / splitting;
}

double default_eps_P(const Anticrossings& ac) {
  return std::max(ac.eps_A - 50.0, 0.5 * (ac.eps_A + ac.eps_B));
}

double idle_detuning(const HybridParams& p, const Anticrossings& ac, double depth) {
  return ac.eps_B - depth * std::max(p.t1, p.t2);
}

CalibratedGate calibrate_gate(const HybridParams& p, const GateTarget& target,
                              const CalibrationOptions& opt) {
  p.validate();
  CalibratedGate g;
  if (target.kind == GateKind::P) {
    g = calibrate_phase(p, target, opt);
  } else {
    g = calibrate_rotation(p, target, find_anticrossings(p), opt);
  }
  if (!(g.calibration_error < opt.tolerance))
    throw Error(ErrorKind::CalibrationFailed,
                "calibration error " + fmt17(g.calibration_error) +
                    " above tolerance; anticrossings may overlap");
  return g;
}

Mat3 schedule_unitary(const HybridParams& p, const PulseSchedule& s) {
  Mat3 U = Mat3::Identity();
  for (const auto& seg : s.segments) {
    if (seg.shape != Shape::Plateau)
      throw Error(ErrorKind::InvalidArgument, "schedule_unitary needs plateaus only");
    U = plateau_unitary(p, seg.eps_start, seg.duration) * U;
  }
  return U;
}

namespace {

double logical_residual(const Mat3& U, const Mat2& V, Eigen::VectorXd* r) {
  const Mat2 top = U.topLeftCorner<2, 2>();
  const cplx c = unit_phase((V.adjoint() * top).trace());
  double n2 = 0.0;
  int k = 0;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 3; ++i) {
      const cplx d = U(i, j) - (i < 2 ? c * V(i, j) : cplx(0.0));
      if (r) {
        (*r)(k++) = d.real();
        (*r)(k++) = d.imag();
      }
      n2 += std::norm(d);
    }
  return std::sqrt(n2);
}

struct Refined {
  std::vector<PulseSegment> segments;
  double residual;
};

// Knobs: every duration, plus the detuning of each plateau flagged in
// `tune_eps`. P plateaus keep their detuning: a phase gate is nearly blind
// to it and the optimiser would otherwise wander far along that direction.
Refined refine_plateaus(const HybridParams& p, std::vector<PulseSegment> seed,
                        const std::vector<bool>& tune_eps, const Mat2& V, double Ts,
                        const ScheduleOptions& opt) {
  const double es = std::max(p.t1, p.t2);
  const std::size_t n = seed.size();
  std::vector<int> eps_slot(n, -1);
  int m = static_cast<int>(n);
  for (std::size_t k = 0; k < n; ++k)
    if (tune_eps[k]) eps_slot[k] = m++;
  auto build = [&](const Eigen::VectorXd& x) {
    std::vector<PulseSegment> s = seed;
    for (std::size_t k = 0; k < n; ++k) {
      const double T = std::abs(seed[k].duration + Ts * x(k));
      const double e = eps_slot[k] < 0 ? 0.0 : es * x(eps_slot[k]);
      s[k] = PulseSegment::plateau(seed[k].eps_start + e, T);
    }
    return s;
  };
  auto unitary = [&](const std::vector<PulseSegment>& s) {
    Mat3 U = Mat3::Identity();
    for (const auto& g : s) U = plateau_unitary(p, g.eps_start, g.duration) * U;
    return U;
  };
  const detail::Residual f = [&](const Eigen::VectorXd& x, Eigen::VectorXd& r) {
    logical_residual(unitary(build(x)), V, &r);
  };
  Eigen::VectorXd x = Eigen::VectorXd::Zero(m);
  // |T| has no central-difference slope at zero, so nudge empty plateaus off it.
  for (std::size_t k = 0; k < n; ++k)
    if (seed[k].duration == 0.0) x(k) = 1e-3;
  detail::least_squares(f, x, 12, opt.refine_evaluations, 1e-16, true);
  std::vector<PulseSegment> s = build(x);
  return {s, logical_residual(unitary(s), V, nullptr)};
}

}  // namespace

RotationSchedule schedule_rotation(const HybridParams& p, const GateSpec& spec,
                                   SequenceOrder order, const ScheduleOptions& opt) {
  p.validate();
  spec.validate();
  RotationSchedule rs;
  rs.anticrossings = find_anticrossings(p);
  const Anticrossings& ac = rs.anticrossings;
  // Per-gate calibration seeds the joint refinement, so a gate that misses
  // its own tolerance is not fatal here when refinement follows.
  CalibrationOptions lax = opt.calibration;
  if (opt.refine) lax.tolerance = std::numeric_limits<double>::infinity();

  const CalibratedGate B = calibrate_gate(p, GateTarget::B(), lax);
  rs.phases.phi_B = B.phases.phi_B;
  rs.controls = compile(spec, rs.phases);
  const CalibratedGate A = calibrate_gate(p, GateTarget::A(rs.controls.theta), lax);
  rs.phases.alpha_A = A.phases.alpha_A;

  const bool standard = order == SequenceOrder::Standard;
  const double eps_P = standard
                           ? (std::isnan(opt.eps_P) ? default_eps_P(ac) : opt.eps_P)
                           : idle_detuning(p, ac, opt.idle_depth);
  const CalibratedGate P1 =
      calibrate_gate(p, GateTarget::P(rs.controls.phi1, eps_P, !standard), lax);
  const double eps_P2 = standard && !std::isnan(opt.eps_P2) ? opt.eps_P2 : eps_P;
  const CalibratedGate P2 =
      calibrate_gate(p, GateTarget::P(rs.controls.phi2, eps_P2, !standard), lax);
  rs.phases.alpha_1 = P1.phases.alpha_1;
  rs.phases.alpha_2 = P2.phases.alpha_1;

  if (standard) rs.gates = {B, P1, A, P2, B};
  else rs.gates = {P1, B, A, B, P2};

  std::vector<PulseSegment> segs;
  for (const auto& g : rs.gates) segs.push_back(g.segment);
  rs.schedule.eps_init = rs.schedule.eps_final = idle_detuning(p, ac, opt.idle_depth);
  rs.schedule.segments = segs;
  const Mat2 V = rotation(spec);

  Mat3 U = schedule_unitary(p, rs.schedule);
  rs.residual = logical_residual(U, V, nullptr);
  if (opt.refine && rs.residual > opt.refine_tolerance) {
    // Exact solutions form a family, so try several seeds: the calibrated
    // pulses and variants with the P plateaus one period longer. Among the
    // converged ones keep the shortest. Near merged anticrossings the
    // per-gate seeds are poor, so when a round finds nothing exact the next
    // one rescales the tuned durations.
    const double Ts = B.segment.duration;
    const std::array<int, 2> pk = standard ? std::array<int, 2>{1, 3} : std::array<int, 2>{0, 4};
    std::array<double, 2> period{};
    for (int j = 0; j < 2; ++j) {
      const Spectrum s = spectrum(p, segs[pk[j]].eps_start);
      const int hi = standard ? kLevelE : kLevel1;
      period[j] = kTwoPi * kHbar /
                  std::abs(s.values(branch_of(s, hi)) - s.values(branch_of(s, kLevel0)));
    }
    std::vector<bool> tune(segs.size(), true);
    for (std::size_t k = 0; k < rs.gates.size(); ++k)
      tune[k] = rs.gates[k].target.kind != GateKind::P;
    auto cost = [](const std::vector<PulseSegment>& s) {
      double c = 0.0;
      for (const auto& g : s) c += g.duration;
      return c;
    };
    Refined best{segs, rs.residual};
    bool have_exact = false;
    double best_cost = 0.0;
    constexpr std::array<double, 9> kScales{1.0, 0.7, 1.3, 0.5, 1.6, 0.85, 1.15, 0.35, 2.2};
    for (int variant = 0; variant < 4 * static_cast<int>(kScales.size()); ++variant) {
      if (variant % 4 == 0 && variant > 0 && have_exact) break;
      std::vector<PulseSegment> seed = segs;
      for (std::size_t k = 0; k < seed.size(); ++k)
        if (tune[k]) seed[k].duration *= kScales[variant / 4];
      if (variant & 1) seed[pk[0]].duration += period[0];
      if (variant & 2) seed[pk[1]].duration += period[1];
      Refined r = refine_plateaus(p, seed, tune, V, Ts, opt);
      const bool exact = r.residual < opt.refine_tolerance;
      if (exact) {
        const double c = cost(r.segments);
        if (!have_exact || c < best_cost) {
          best = r;
          best_cost = c;
          have_exact = true;
        }
      } else if (!have_exact && r.residual < best.residual) {
        best = r;
      }
    }
    rs.schedule.segments = best.segments;
    U = schedule_unitary(p, rs.schedule);
    rs.residual = logical_residual(U, V, nullptr);
  }
  rs.refined = rs.residual < opt.refine_tolerance;
  rs.expected_unitary = U;
  return rs;
}

PulseSchedule adiabatic_schedule(const HybridParams& p, double ramp_time,
                                 double theta) {
  if (!(ramp_time >= 0))
    throw Error(ErrorKind::InvalidArgument, "ramp_time must be >= 0");
  const Anticrossings ac = find_anticrossings(p);
  const double t = std::max(p.t1, p.t2);
  const double below = ac.eps_B - 20.0 * t;
  const double above = ac.eps_B + std::min(20.0 * t, 0.45 * (ac.eps_A - ac.eps_B));
  PulseSchedule s;
  s.eps_init = s.eps_final = below;
  s.segments = {PulseSegment::ramp(below, above, ramp_time),
                PulseSegment::plateau(ac.eps_A, rabi_pi_time(ac.gap_A) * theta / kPi),
                PulseSegment::ramp(above, below, ramp_time)};
  return s;
}

}  // namespace hp
