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

#include <gtest/gtest.h>

#include <sstream>

#include "hybridpulse/dynamics.hpp"
#include "hybridpulse/errors.hpp"
#include "hybridpulse/pulse.hpp"
#include "oracles.hpp"

using namespace hp;

TEST(Timing, RabiPiTime) {
  EXPECT_NEAR(rabi_pi_time(40.0), kPi * 0.6582119569 / 40.0, 1e-15);
  EXPECT_NEAR(rabi_pi_time(40.0), 0.0517, 1e-4);
  EXPECT_DOUBLE_EQ(rabi_pi_time(80.0), rabi_pi_time(40.0) / 2);
  EXPECT_LT(rabi_pi_time(2 * 2.6) / 2, 0.2);
  EXPECT_THROW(rabi_pi_time(0.0), Error);
}

TEST(Timing, PhaseGateTime) {
  EXPECT_NEAR(phase_gate_time(50.0, kTwoPi), 0.0827, 1e-4);
  EXPECT_EQ(phase_gate_time(50.0, 0.0), 0.0);
  EXPECT_NEAR(phase_gate_time(50.0, kPi), 0.0414, 1e-4);
  EXPECT_THROW(phase_gate_time(-1.0, 1.0), Error);
}

TEST(Calibrate, BNearTwoLevelTime) {
  const HybridParams p = HybridParams::valley(200.0, 2.0);
  const CalibratedGate g = calibrate_gate(p, GateTarget::B());
  const Anticrossings ac = find_anticrossings(p);
  EXPECT_NEAR(g.segment.duration, rabi_pi_time(ac.gap_B), 0.05 * rabi_pi_time(ac.gap_B));
  EXPECT_LT(g.calibration_error, 1e-6);
}

TEST(Calibrate, ErrorBelowToleranceAndDeterministic) {
  const HybridParams p = HybridParams::valley(200.0, 10.0);
  for (const GateTarget& t : {GateTarget::B(), GateTarget::A(kPi), GateTarget::A(1.0)}) {
    const CalibratedGate a = calibrate_gate(p, t), b = calibrate_gate(p, t);
    EXPECT_LT(a.calibration_error, 1e-6);
    EXPECT_EQ(a.segment, b.segment);
    EXPECT_EQ(a.realized_unitary, b.realized_unitary);
  }
}

TEST(Calibrate, PhaseGateNearDiagonalLimit) {
  const HybridParams p = HybridParams::valley(200.0, 0.5);
  const CalibratedGate g = calibrate_gate(p, GateTarget::P(kPi, -50.0));
  EXPECT_NEAR(g.segment.duration, phase_gate_time(50.0, kPi), 0.05 * phase_gate_time(50.0, kPi));
  EXPECT_LT(g.calibration_error, 1e-6);
}

TEST(Calibrate, DiscrepancyGrowsWithCoupling) {
  double last = -1.0;
  for (double t1 : {1.0, 2.0, 5.0, 10.0}) {
    const HybridParams p = HybridParams::valley(200.0, t1);
    const double T = calibrate_gate(p, GateTarget::B()).segment.duration;
    const double analytic = rabi_pi_time(2.0 * p.t2);
    const double rel = std::abs(T - analytic) / analytic;
    if (t1 / p.E01 <= 0.05) EXPECT_LT(rel, 0.05) << t1;
    EXPECT_GT(rel, last) << t1;
    last = rel;
  }
}

TEST(Schedule, StandardXPiVisitsTheAnticrossings) {
  const HybridParams p = HybridParams::valley(200.0, 10.0);
  const RotationSchedule rs = schedule_rotation(p, GateSpec::x(kPi), SequenceOrder::Standard);
  const auto& s = rs.schedule.segments;
  ASSERT_EQ(s.size(), 5u);
  const Anticrossings& ac = rs.anticrossings;
  const double eps_P = default_eps_P(ac);
  const double tol = 2.0 * p.t2;
  EXPECT_NEAR(s[0].eps_start, ac.eps_B, tol);
  EXPECT_EQ(s[1].eps_start, eps_P);
  EXPECT_NEAR(s[2].eps_start, ac.eps_A, tol);
  EXPECT_EQ(s[3].eps_start, eps_P);
  EXPECT_NEAR(s[4].eps_start, ac.eps_B, tol);
  EXPECT_TRUE(rs.refined);
}

TEST(Schedule, ExpectedUnitaryIsThePlateauProduct) {
  const HybridParams p = HybridParams::valley(200.0, 10.0);
  for (SequenceOrder o : {SequenceOrder::Standard, SequenceOrder::Alternative}) {
    const GateSpec spec{1.2, 0.8, 0.3};
    const RotationSchedule rs = schedule_rotation(p, spec, o);
    Eigen::MatrixXcd U = Eigen::MatrixXcd::Identity(3, 3);
    for (const auto& g : rs.schedule.segments)
      U = oracle::propagator(oracle::hamiltonian(p.E01, p.t1, p.t2, g.eps_start), g.duration) * U;
    EXPECT_LT((U - rs.expected_unitary).norm(), 1e-10);
    const Mat2 block = rs.expected_unitary.topLeftCorner<2, 2>();
    EXPECT_LT(oracle::phase_distance(block, oracle::rotation(spec.beta, spec.eta, spec.zeta)), 1e-5);
  }
}

TEST(Schedule, UnrefinedMatchesComposedCalibratedGates) {
  const HybridParams p = HybridParams::valley(500.0, 2.0);
  ScheduleOptions opt;
  opt.refine = false;
  const RotationSchedule rs = schedule_rotation(p, GateSpec{2.0, 1.0, 0.5}, SequenceOrder::Standard, opt);
  const Mat3 ideal = compose_sequence(SequenceOrder::Standard, rs.controls, rs.phases);
  // Per-gate calibration leaves errors of order t1 over the |0>-|E>
  // splitting at the P plateaus (50 ueV), the closest level pair in play.
  EXPECT_LT(oracle::phase_distance(rs.expected_unitary.topLeftCorner<2, 2>(),
                                   ideal.topLeftCorner<2, 2>()),
            2.0 * p.t1 / 50.0);
}

TEST(Schedule, IdentityCollapsesTheAPlateau) {
  const HybridParams p = HybridParams::valley(200.0, 10.0);
  ScheduleOptions opt;
  opt.refine = false;
  const RotationSchedule rs = schedule_rotation(p, GateSpec{0.0, 0.0, 0.0}, SequenceOrder::Standard, opt);
  EXPECT_EQ(rs.schedule.segments[2].duration, 0.0);
  EXPECT_NO_THROW(rs.schedule.validate());
  const RotationSchedule refined = schedule_rotation(p, GateSpec{0.0, 0.0, 0.0}, SequenceOrder::Standard);
  EXPECT_LT(oracle::phase_distance(refined.expected_unitary.topLeftCorner<2, 2>(), Mat2::Identity()),
            1e-5);
}

TEST(Schedule, TotalDurationIsTheSum) {
  const RotationSchedule rs =
      schedule_rotation(HybridParams::valley(200.0, 5.0), GateSpec::x(kPi / 2), SequenceOrder::Alternative);
  double sum = 0.0;
  for (const auto& g : rs.schedule.segments) sum += g.duration;
  EXPECT_EQ(rs.schedule.total_duration(), sum);
}

TEST(Schedule, TextRoundTripIsBitExact) {
  const HybridParams p{213.3, 7.1, 9.9, 0.2, 1e-3};
  const RotationSchedule rs = schedule_rotation(p, GateSpec{0.3, 2.0, 4.0}, SequenceOrder::Standard);
  PulseSchedule s = rs.schedule;
  s.segments.push_back(PulseSegment::ramp(-1.0 / 3.0, 2.0 / 7.0, 0.1));
  std::stringstream ss;
  write_schedule(ss, s, p);
  const ScheduleFile f = read_schedule(ss);
  EXPECT_EQ(f.schedule, s);
  EXPECT_EQ(f.params, p);
}

TEST(Schedule, SegmentValidation) {
  EXPECT_THROW(PulseSegment::plateau(0.0, -1.0).validate(), Error);
  EXPECT_THROW((PulseSegment{Shape::Plateau, 0.0, 1.0, 1.0}.validate()), Error);
  EXPECT_THROW(PulseSchedule{}.validate(), Error);
  std::stringstream bad("# hybridpulse schedule v1\nplateau 1 1 x\n");
  EXPECT_THROW(read_schedule(bad), Error);
}

TEST(Adiabatic, SlowRampTransfersToE) {
  const HybridParams p = HybridParams::valley(200.0, 5.0);
  const PulseSchedule s = adiabatic_schedule(p, 20.0, kPi);
  ASSERT_EQ(s.segments.size(), 3u);
  const PulseSegment& up = s.segments[0];
  // Start on the dressed |1> branch; it should end on the dressed |E> branch.
  auto branch = [&](double eps, int level) -> VecX {
    const Spectrum sp = spectrum(p, eps);
    int k = 0;
    for (int j = 1; j < 3; ++j)
      if (std::norm(sp.vectors(level, j)) > std::norm(sp.vectors(level, k))) k = j;
    return sp.vectors.col(k);
  };
  const DensityState out =
      evolve_ramp(pure_state(branch(up.eps_start, kLevel1)), p, up, DephasingSpec{});
  const VecX v = branch(up.eps_end, kLevelE);
  EXPECT_GT((v.adjoint() * out.rho * v)(0, 0).real(), 0.999);
}

TEST(Adiabatic, ZeroRampTimeIsSudden) {
  const HybridParams p = HybridParams::valley(200.0, 5.0);
  const PulseSchedule s = adiabatic_schedule(p, 0.0, kPi);
  EXPECT_EQ(s.segments[0].duration, 0.0);
  EXPECT_EQ(s.segments[2].duration, 0.0);
  EXPECT_GT(s.segments[1].duration, 0.0);
}

TEST(Schedule, SeparatePhasePlateaus) {
  const HybridParams p = HybridParams::valley(200.0, 10.0);
  const Anticrossings ac = find_anticrossings(p);
  ScheduleOptions opt;
  opt.eps_P = ac.eps_A - 40.0;
  opt.eps_P2 = ac.eps_A - 70.0;
  const RotationSchedule rs = schedule_rotation(p, GateSpec{1.0, 0.7, 0.3}, SequenceOrder::Standard, opt);
  EXPECT_EQ(rs.schedule.segments[1].eps_start, opt.eps_P);
  EXPECT_EQ(rs.schedule.segments[3].eps_start, opt.eps_P2);
  EXPECT_TRUE(rs.refined);
}
