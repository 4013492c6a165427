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

#pragma once

#include <limits>
#include <vector>

#include "hybridpulse/gates.hpp"
#include "hybridpulse/schedule.hpp"

namespace hp {

// Theta = 2 (Delta/hbar) T with gap = 2 Delta, so a pi pulse takes pi hbar / gap.
double rabi_pi_time(double gap);
// Phase phi accumulated at rate splitting/hbar.
double phase_gate_time(double splitting, double phi);

enum class GateKind { A, B, P };

struct GateTarget {
  GateKind kind = GateKind::B;
  double angle = 0.0;  // theta for A, phi for P
  // P only: act on the logical pair {|0>,|1>} (the Alternative order)
  // instead of {|0>,|E>}.
  bool logical_pair = false;
  // Plateau detuning; NaN picks eps_A / eps_B. Required for P.
  double eps = std::numeric_limits<double>::quiet_NaN();

  static GateTarget B() { return {GateKind::B, 0.0, false}; }
  static GateTarget A(double theta) { return {GateKind::A, theta, false}; }
  static GateTarget P(double phi, double eps, bool logical_pair = false) {
    return {GateKind::P, phi, logical_pair, eps};
  }
};

struct CalibratedGate {
  GateTarget target;
  PulseSegment segment;
  Mat3 realized_unitary;
  // Only the entries this gate produces are set: phi_B for B, alpha_A for A,
  // the spectator phase in alpha_1 for P.
  PhaseRecord phases;
  // Distance of the active 2x2 block from the ideal (phase-only for P).
  double calibration_error = 0.0;
  // Largest probability that any basis input ends outside the ideal support.
  double leakage = 0.0;
};

struct CalibrationOptions {
  double tolerance = 1e-6;
  int max_evaluations = 2000;
};

CalibratedGate calibrate_gate(const HybridParams& p, const GateTarget& target,
                              const CalibrationOptions& opt = {});

// Where the |0>-|E> splitting is 50 ueV, clipped to the midpoint of the
// anticrossings when those are closer than that.
double default_eps_P(const Anticrossings& ac);
// eps_B - depth * max(t1, t2).
double idle_detuning(const HybridParams& p, const Anticrossings& ac,
                     double depth = 10.0);

struct ScheduleOptions {
  // Standard order only. NaN picks default_eps_P; NaN eps_P2 follows eps_P.
  double eps_P = std::numeric_limits<double>::quiet_NaN();
  double eps_P2 = std::numeric_limits<double>::quiet_NaN();
  double idle_depth = 10.0;
  // Joint refinement of all plateaus against the full three-level
  // propagator; per-gate calibration alone leaves spectator errors of order
  // t/E01.
  bool refine = true;
  double refine_tolerance = 1e-10;
  int refine_evaluations = 6000;
  CalibrationOptions calibration{};
};

struct RotationSchedule {
  PulseSchedule schedule;
  Mat3 expected_unitary;  // product of the realized plateau propagators
  ControlParams controls;
  PhaseRecord phases;     // from the per-gate calibrations
  std::vector<CalibratedGate> gates;
  Anticrossings anticrossings;
  double residual = 0.0;  // |logical columns - target| after phase alignment
  bool refined = false;   // residual below refine_tolerance
};

RotationSchedule schedule_rotation(const HybridParams& p, const GateSpec& spec,
                                   SequenceOrder order,
                                   const ScheduleOptions& opt = {});

// Coherent propagator of a plateau-only schedule; throws on ramps.
Mat3 schedule_unitary(const HybridParams& p, const PulseSchedule& s);

// Ramp up through eps_B, sudden pulse to an eps_A plateau for the theta
// rotation, ramp back down. Zero ramp_time gives sudden jumps.
PulseSchedule adiabatic_schedule(const HybridParams& p, double ramp_time,
                                 double theta);

}  // namespace hp
