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

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "hybridpulse/dynamics.hpp"
#include "hybridpulse/pulse.hpp"

namespace hp {

struct TwoQubitParams {
  HybridParams control = HybridParams::valley(200.0, 10.0);
  HybridParams target = HybridParams::valley(200.0, 10.0);
  // Shift of the target's detuning axis while the control occupies |E>.
  double delta_eps = 100.0;

  void validate() const;
  bool operator==(const TwoQubitParams&) const = default;
};

// Joint index 3 * control + target. The coupling raises the target |E>
// energy by delta_eps inside the control-|E> block, which moves the target
// anticrossings to +delta_eps.
MatX build_joint_hamiltonian(const TwoQubitParams& p, double eps_c, double eps_t);

// Two plateau lanes on a shared clock. Control: B, idle, B. Target: idle,
// B', P', B', idle.
struct ConditionalSchedule {
  PulseSchedule control;
  PulseSchedule target;
  double phi = 0.0;

  std::size_t pulse_count() const {
    return control.segments.size() + target.segments.size();
  }
};

struct TwoQubitOptions {
  // Idle detuning depth in units of max(t1, t2). Deeper than the single-qubit
  // default so parked qubits barely mix with |E>.
  double idle_depth = 40.0;
  CalibrationOptions calibration{};
};

ConditionalSchedule conditional_phase_schedule(const TwoQubitParams& p, double phi,
                                               const TwoQubitOptions& opt = {});

struct TruthTable {
  // populations(out, in) over |00>,|01>,|10>,|11> (control, target).
  Eigen::Matrix4d populations = Eigen::Matrix4d::Zero();
  std::array<double, 4> leakage{};
  // Phase of each logical input relative to |00>, from superposition probes.
  std::array<double, 4> phases{};
  double conditional_phase = 0.0;  // wrapped to (-pi, pi]
  double control_phase = 0.0;      // |10> relative to |00>
  double target_phase = 0.0;       // |01> relative to |00>
  double fidelity = 0.0;           // average gate fidelity vs CPHASE(phi) x local phases
  double spurious_excitation = 0.0;  // worst loss from the control-|0> inputs
  bool conditioned = false;        // |conditional phase| > 1e-3
};

TruthTable truth_table(const TwoQubitParams& p, const ConditionalSchedule& s,
                       const DephasingSpec& d);

// Lengthens the control's middle idle (and pads the target's last idle) so
// the control's single-qubit phase becomes a multiple of 2 pi.
ConditionalSchedule cancel_control_phase(const TwoQubitParams& p,
                                         const ConditionalSchedule& s,
                                         const TwoQubitOptions& opt = {});

// Runs both lanes jointly. Snapshots at every lane boundary.
Trajectory run_joint(const DensityState& rho0, const TwoQubitParams& p,
                     const ConditionalSchedule& s, const DephasingSpec& d);

// Rows per logical input: populations, leakage, phase; then `fidelity,<F>`.
void write_truth_table_csv(std::ostream& os, const TruthTable& t,
                           const std::vector<std::string>& header);

}  // namespace hp
