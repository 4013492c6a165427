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
#include <utility>
#include <vector>

#include "hybridpulse/dynamics.hpp"
#include "hybridpulse/pulse.hpp"

namespace hp {

inline constexpr const char* kFidelityMetric =
    "mean over the six cardinal logical states of <psi_target|rho_final|psi_target>";

struct FidelityReport {
  double fidelity = 1.0;
  double infidelity = 0.0;
  double leakage = 0.0;              // mean final population outside the qubit
  std::array<double, 6> per_state{};  // +z -z +x -x +y -y
};

const std::array<Eigen::Vector2cd, 6>& cardinal_states();
const std::array<const char*, 6>& cardinal_labels();

FidelityReport gate_fidelity(const HybridParams& p, const PulseSchedule& sched,
                             const Mat2& target, const RunOptions& opt = {});

struct SweepRow {
  double t = 0.0;  // tunnel coupling, ueV
  double infidelity = 0.0;
  double leakage = 0.0;
  bool merged = false;      // anticrossings not distinct
  bool calibrated = true;   // schedule met its coherent tolerance
  double residual = 0.0;    // coherent residual of the schedule
  double eps = 0.0;         // operating detuning (ST rows: optimum)
};

struct SweepResult {
  std::string label;
  std::vector<SweepRow> rows;
};

struct SweepOptions {
  int threads = 1;
  ScheduleOptions schedule{};
};

std::vector<double> log_grid(double lo, double hi, int n);

// x-pi rotation in the Alternative order at each t1 with t2 = sqrt(3/2) t1.
SweepResult hybrid_sweep(double E01, const DephasingSpec& d,
                         const std::vector<double>& t1_grid,
                         const SweepOptions& opt = {});

struct STParams {
  std::string material = "custom";
  double gamma_ST = 0.0;       // 1/ns
  double deltaB = 0.0;         // T
  double g_factor = 2.0;
  double Gamma_charge = 0.2;   // 1/ns
  // +1: S(0,2) sits at -eps; -1 relabels the charge state to +eps.
  int charge_sign = 1;

  double zeeman_gradient() const { return g_factor * kBohrMagneton * deltaB; }
  void validate() const;
  bool operator==(const STParams&) const = default;

  static STParams gaas();
  static STParams natural_si();
  static STParams purified_si();
};

// Basis {S(1,1), T0, S(0,2)}.
Mat3 st_hamiltonian(const STParams& st, double t, double eps);
// Exchange splitting between T0 and the hybridised singlet.
double st_exchange(const STParams& st, double t, double eps);

FidelityReport st_fidelity(const STParams& st, double t, double eps);

struct STOptimum {
  double eps = 0.0;
  FidelityReport report;
};

// Search u = log10(|eps|/t) over [u_lo, u_hi] on the (1,1) side.
// The upper end keeps |L| T near 3e5, where the superoperator exponential
// still preserves the trace to 1e-11.
inline constexpr double kSTBracketLo = -1.0;
inline constexpr double kSTBracketHi = 2.5;
STOptimum st_optimize_eps(const STParams& st, double t);

std::vector<SweepResult> comparison_sweep(const std::vector<STParams>& materials,
                                          const std::vector<double>& t_grid,
                                          int threads = 1);

// Plot-ready body: t,infidelity,leakage,merged,calibrated,residual,eps.
void write_sweep_csv(std::ostream& os, const SweepResult& r,
                     const std::vector<std::string>& header);

}  // namespace hp
