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

#include <iosfwd>
#include <string>
#include <vector>

#include "hybridpulse/dynamics.hpp"
#include "hybridpulse/gates.hpp"
#include "hybridpulse/model.hpp"
#include "hybridpulse/two_qubit.hpp"

namespace hp {

enum class ExperimentKind { SingleGate, HybridSweep, STComparison, TwoQubit, Figure2Bundle, Adiabatic };

const char* to_string(ExperimentKind k) noexcept;

// A declarative experiment. Sections used by the kind are required; any
// other section is rejected so that the serialized form is canonical.
//
//   [experiment] kind, name, seed
//   [qubit]      E01, t1, t2, Gamma, gamma
//   [gate]       beta, eta, zeta, order
//   [sweep]      t_min, t_max, points, splittings
//   [st]         materials, Gamma_charge
//   [two-qubit]  control_E01, control_t1, target_E01, target_t1, delta_eps,
//                phi, Gamma, gamma, cancel_control_phase
//   [adiabatic]  ramp_time, theta
//   [integrator] dt_max, dt_min, tolerance
//
// Angles accept `pi`, `pi/2`, `-3*pi/4` and plain numbers.
struct Scenario {
  ExperimentKind kind = ExperimentKind::SingleGate;
  std::string name = "scenario";
  unsigned long seed = 0;  // recorded only; no run is randomized

  HybridParams qubit{};
  GateSpec gate = GateSpec::x(kPi);
  SequenceOrder order = SequenceOrder::Alternative;

  double t_min = 1.0;
  double t_max = 100.0;
  int points = 20;
  std::vector<double> splittings{50.0, 200.0, 500.0};

  std::vector<std::string> materials{"gaas", "natural-si", "purified-si"};
  double Gamma_charge = 0.2;

  TwoQubitParams two_qubit{};
  double phi = kPi;
  DephasingSpec two_qubit_dephasing{};
  bool cancel_control_phase = false;

  double ramp_time = 2.0;
  double theta = kPi;

  RampOptions integrator{};

  bool operator==(const Scenario&) const;
};

// Collects every problem before throwing; the message lists them one per
// line with line numbers. The Error kind is that of the first problem.
Scenario parse_scenario(const std::string& text);

// Canonical text: only the sections the kind uses, every key, %.17g.
std::string serialize_scenario(const Scenario& s);

// Recovers the scenario from the metadata block of an emitted CSV.
Scenario scenario_from_csv(const std::string& csv_text);

struct RunConfig {
  std::string out_dir = ".";
  int threads = 1;
};

struct RunResult {
  std::vector<std::string> files;
};

RunResult run_scenario(const Scenario& s, const RunConfig& cfg);

}  // namespace hp
