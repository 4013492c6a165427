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

#include "hybridpulse/units.hpp"

namespace hp {

// Level order everywhere: 0 -> |0>_L, 1 -> |1>_L, 2 -> |E>.
enum Level : int { kLevel0 = 0, kLevel1 = 1, kLevelE = 2 };

struct HybridParams {
  double E01 = 200.0;    // ueV
  double t1 = 10.0;      // ueV, |0> <-> |E>
  double t2 = 12.247448713915890;  // ueV, |1> <-> |E>
  double Gamma = 0.0;    // 1/ns, coherences with |E>
  double gamma = 0.0;    // 1/ns, logical coherence

  // t2 = sqrt(3/2) t1.
  static HybridParams valley(double E01, double t1, double Gamma = 0.0,
                             double gamma = 0.0);
  static double valley_ratio() { return 1.2247448713915890491; }

  // Throws ValidationError naming the offending field.
  void validate() const;
  bool operator==(const HybridParams&) const = default;
};

Mat3 build_hamiltonian(const HybridParams& p, double eps);

struct Spectrum {
  Eigen::Vector3d values;  // ascending
  Mat3 vectors;            // columns
};

Spectrum spectrum(const HybridParams& p, double eps);

struct Anticrossings {
  double eps_A = 0.0;
  double eps_B = 0.0;
  double gap_A = 0.0;
  double gap_B = 0.0;
  // Set when the two spacing minima are not distinct (the A and B windows
  // overlap); positions are still the best local minima found.
  bool merged = false;
};

Anticrossings find_anticrossings(const HybridParams& p);

// Spacing of the |0>/|E> branch pair and the |E>/|1> branch pair.
double spacing_A(const HybridParams& p, double eps);
double spacing_B(const HybridParams& p, double eps);

}  // namespace hp
