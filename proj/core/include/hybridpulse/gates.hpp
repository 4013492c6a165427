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

#include "hybridpulse/units.hpp"

namespace hp {

// Rotation by beta about n = (sin eta cos zeta, sin eta sin zeta, cos eta).
struct GateSpec {
  double beta = 0.0;
  double eta = 0.0;
  double zeta = 0.0;

  static GateSpec x(double beta) { return {beta, kPi / 2, 0.0}; }
  void validate() const;
  bool operator==(const GateSpec&) const = default;
};

struct ControlParams {
  double theta = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
};

// Incidental phases picked up by the physical pulses.
struct PhaseRecord {
  double phi_B = 0.0;    // |1> and |E> during B
  double alpha_A = 0.0;  // |1> during A
  double alpha_1 = 0.0;  // spectator during P1
  double alpha_2 = 0.0;  // spectator during P2
};

// Standard:    U = B P2 A P1 B, P plateaus between the anticrossings.
// Alternative: U = P2 B A B P1, P plateaus act on the logical pair directly.
enum class SequenceOrder { Standard, Alternative };

const char* to_string(SequenceOrder o) noexcept;

Mat3 gate_B(double phi_B);
Mat3 gate_A(double theta, double alpha_A);
Mat3 gate_P(double phi, double alpha);

// exp(-i beta/2 n.sigma)
Mat2 rotation(const GateSpec& spec);

ControlParams compile(const GateSpec& spec, const PhaseRecord& phases);

// In the Alternative order the roles of phi_k and alpha_k swap: the P gates
// set the |1> phase to phi_k and leave alpha_k on |E>.
Mat3 compose_sequence(SequenceOrder order, const ControlParams& cp,
                      const PhaseRecord& phases);

struct LogicalBlock {
  Mat2 block;
  double leakage = 0.0;
};

LogicalBlock logical_block(const Mat3& U);

// C_j = Tr[sigma_j R]/2 for j = 0, x, y, z.
std::array<cplx, 4> pauli_decompose(const Mat2& R);
Mat2 pauli_compose(const std::array<cplx, 4>& c);

struct PhaseDistance {
  bool equal = false;
  double distance = 0.0;
  cplx phase{1.0, 0.0};  // c minimising |U - c V|
};

PhaseDistance equal_up_to_global_phase(const MatX& U, const MatX& V,
                                       double tol);

// Closest unitary in Frobenius norm (polar factor).
MatX closest_unitary(const MatX& M);

}  // namespace hp
