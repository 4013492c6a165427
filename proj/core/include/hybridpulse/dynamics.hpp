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

#include <vector>

#include "hybridpulse/schedule.hpp"

namespace hp {

struct DephasingSpec {
  double Gamma = 0.0;  // 1/ns on coherences with |E>
  double gamma = 0.0;  // 1/ns on the |0>-|1> coherence

  static DephasingSpec of(const HybridParams& p) { return {p.Gamma, p.gamma}; }
  void validate() const;
};

// Decay rate of each density-matrix element; zero on the diagonal.
Eigen::MatrixXd rate_matrix(const DephasingSpec& d);
// Independent channels on each factor of a tensor product.
Eigen::MatrixXd joint_rates(const Eigen::MatrixXd& Ra, const Eigen::MatrixXd& Rb);

struct DensityState {
  MatX rho;
  Eigen::Index dim() const { return rho.rows(); }
};

DensityState pure_state(const VecX& psi);
DensityState basis_state(Eigen::Index n, Eigen::Index k);

struct InvariantCheck {
  double trace_error = 0.0;
  double hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;
  bool ok = true;
};

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kHermTol = 1e-10;
inline constexpr double kPosTol = -1e-9;

InvariantCheck check_invariants(const MatX& rho);

// Process-wide tally of every snapshot audited by the integrators. Safe for
// concurrent use.
struct AuditSummary {
  long long snapshots = 0;
  long long violations = 0;
  double worst_trace_error = 0.0;
  double worst_hermiticity_error = 0.0;
  double worst_min_eigenvalue = 0.0;
};
AuditSummary audit_summary();
void audit_reset();
// Records the snapshot and throws Diagnostics if it breaks an invariant.
void audit(const MatX& rho);

// Column-stacked Liouvillian: d vec(rho)/dt = L vec(rho).
MatX liouvillian(const MatX& H, const Eigen::MatrixXd& R);
MatX plateau_superoperator(const MatX& H, const Eigen::MatrixXd& R, double T);
// exp(-i H T / hbar) from the eigendecomposition.
MatX unitary_propagator(const MatX& H, double T);

DensityState evolve_plateau(const DensityState& rho0, const MatX& H,
                            const Eigen::MatrixXd& R, double T);
DensityState evolve_plateau(const DensityState& rho0, const MatX& H,
                            const DephasingSpec& d, double T);

struct RampOptions {
  double dt_max = 1e-3;     // ns
  double dt_min = 1e-7;     // ns
  double tolerance = 1e-8;  // trace distance between dt and dt/2
};

DensityState evolve_ramp(const DensityState& rho0, const HybridParams& p,
                         const PulseSegment& seg, const DephasingSpec& d,
                         const RampOptions& opt = {});

// Fixed-step RK4 on a constant or linearly varying Hamiltonian; exposed for
// cross-checks.
MatX rk4_fixed(const MatX& rho0, const MatX& H0, const MatX& H1,
               const Eigen::MatrixXd& R, double T, long steps);

double trace_distance(const MatX& a, const MatX& b);
double purity(const DensityState& s);

struct Trajectory {
  std::vector<double> times;
  std::vector<DensityState> states;
};

struct RunOptions {
  int samples_per_segment = 0;  // interior samples on plateaus
  RampOptions ramp{};
};

Trajectory run_schedule(const DensityState& rho0, const HybridParams& p,
                        const PulseSchedule& sched, const DephasingSpec& d,
                        const RunOptions& opt = {});

// time,pop0,pop1,popE,purity,re01,im01,re0E,im0E,re1E,im1E
void write_trajectory_csv(std::ostream& os, const Trajectory& tr,
                          const std::vector<std::string>& header);

}  // namespace hp
