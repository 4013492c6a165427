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

#include "hybridpulse/fidelity.hpp"

#include <cmath>
#include <ostream>

#include "hybridpulse/errors.hpp"
#include "parallel.hpp"

namespace hp {

const std::array<Eigen::Vector2cd, 6>& cardinal_states() {
  static const std::array<Eigen::Vector2cd, 6> s = [] {
    const double r = 1.0 / std::sqrt(2.0);
    const cplx i{0.0, 1.0};
    std::array<Eigen::Vector2cd, 6> v;
    v[0] << 1, 0;
    v[1] << 0, 1;
    v[2] << r, r;
    v[3] << r, -r;
    v[4] << r, i * r;
    v[5] << r, -i * r;
    return v;
  }();
  return s;
}

const std::array<const char*, 6>& cardinal_labels() {
  static const std::array<const char*, 6> l{"+z", "-z", "+x", "-x", "+y", "-y"};
  return l;
}

FidelityReport gate_fidelity(const HybridParams& p, const PulseSchedule& sched,
                             const Mat2& target, const RunOptions& opt) {
  const DephasingSpec d = DephasingSpec::of(p);
  FidelityReport rep;
  double fsum = 0.0, lsum = 0.0;
  for (std::size_t k = 0; k < 6; ++k) {
    VecX psi = VecX::Zero(3);
    psi.head<2>() = cardinal_states()[k];
    VecX want = VecX::Zero(3);
    want.head<2>() = target * cardinal_states()[k];
    const Trajectory tr = run_schedule(pure_state(psi), p, sched, d, opt);
    const MatX& rho = tr.states.back().rho;
    const double f = (want.adjoint() * rho * want)(0, 0).real();
    rep.per_state[k] = f;
    fsum += f;
    lsum += rho(kLevelE, kLevelE).real();
  }
  rep.fidelity = std::clamp(fsum / 6.0, 0.0, 1.0);
  rep.infidelity = 1.0 - rep.fidelity;
  rep.leakage = std::max(0.0, lsum / 6.0);
  return rep;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0) || !(hi > lo) || n < 2)
    throw Error(ErrorKind::InvalidArgument, "log_grid needs 0 < lo < hi and n >= 2");
  std::vector<double> g(static_cast<std::size_t>(n));
  const double a = std::log10(lo), b = std::log10(hi);
  for (int k = 0; k < n; ++k) g[k] = std::pow(10.0, a + (b - a) * k / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

SweepResult hybrid_sweep(double E01, const DephasingSpec& d,
                         const std::vector<double>& t1_grid, const SweepOptions& opt) {
  if (t1_grid.empty())
    throw Error(ErrorKind::InvalidArgument, "t1 grid is empty");
  for (std::size_t k = 1; k < t1_grid.size(); ++k)
    if (!(t1_grid[k] > t1_grid[k - 1]))
      throw Error(ErrorKind::InvalidArgument, "t1 grid must be strictly increasing");
  d.validate();

  SweepResult res;
  res.label = "hybrid E01=" + fmt17(E01);
  res.rows.resize(t1_grid.size());
  const GateSpec xpi = GateSpec::x(kPi);
  const Mat2 target = rotation(xpi);
  detail::parallel_for(t1_grid.size(), opt.threads, [&](std::size_t k) {
    const HybridParams p = HybridParams::valley(E01, t1_grid[k], d.Gamma, d.gamma);
    const RotationSchedule rs =
        schedule_rotation(p, xpi, SequenceOrder::Alternative, opt.schedule);
    const FidelityReport f = gate_fidelity(p, rs.schedule, target);
    SweepRow& row = res.rows[k];
    row.t = t1_grid[k];
    row.infidelity = f.infidelity;
    row.leakage = f.leakage;
    row.merged = rs.anticrossings.merged;
    row.calibrated = rs.refined;
    row.residual = rs.residual;
    row.eps = rs.anticrossings.eps_A;
  });
  return res;
}

void write_sweep_csv(std::ostream& os, const SweepResult& r,
                     const std::vector<std::string>& header) {
  for (const auto& h : header) os << "# " << h << '\n';
  os << "t,infidelity,leakage,merged,calibrated,residual,eps\n";
  for (const auto& row : r.rows)
    os << fmt17(row.t) << ',' << fmt17(row.infidelity) << ',' << fmt17(row.leakage)
       << ',' << (row.merged ? 1 : 0) << ',' << (row.calibrated ? 1 : 0) << ','
       << fmt17(row.residual) << ',' << fmt17(row.eps) << '\n';
}

}  // namespace hp
