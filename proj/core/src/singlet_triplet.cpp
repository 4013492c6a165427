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

#include <cmath>

#include <boost/math/tools/minima.hpp>

#include "hybridpulse/errors.hpp"
#include "hybridpulse/fidelity.hpp"
#include "parallel.hpp"

namespace hp {

void STParams::validate() const {
  if (!(gamma_ST >= 0) || !(deltaB >= 0) || !(Gamma_charge >= 0) || !std::isfinite(g_factor))
    throw Error(ErrorKind::ValidationError, "ST rates and fields must be >= 0");
  if (charge_sign != 1 && charge_sign != -1)
    throw Error(ErrorKind::ValidationError, "charge_sign must be +1 or -1");
}

STParams STParams::gaas() { return {"GaAs", 0.14, 3.6e-3, 0.44, 0.2, 1}; }
STParams STParams::natural_si() { return {"natural Si", 1.5e-3, 26e-6, 2.0, 0.2, 1}; }
STParams STParams::purified_si() { return {"purified Si", 2e-4, 1.2e-6, 2.0, 0.2, 1}; }

Mat3 st_hamiltonian(const STParams& st, double t, double eps) {
  Mat3 h = Mat3::Zero();
  h(0, 1) = h(1, 0) = 0.5 * st.zeeman_gradient();
  h(0, 2) = h(2, 0) = t;
  h(2, 2) = -st.charge_sign * eps;
  return h;
}

namespace {

struct SingletBranch {
  double energy;
  Eigen::Vector3cd state;
};

// Lower branch of the S(1,1)/S(0,2) block on the (1,1) side.
SingletBranch dressed_singlet(const STParams& st, double t, double eps) {
  const double d = -st.charge_sign * eps;  // S(0,2) energy
  const double root = std::sqrt(d * d + 4.0 * t * t);
  // Far on the (1,1) side the direct difference cancels.
  const double lam = d > 0 ? -2.0 * t * t / (d + root) : 0.5 * (d - root);
  // (H - lam) v = 0 with v = (t, 0, lam) up to norm: -lam v0 + t v2 = 0.
  Eigen::Vector3cd v(t, 0.0, lam);
  if (std::abs(lam) < 1e-300 && t == 0.0) v << 1.0, 0.0, 0.0;
  v /= v.norm();
  if (v(0).real() < 0) v = -v;
  return {lam, v};
}

}  // namespace

double st_exchange(const STParams& st, double t, double eps) {
  return -dressed_singlet(st, t, eps).energy;
}

FidelityReport st_fidelity(const STParams& st, double t, double eps) {
  st.validate();
  const SingletBranch s = dressed_singlet(st, t, eps);
  const double J = -s.energy;
  if (!(J > 0))
    throw Error(ErrorKind::InvalidArgument, "exchange must be positive at the operating point");
  const double T = kPi * kHbar / J;

  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(3, 3);
  R(0, 1) = R(1, 0) = st.gamma_ST;
  R(0, 2) = R(2, 0) = R(1, 2) = R(2, 1) = st.Gamma_charge;
  const MatX S = plateau_superoperator(st_hamiltonian(st, t, eps), R, T);

  Eigen::Matrix<cplx, 3, 2> basis;
  basis.col(0) = s.state;
  basis.col(1) = Eigen::Vector3cd(0.0, 1.0, 0.0);
  Mat2 target = Mat2::Zero();
  target(0, 0) = 1.0;
  target(1, 1) = -1.0;

  FidelityReport rep;
  double fsum = 0.0, lsum = 0.0;
  for (std::size_t k = 0; k < 6; ++k) {
    const VecX psi = basis * cardinal_states()[k];
    const VecX want = basis * (target * cardinal_states()[k]);
    const MatX rho0 = psi * psi.adjoint();
    const VecX out = S * Eigen::Map<const VecX>(rho0.data(), 9);
    MatX rho = Eigen::Map<const MatX>(out.data(), 3, 3);
    rho = 0.5 * (rho + rho.adjoint());
    audit(rho);
    const double f = (want.adjoint() * rho * want)(0, 0).real();
    rep.per_state[k] = f;
    fsum += f;
    const Eigen::Matrix2cd logical = basis.adjoint() * rho * basis;
    lsum += 1.0 - logical.trace().real();
  }
  rep.fidelity = std::clamp(fsum / 6.0, 0.0, 1.0);
  rep.infidelity = 1.0 - rep.fidelity;
  rep.leakage = std::max(0.0, lsum / 6.0);
  return rep;
}

STOptimum st_optimize_eps(const STParams& st, double t) {
  if (!(t > 0)) throw Error(ErrorKind::InvalidArgument, "t must be > 0");
  auto eps_of = [&](double u) { return -st.charge_sign * t * std::pow(10.0, u); };
  auto f = [&](double u) { return st_fidelity(st, t, eps_of(u)).infidelity; };
  std::uintmax_t iters = 200;
  const auto [u, fu] =
      boost::math::tools::brent_find_minima(f, kSTBracketLo, kSTBracketHi, 30, iters);
  if (!std::isfinite(u) || !std::isfinite(fu))
    throw Error(ErrorKind::OptimizationBracketFailed, "no finite optimum in bracket");
  // The objective need not be unimodal; never report worse than an edge.
  double best_u = u, best_f = fu;
  for (double edge : {kSTBracketLo, kSTBracketHi}) {
    const double fe = f(edge);
    if (fe < best_f) {
      best_f = fe;
      best_u = edge;
    }
  }
  return {eps_of(best_u), st_fidelity(st, t, eps_of(best_u))};
}

std::vector<SweepResult> comparison_sweep(const std::vector<STParams>& materials,
                                          const std::vector<double>& t_grid,
                                          int threads) {
  for (std::size_t k = 1; k < t_grid.size(); ++k)
    if (!(t_grid[k] > t_grid[k - 1]))
      throw Error(ErrorKind::InvalidArgument, "t grid must be strictly increasing");
  std::vector<SweepResult> out(materials.size());
  for (std::size_t m = 0; m < materials.size(); ++m) {
    out[m].label = materials[m].material;
    out[m].rows.resize(t_grid.size());
  }
  const std::size_t n = materials.size() * t_grid.size();
  detail::parallel_for(n, threads, [&](std::size_t i) {
    const std::size_t m = i / t_grid.size(), k = i % t_grid.size();
    const STOptimum o = st_optimize_eps(materials[m], t_grid[k]);
    SweepRow& row = out[m].rows[k];
    row.t = t_grid[k];
    row.infidelity = o.report.infidelity;
    row.leakage = o.report.leakage;
    row.eps = o.eps;
  });
  return out;
}

}  // namespace hp
