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

#include "hybridpulse/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "hybridpulse/errors.hpp"

namespace hp {

HybridParams HybridParams::valley(double E01, double t1, double Gamma,
                                  double gamma) {
  HybridParams p;
  p.E01 = E01;
  p.t1 = t1;
  p.t2 = valley_ratio() * t1;
  p.Gamma = Gamma;
  p.gamma = gamma;
  return p;
}

void HybridParams::validate() const {
  auto need = [](bool ok, const char* field, const char* rule) {
    if (!ok)
      throw Error(ErrorKind::ValidationError,
                  std::string(field) + " must be " + rule);
  };
  need(std::isfinite(E01) && E01 > 0, "E01", "> 0");
  need(std::isfinite(t1) && t1 > 0, "t1", "> 0");
  need(std::isfinite(t2) && t2 > 0, "t2", "> 0");
  need(std::isfinite(Gamma) && Gamma >= 0, "Gamma", ">= 0");
  need(std::isfinite(gamma) && gamma >= 0, "gamma", ">= 0");
}

Mat3 build_hamiltonian(const HybridParams& p, double eps) {
  Mat3 h = Mat3::Zero();
  h(0, 2) = h(2, 0) = p.t1;
  h(1, 1) = p.E01;
  h(1, 2) = h(2, 1) = -p.t2;
  h(2, 2) = -eps;
  return h;
}

Spectrum spectrum(const HybridParams& p, double eps) {
  Eigen::SelfAdjointEigenSolver<Mat3> es(build_hamiltonian(p, eps));
  return {es.eigenvalues(), es.eigenvectors()};
}

namespace {

struct BranchPairs {
  std::array<int, 2> a{0, 1};
  std::array<int, 2> b{1, 2};
};

// Levels never cross for nonzero couplings, so ascending indices label the
// adiabatic branches globally. Between the crossings the bare order is
// |0>, |E>, |1>; read it off the eigenvector overlaps there.
BranchPairs identify_branches(const HybridParams& p) {
  const Spectrum s = spectrum(p, -0.5 * p.E01);
  auto dominant = [&](int level) {
    int best = 0;
    for (int k = 1; k < 3; ++k)
      if (std::norm(s.vectors(level, k)) > std::norm(s.vectors(level, best)))
        best = k;
    return best;
  };
  const int i0 = dominant(kLevel0), i1 = dominant(kLevel1), iE = dominant(kLevelE);
  BranchPairs bp;
  if (i0 != iE && i1 != iE && i0 != i1) {
    bp.a = {std::min(i0, iE), std::max(i0, iE)};
    bp.b = {std::min(i1, iE), std::max(i1, iE)};
  }
  return bp;
}

double pair_spacing(const HybridParams& p, double eps, std::array<int, 2> ij) {
  const Eigen::Vector3d ev =
      Eigen::SelfAdjointEigenSolver<Mat3>(build_hamiltonian(p, eps),
                                          Eigen::EigenvaluesOnly)
          .eigenvalues();
  return ev(ij[1]) - ev(ij[0]);
}

struct Minimum {
  double x, f;
  bool at_edge;
};

Minimum bracketed_minimum(const HybridParams& p, std::array<int, 2> ij,
                          double lo, double hi) {
  auto f = [&](double e) { return pair_spacing(p, e, ij); };
  std::uintmax_t iters = 500;
  auto [x, fx] = boost::math::tools::brent_find_minima(f, lo, hi, 40, iters);
  const double edge_tol = 1e-6 * (hi - lo);
  return {x, fx, (x - lo) < edge_tol || (hi - x) < edge_tol};
}

}  // namespace

double spacing_A(const HybridParams& p, double eps) {
  return pair_spacing(p, eps, identify_branches(p).a);
}

double spacing_B(const HybridParams& p, double eps) {
  return pair_spacing(p, eps, identify_branches(p).b);
}

Anticrossings find_anticrossings(const HybridParams& p) {
  p.validate();
  const BranchPairs bp = identify_branches(p);
  const double t = std::max(p.t1, p.t2);
  // Second-order level repulsion from the third level shifts the guesses.
  const double guess_A = -p.t2 * p.t2 / p.E01;
  const double guess_B = -p.E01 + p.t1 * p.t1 / p.E01;
  const Minimum a = bracketed_minimum(p, bp.a, guess_A - 4 * t, guess_A + 4 * t);
  const Minimum b = bracketed_minimum(p, bp.b, guess_B - 4 * t, guess_B + 4 * t);

  Anticrossings ac{a.x, b.x, a.f, b.f, false};
  ac.merged = a.at_edge || b.at_edge || ac.eps_A <= ac.eps_B ||
              (ac.gap_A + ac.gap_B) >= (ac.eps_A - ac.eps_B);
  return ac;
}

}  // namespace hp
