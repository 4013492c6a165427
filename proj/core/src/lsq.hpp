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

// Thin wrapper over Eigen's MINPACK port with central differences.

#include <functional>

#include <Eigen/Dense>
#include <unsupported/Eigen/LevenbergMarquardt>
#include <unsupported/Eigen/NumericalDiff>

namespace hp::detail {

using Residual = std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>;

struct LsqResult {
  double norm = 0.0;
  int evaluations = 0;
};

struct LsqFunctor : Eigen::DenseFunctor<double> {
  LsqFunctor(const Residual& f, int n, int m) : DenseFunctor(n, m), fn(&f) {}
  int operator()(const InputType& x, ValueType& r) const {
    (*fn)(x, r);
    return 0;
  }
  const Residual* fn;
};

// Minimises |f(x)|^2 in place. m >= x.size() is required by MINPACK.
inline LsqResult least_squares(const Residual& f, Eigen::VectorXd& x, int m,
                               int max_evaluations, double tol = 1e-15,
                               bool fixed_scaling = false) {
  LsqFunctor base(f, static_cast<int>(x.size()), m);
  Eigen::NumericalDiff<LsqFunctor, Eigen::Central> nd(base);
  Eigen::LevenbergMarquardt<Eigen::NumericalDiff<LsqFunctor, Eigen::Central>> lm(nd);
  lm.setMaxfev(max_evaluations);
  lm.setXtol(tol);
  lm.setFtol(tol);
  if (fixed_scaling) {
    // Trust region measured in the caller's units instead of MINPACK's
    // Jacobian-column scaling.
    lm.setExternalScaling(true);
    lm.diag() = Eigen::VectorXd::Ones(x.size());
  }
  lm.minimize(x);
  Eigen::VectorXd r(m);
  f(x, r);
  return {r.norm(), static_cast<int>(lm.nfev())};
}

}  // namespace hp::detail
