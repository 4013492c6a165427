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

#include <gtest/gtest.h>

#include <random>

#include "hybridpulse/errors.hpp"
#include "hybridpulse/model.hpp"
#include "oracles.hpp"

using namespace hp;

TEST(Hamiltonian, ZeroCouplingIsDiagonal) {
  HybridParams p;
  p.t1 = p.t2 = 0.0;
  const Mat3 h = build_hamiltonian(p, 0.0);
  EXPECT_EQ(h, Mat3(Eigen::Vector3cd(0.0, 200.0, 0.0).asDiagonal()));
}

TEST(Hamiltonian, EntriesMatchSubstitution) {
  const HybridParams p = HybridParams::valley(200.0, 20.0);
  const Mat3 h = build_hamiltonian(p, -100.0);
  EXPECT_DOUBLE_EQ(h(2, 2).real(), 100.0);
  EXPECT_DOUBLE_EQ(h(0, 2).real(), 20.0);
  EXPECT_NEAR(h(1, 2).real(), -std::sqrt(1.5) * 20.0, 1e-12);
  EXPECT_NEAR(h(1, 2).real(), -24.4949, 1e-4);
  EXPECT_EQ(h, oracle::hamiltonian(200.0, 20.0, std::sqrt(1.5) * 20.0, -100.0));
}

TEST(Hamiltonian, HermitianOnRandomDraws) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.1, 300.0), e(-500.0, 500.0);
  for (int k = 0; k < 100; ++k) {
    HybridParams p{u(rng), u(rng), u(rng), 0.0, 0.0};
    const Mat3 h = build_hamiltonian(p, e(rng));
    EXPECT_EQ((h - h.adjoint()).norm(), 0.0);
  }
}

TEST(Params, ValleyRatio) {
  const HybridParams p = HybridParams::valley(200.0, 7.0);
  EXPECT_NEAR(p.t2 / p.t1, std::sqrt(1.5), 1e-12 * std::sqrt(1.5));
}

TEST(Params, ValidationNamesField) {
  HybridParams p;
  p.Gamma = -1.0;
  try {
    p.validate();
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::ValidationError);
    EXPECT_NE(std::string(err.what()).find("Gamma"), std::string::npos);
  }
  p = HybridParams{};
  p.t1 = 0.0;
  EXPECT_THROW(p.validate(), Error);
}

TEST(Spectrum, DecoupledLimitIsExact) {
  HybridParams p;
  p.t1 = p.t2 = 0.0;
  const Spectrum s = spectrum(p, -50.0);
  EXPECT_EQ(s.values(0), 0.0);
  EXPECT_EQ(s.values(1), 50.0);
  EXPECT_EQ(s.values(2), 200.0);
}

TEST(Spectrum, SplittingAtAIsTwoT1) {
  const HybridParams p{200.0, 20.0, 24.4949, 0.0, 0.0};
  const Spectrum s = spectrum(p, 0.0);
  EXPECT_NEAR(s.values(1) - s.values(0), 40.0, 0.03 * 40.0);
}

TEST(Spectrum, OrthonormalAndContinuous) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> E(20.0, 500.0), t(0.1, 30.0), e(-600.0, 200.0);
  for (int k = 0; k < 100; ++k) {
    const HybridParams p = HybridParams::valley(E(rng), t(rng));
    const double eps = e(rng);
    const Spectrum a = spectrum(p, eps);
    EXPECT_LT((a.vectors.adjoint() * a.vectors - Mat3::Identity()).norm(), 1e-12);
    EXPECT_TRUE(std::is_sorted(a.values.data(), a.values.data() + 3));
    const Spectrum b = spectrum(p, eps + 1e-3);
    // Eigenvalues of H(eps) move at most as fast as the (2,2) entry.
    EXPECT_LE((a.values - b.values).cwiseAbs().maxCoeff(), 1e-3 * (1 + 1e-9));
  }
}

TEST(Anticrossings, DecoupledLimit) {
  const HybridParams p = HybridParams::valley(200.0, 1e-4);
  const Anticrossings ac = find_anticrossings(p);
  EXPECT_NEAR(ac.eps_A, 0.0, 1e-6);
  EXPECT_NEAR(ac.eps_B, -200.0, 1e-6);
  EXPECT_FALSE(ac.merged);
}

TEST(Anticrossings, AgreesWithDenseScan) {
  for (double t1 : {2.0, 10.0, 20.0}) {
    const HybridParams p = HybridParams::valley(200.0, t1);
    const Anticrossings ac = find_anticrossings(p);
    const auto A = oracle::scan_spacing(p.E01, p.t1, p.t2, -4 * p.t2, 4 * p.t2, 0.01, 0);
    const auto B =
        oracle::scan_spacing(p.E01, p.t1, p.t2, -p.E01 - 4 * p.t2, -p.E01 + 4 * p.t2, 0.01, 1);
    EXPECT_NEAR(ac.eps_A, A.eps, 0.02) << "t1 " << t1;
    EXPECT_NEAR(ac.eps_B, B.eps, 0.02) << "t1 " << t1;
    EXPECT_NEAR(ac.gap_A, A.gap, 1e-3);
    EXPECT_NEAR(ac.gap_B, B.gap, 1e-3);
    EXPECT_LT(ac.eps_B, ac.eps_A);
    if (t1 <= 20.0) EXPECT_NEAR(ac.gap_A, 2 * t1, 0.05 * 2 * t1);
  }
}

TEST(Anticrossings, ShiftedByThreeLevelRepulsion) {
  const Anticrossings ac = find_anticrossings(HybridParams::valley(200.0, 20.0));
  EXPECT_NEAR(ac.eps_A, 0.0, 5.0);
  EXPECT_NEAR(ac.eps_B, -200.0, 5.0);
  EXPECT_NE(ac.eps_A, 0.0);
}

TEST(Anticrossings, MergedRegimeIsFlaggedNotThrown) {
  const Anticrossings ac = find_anticrossings(HybridParams::valley(50.0, 60.0));
  EXPECT_TRUE(ac.merged);
  EXPECT_GT(ac.gap_A, 0.0);
  EXPECT_GT(ac.gap_B, 0.0);
}
