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
#include "hybridpulse/gates.hpp"
#include "oracles.hpp"

using namespace hp;

namespace {

const cplx I{0.0, 1.0};

struct Draw {
  GateSpec spec;
  PhaseRecord ph;
};

Draw random_draw(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Draw d;
  d.spec = {kTwoPi * u(rng), kPi * u(rng), kTwoPi * u(rng)};
  d.ph = {kTwoPi * u(rng), kTwoPi * u(rng), kTwoPi * u(rng), kTwoPi * u(rng)};
  return d;
}

Mat3 product_standard(const ControlParams& cp, const PhaseRecord& ph) {
  // Written against the matrix definitions directly.
  auto B = [&] {
    Mat3 m = Mat3::Zero();
    m(0, 0) = 1.0;
    m(1, 2) = m(2, 1) = -I * std::exp(I * ph.phi_B);
    return m;
  }();
  Mat3 A = Mat3::Zero();
  A(0, 0) = A(2, 2) = std::cos(cp.theta / 2);
  A(0, 2) = A(2, 0) = -I * std::sin(cp.theta / 2);
  A(1, 1) = std::exp(I * ph.alpha_A);
  auto P = [](double phi, double alpha) {
    return Mat3(Eigen::Vector3cd(1.0, std::exp(I * alpha), std::exp(I * phi)).asDiagonal());
  };
  return B * P(cp.phi2, ph.alpha_2) * A * P(cp.phi1, ph.alpha_1) * B;
}

}  // namespace

TEST(GateB, SwapsOneAndE) {
  const Mat3 b = gate_B(0.0);
  EXPECT_EQ(b(0, 0), cplx(1.0));
  EXPECT_EQ(b(1, 2), -I);
  EXPECT_EQ(b(2, 1), -I);
  EXPECT_EQ(b(1, 1), cplx(0.0));
}

TEST(GateB, SquareAndUnitarity) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int k = 0; k < 100; ++k) {
    const double phi = u(rng);
    const Mat3 b = gate_B(phi);
    EXPECT_LT((b.adjoint() * b - Mat3::Identity()).norm(), 1e-14);
    const Mat3 bb = b * b;
    EXPECT_LT(std::abs(bb(0, 0) - 1.0), 1e-15);
    EXPECT_LT(std::abs(bb(1, 1) + std::exp(2.0 * I * phi)), 1e-14);
  }
}

TEST(GateA, Limits) {
  const Mat3 a0 = gate_A(0.0, 0.3);
  EXPECT_LT((a0 - Mat3(Eigen::Vector3cd(1.0, std::exp(0.3 * I), 1.0).asDiagonal())).norm(),
            1e-15);
  const Mat3 api = gate_A(kPi, 0.0);
  EXPECT_LT(std::abs(api(0, 2) + I), 1e-15);
  EXPECT_LT(std::abs(api(2, 0) + I), 1e-15);
  EXPECT_LT(std::abs(api(0, 0)), 1e-15);
  EXPECT_EQ(api(1, 1), cplx(1.0));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  for (int k = 0; k < 50; ++k)
    EXPECT_NEAR(std::abs(gate_A(u(rng), u(rng)).determinant()), 1.0, 1e-14);
}

TEST(GateP, DiagonalPhasesAdd) {
  EXPECT_EQ(gate_P(0.0, 0.0), Mat3::Identity());
  EXPECT_LT((gate_P(kPi, 0.0) - Mat3(Eigen::Vector3cd(1.0, 1.0, -1.0).asDiagonal())).norm(),
            1e-15);
  EXPECT_LT((gate_P(0.4, 1.1) * gate_P(0.7, -0.2) - gate_P(1.1, 0.9)).norm(), 1e-15);
}

TEST(Rotation, MatchesClosedForm) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    const GateSpec s = random_draw(rng).spec;
    EXPECT_LT((rotation(s) - oracle::rotation(s.beta, s.eta, s.zeta)).norm(), 1e-14);
  }
}

TEST(Compile, XPiExample) {
  const ControlParams cp = compile(GateSpec::x(kPi), PhaseRecord{});
  EXPECT_NEAR(cp.theta, kPi, 1e-12);
  EXPECT_NEAR(cp.phi1, kPi / 2, 1e-12);
  EXPECT_NEAR(cp.phi2, kPi / 2, 1e-12);
}

TEST(Compile, IdentityNeedsNoA) {
  EXPECT_EQ(compile({0.0, 0.7, 0.2}, PhaseRecord{}).theta, 0.0);
}

TEST(Compile, LinearInZetaAndPhiB) {
  const GateSpec s{1.1, 0.6, 0.4};
  const ControlParams a = compile(s, PhaseRecord{});
  const ControlParams b = compile({s.beta, s.eta, s.zeta + 0.3}, PhaseRecord{0.2, 0, 0, 0});
  EXPECT_NEAR(wrap_signed(b.phi1 - a.phi1), -0.5, 1e-12);
  EXPECT_NEAR(wrap_signed(b.phi2 - a.phi2), 0.1, 1e-12);
  EXPECT_EQ(a.theta, b.theta);
}

TEST(Compose, MatchesIndependentProduct) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 200; ++k) {
    const Draw d = random_draw(rng);
    const ControlParams cp = compile(d.spec, d.ph);
    const Mat3 U = compose_sequence(SequenceOrder::Standard, cp, d.ph);
    EXPECT_LT((U - product_standard(cp, d.ph)).norm(), 1e-13);
    EXPECT_LT((U.adjoint() * U - Mat3::Identity()).norm(), 1e-13);
  }
}

TEST(Compose, ReproducesTargetRotation) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 1000; ++k) {
    const Draw d = random_draw(rng);
    const Mat3 U = compose_sequence(SequenceOrder::Standard, compile(d.spec, d.ph), d.ph);
    const LogicalBlock lb = logical_block(U);
    EXPECT_LT(lb.leakage, 1e-12);
    EXPECT_LT(oracle::phase_distance(lb.block, oracle::rotation(d.spec.beta, d.spec.eta,
                                                                d.spec.zeta)),
              1e-10);
  }
}

TEST(Compose, AllZeroIsBSquaredOnTheQubit) {
  const Mat3 U = compose_sequence(SequenceOrder::Standard, ControlParams{}, PhaseRecord{});
  const Mat3 bb = gate_B(0.0) * gate_B(0.0);
  EXPECT_LT((U.topLeftCorner<2, 2>() - bb.topLeftCorner<2, 2>()).norm(), 1e-15);
  EXPECT_LT(std::abs(U(0, 0) - 1.0), 1e-15);
  EXPECT_LT(std::abs(U(1, 1) + 1.0), 1e-15);
  EXPECT_LT(((U * U) - U * U).norm(), 1e-15);
}

TEST(Compose, OrdersAgreeAfterSubstitution) {
  std::mt19937_64 rng(19);
  for (int k = 0; k < 500; ++k) {
    const Draw d = random_draw(rng);
    const ControlParams cp = compile(d.spec, d.ph);
    const Mat2 s = logical_block(compose_sequence(SequenceOrder::Standard, cp, d.ph)).block;
    const Mat2 a = logical_block(compose_sequence(SequenceOrder::Alternative, cp, d.ph)).block;
    EXPECT_LT(oracle::phase_distance(s, a), 1e-10);
  }
}

TEST(Compose, SpectatorPhasesStayOutOfTheLogicalBlock) {
  const GateSpec s{1.3, 0.9, 2.0};
  PhaseRecord a{0.4, 0.0, 0.0, 0.0}, b{0.4, 2.2, 1.7, 5.1};
  const ControlParams cp = compile(s, a);
  EXPECT_LT(oracle::phase_distance(
                logical_block(compose_sequence(SequenceOrder::Standard, cp, a)).block,
                logical_block(compose_sequence(SequenceOrder::Standard, cp, b)).block),
            1e-13);
}

TEST(LogicalBlock, Leakage) {
  EXPECT_EQ(logical_block(Mat3::Identity()).leakage, 0.0);
  EXPECT_NEAR(logical_block(gate_A(kPi, 0.0)).leakage, 1.0, 1e-15);
}

TEST(Pauli, DecomposeAndReconstruct) {
  auto c = pauli_decompose(Mat2::Identity());
  EXPECT_EQ(c[0], cplx(1.0));
  EXPECT_EQ(c[1], cplx(0.0));
  Mat2 sx;
  sx << 0, 1, 1, 0;
  c = pauli_decompose(sx);
  EXPECT_EQ(c[0], cplx(0.0));
  EXPECT_EQ(c[1], cplx(1.0));
  for (int k = 0; k < 50; ++k) {
    const Mat2 R = Mat2::Random();
    EXPECT_LT((pauli_compose(pauli_decompose(R)) - R).norm(), 1e-14);
  }
}

TEST(PhaseDistance, ClosedForm) {
  const Mat3 U = gate_A(0.7, 0.2) * gate_B(1.0);
  const PhaseDistance d = equal_up_to_global_phase(U, std::exp(I * (kPi / 7)) * U, 1e-12);
  EXPECT_TRUE(d.equal);
  EXPECT_LT(d.distance, 1e-14);
  Mat3 x = Mat3::Zero();
  x(0, 1) = x(1, 0) = x(2, 2) = 1.0;
  EXPECT_FALSE(equal_up_to_global_phase(Mat3::Identity(), x, 1e-3).equal);
  EXPECT_THROW(equal_up_to_global_phase(MatX::Identity(2, 2), MatX::Identity(3, 3), 1.0),
               Error);
}

TEST(ClosestUnitary, PolarFactor) {
  Mat2 m;
  m << 2.0, 0.0, 0.0, 0.5;
  EXPECT_LT((closest_unitary(m) - MatX::Identity(2, 2)).norm(), 1e-14);
}
