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

#include <benchmark/benchmark.h>

#include "hybridpulse/fidelity.hpp"
#include "hybridpulse/two_qubit.hpp"

using namespace hp;

static void BM_PlateauSuperoperator(benchmark::State& state) {
  const MatX H = build_hamiltonian(HybridParams::valley(200.0, 10.0), -30.0);
  const Eigen::MatrixXd R = rate_matrix({0.2, 1e-3});
  for (auto _ : state) benchmark::DoNotOptimize(plateau_superoperator(H, R, 0.1));
}
BENCHMARK(BM_PlateauSuperoperator);

static void BM_JointSuperoperator(benchmark::State& state) {
  const TwoQubitParams p;
  const MatX H = build_joint_hamiltonian(p, -300.0, 0.0);
  const Eigen::MatrixXd r = rate_matrix({0.2, 1e-3});
  const Eigen::MatrixXd R = joint_rates(r, r);
  for (auto _ : state) benchmark::DoNotOptimize(plateau_superoperator(H, R, 0.1));
}
BENCHMARK(BM_JointSuperoperator)->Unit(benchmark::kMillisecond);

static void BM_CalibrateB(benchmark::State& state) {
  const HybridParams p = HybridParams::valley(200.0, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(calibrate_gate(p, GateTarget::B()));
}
BENCHMARK(BM_CalibrateB)->Arg(2)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

static void BM_ScheduleRotation(benchmark::State& state) {
  const HybridParams p = HybridParams::valley(200.0, static_cast<double>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(schedule_rotation(p, GateSpec::x(kPi), SequenceOrder::Alternative));
}
BENCHMARK(BM_ScheduleRotation)->Arg(2)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_HybridSweep(benchmark::State& state) {
  const auto grid = log_grid(1.0, 100.0, 8);
  for (auto _ : state)
    benchmark::DoNotOptimize(hybrid_sweep(200.0, {0.2, 1e-3}, grid));
}
BENCHMARK(BM_HybridSweep)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_STOptimum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(st_optimize_eps(STParams::natural_si(), 10.0));
}
BENCHMARK(BM_STOptimum)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
