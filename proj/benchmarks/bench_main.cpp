// Copyright 2026 The lfising Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>

#include <benchmark/benchmark.h>

#include "lfising/exactdiag.hpp"
#include "lfising/lattice.hpp"

namespace {

using namespace lfising;

StateVector random_state(int n) {
  std::mt19937_64 rng(1234);
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(Eigen::Index{1} << n);
  for (auto& x : v) x = Complex(g(rng), g(rng));
  v.normalize();
  return StateVector(n, v);
}

void BM_BruteForceSre(benchmark::State& state) {
  const auto psi = random_state(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_sre(psi));
}
BENCHMARK(BM_BruteForceSre)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

void BM_DenseGroundState(benchmark::State& state) {
  const auto h = build_fermion_hamiltonian(ChainSpec(static_cast<int>(state.range(0)), 1.0, 0.7), Boundary::Antiperiodic);
  for (auto _ : state) benchmark::DoNotOptimize(ground_state(h).energy);
}
BENCHMARK(BM_DenseGroundState)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_PauliExpectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto psi = random_state(n);
  const auto p = PauliString::from_masks(n, 0x5555 & ((1u << n) - 1), 0x3333 & ((1u << n) - 1));
  for (auto _ : state) benchmark::DoNotOptimize(pauli_expectation(psi, p));
}
BENCHMARK(BM_PauliExpectation)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
