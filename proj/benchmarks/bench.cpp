// Copyright 2026 The qsot developers
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

#include "qsot/interferometer.hpp"
#include "qsot/process_matrix.hpp"
#include "qsot/products.hpp"
#include "qsot/random.hpp"
#include "qsot/tomography.hpp"

using namespace qsot;

static void BM_star_fp(benchmark::State& state) {
  const Index d = state.range(0);
  Rng rng(1);
  const DensityOperator rho = random_density(d, rng);
  const QuantumChannel e = random_channel(d, d, 2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(star_fp(e, rho));
  }
}
BENCHMARK(BM_star_fp)->Arg(2)->Arg(3)->Arg(4)->Arg(8);

static void BM_simulate_temporal(benchmark::State& state) {
  const Index d = state.range(0);
  Rng rng(2);
  const Dynamics dyn(random_density(d, rng), random_channel(d, d, 2, rng));
  const UnitaryMatrix v = random_unitary(d, rng);
  const UnitaryMatrix w = random_unitary(d, rng);
  const ProbeConfig mv = ProbeConfig::max_visibility();
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_temporal(dyn, v, w, mv));
  }
}
BENCHMARK(BM_simulate_temporal)->Arg(2)->Arg(3);

static void BM_reconstruct_two_qubit(benchmark::State& state) {
  Rng rng(3);
  const Qsot q = star_left(random_channel(2, 2, 2, rng),
                           random_density(2, rng));
  const ExactOracle oracle = make_qsot_oracle(q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reconstruct(oracle, {2, 2}));
  }
}
BENCHMARK(BM_reconstruct_two_qubit);

static void BM_ordered_process_matrix(benchmark::State& state) {
  const Index d = state.range(0);
  Rng rng(4);
  const Dynamics dyn(random_density(d, rng), random_channel(d, d, 2, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ordered_process_matrix(dyn));
  }
}
BENCHMARK(BM_ordered_process_matrix)->Arg(2)->Arg(3);

static void BM_binomial_large(benchmark::State& state) {
  Rng rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(binomial(1000000, 0.5, rng));
  }
}
BENCHMARK(BM_binomial_large);

BENCHMARK_MAIN();
