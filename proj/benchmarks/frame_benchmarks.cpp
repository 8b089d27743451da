// Copyright 2026 The qcf Authors
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

#include <cstdint>

#include "qcf/conditional_states.hpp"
#include "qcf/observer_frames.hpp"
#include "qcf/random_objects.hpp"
#include "qcf/verification.hpp"

namespace {

// One representative scenario per dimension pair, fixed seed so numbers are
// comparable across runs.
qcf::Scenario scenario_for(std::size_t d1, std::size_t d2) {
  qcf::BatchConfig config;
  config.d1_choices = {d1};
  config.d2_choices = {d2};
  config.kraus_choices = {2};
  config.outcome_choices = {3};
  return qcf::scenario_from_seed(config, 0x9cf);
}

void BM_lifted_operator(benchmark::State& state) {
  const auto sc = scenario_for(state.range(0), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcf::lifted_operator(sc.rho, sc.channel));
  }
}

void BM_prob_alpha(benchmark::State& state) {
  const auto sc = scenario_for(state.range(0), state.range(1));
  const auto lifted = qcf::lifted_operator(sc.rho, sc.channel);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcf::prob_alpha(sc, lifted));
  }
}

void BM_prob_beta(benchmark::State& state) {
  const auto sc = scenario_for(state.range(0), state.range(1));
  const auto lifted = qcf::lifted_operator(sc.rho, sc.channel);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcf::prob_beta(sc, lifted));
  }
}

void BM_prob_gamma(benchmark::State& state) {
  const auto sc = scenario_for(state.range(0), state.range(1));
  const auto lifted = qcf::lifted_operator(sc.rho, sc.channel);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcf::prob_gamma(sc, lifted));
  }
}

void BM_star_equalities(benchmark::State& state) {
  const auto sc = scenario_for(state.range(0), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qcf::verify_star_equalities(sc.rho, sc.channel, qcf::tol::kStarEquality));
  }
}

void BM_verify_frame_equality(benchmark::State& state) {
  const auto sc = scenario_for(state.range(0), state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcf::verify_frame_equality(sc));
  }
}

void BM_batch_trial(benchmark::State& state) {
  const qcf::BatchConfig config;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcf::run_trial(config, qcf::derive_seed(7, seed++)));
  }
}

void dims_grid(benchmark::internal::Benchmark* b) {
  b->Args({2, 2})->Args({3, 2})->Args({3, 3})->Args({4, 4});
}

}  // namespace

BENCHMARK(BM_lifted_operator)->Apply(dims_grid);
BENCHMARK(BM_prob_alpha)->Apply(dims_grid);
BENCHMARK(BM_prob_beta)->Apply(dims_grid);
BENCHMARK(BM_prob_gamma)->Apply(dims_grid);
BENCHMARK(BM_star_equalities)->Apply(dims_grid);
BENCHMARK(BM_verify_frame_equality)->Apply(dims_grid);
BENCHMARK(BM_batch_trial);

BENCHMARK_MAIN();
