// Copyright 2026 The lusq Authors
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

#include "lusq/families.hpp"
#include "lusq/frames.hpp"
#include "lusq/squeezing.hpp"

namespace {

void BM_CorrelationTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto psi = lusq::sample_pure_state(n, 11);
  for (auto _ : state) {
    lusq::CorrelationTable table(psi);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_CorrelationTable)->DenseRange(2, 12, 2);

void BM_MinimizeVariance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto psi = lusq::sample_pure_state(n, 13);
  const auto frames = lusq::build_frames(psi);
  const lusq::CorrelationTable table(psi);
  lusq::MinimizerConfig config;
  for (auto _ : state) {
    auto r = lusq::minimize_variance(table, frames, config);
    benchmark::DoNotOptimize(r.var_min);
  }
}
BENCHMARK(BM_MinimizeVariance)->DenseRange(2, 12, 2);

void BM_XiTildeSeparable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto rho = lusq::sample_separable_state(n, 8, 17);
  for (auto _ : state) {
    auto r = lusq::xi_tilde(rho);
    benchmark::DoNotOptimize(r.xi_tilde_1);
  }
}
BENCHMARK(BM_XiTildeSeparable)->DenseRange(2, 6, 1);

}  // namespace

BENCHMARK_MAIN();
