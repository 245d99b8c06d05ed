// Copyright 2026 The boundsearch Authors
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


#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "boundsearch/anytime.h"
#include "boundsearch/generators.h"
#include "boundsearch/oracle.h"
#include "boundsearch/search.h"
#include "boundsearch/synth.h"

namespace boundsearch {
namespace {

// Random graph with average out-degree ~5, estimators synthesized with seed 0.
Problem RandomProblem(std::uint32_t n) {
  RandomGraphSpec spec;
  spec.n = n;
  spec.edge_prob = std::min(1.0, 10.0 / n);
  spec.cost_min = 1;
  spec.cost_max = 20;
  spec.rng_seed = 42;
  return SynthEstimators(GenerateRandomGraph(spec), 0);
}

Problem GridProblem(std::uint32_t side) {
  GridGraphSpec spec;
  spec.rows = side;
  spec.cols = side;
  spec.cost_min = 1;
  spec.cost_max = 9;
  spec.rng_seed = 42;
  return SynthEstimators(GenerateGridGraph(spec), 0);
}

void ReportCounters(benchmark::State& state, const Metrics& m) {
  state.counters["expansions"] = static_cast<double>(m.expansions);
  state.counters["w_final"] = static_cast<double>(m.final_layer_invocations);
  state.counters["T_w"] = m.estimation_time;
}

void BM_EiUcs(benchmark::State& state) {
  const Problem p = RandomProblem(static_cast<std::uint32_t>(state.range(0)));
  Metrics last;
  for (auto _ : state) {
    EstimationCache cache(p.graph);
    benchmark::DoNotOptimize(EiUcs(p, cache));
    last = cache.SnapshotMetrics();
  }
  ReportCounters(state, last);
}
BENCHMARK(BM_EiUcs)->RangeMultiplier(4)->Range(64, 4096);

void BM_Beauty(benchmark::State& state) {
  const Problem p = RandomProblem(static_cast<std::uint32_t>(state.range(0)));
  Metrics last;
  for (auto _ : state) {
    EstimationCache cache(p.graph);
    benchmark::DoNotOptimize(Beauty(p, cache));
    last = cache.SnapshotMetrics();
  }
  ReportCounters(state, last);
}
BENCHMARK(BM_Beauty)->RangeMultiplier(4)->Range(64, 4096);

void BM_AnytimeBeauty(benchmark::State& state) {
  const Problem p = RandomProblem(static_cast<std::uint32_t>(state.range(0)));
  const int iterations = static_cast<int>(state.range(1));
  Metrics last;
  for (auto _ : state) {
    EstimationCache cache(p.graph);
    benchmark::DoNotOptimize(
        AnytimeBeauty(p, cache, {.max_iterations = iterations}));
    last = cache.SnapshotMetrics();
  }
  ReportCounters(state, last);
}
BENCHMARK(BM_AnytimeBeauty)
    ->ArgsProduct({benchmark::CreateRange(64, 4096, 4), {2, 10}});

void BM_BeautyGrid(benchmark::State& state) {
  const Problem p = GridProblem(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) {
    EstimationCache cache(p.graph);
    benchmark::DoNotOptimize(Beauty(p, cache));
  }
}
BENCHMARK(BM_BeautyGrid)->Arg(10)->Arg(30)->Arg(100);

void BM_OracleLStar(benchmark::State& state) {
  const Problem p = RandomProblem(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(OracleLStar(p));
}
BENCHMARK(BM_OracleLStar)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace
}  // namespace boundsearch

BENCHMARK_MAIN();
