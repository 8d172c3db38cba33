// Copyright 2026 The semlab Authors.
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

#include "semlab/graph.h"
#include "semlab/solver.h"

namespace semlab {
namespace {

SearchConfig SingleThread(bool symmetry) {
  SearchConfig config;
  config.use_obstructions = false;
  config.symmetry_reduction = symmetry;
  config.threads = 1;
  return config;
}

void BM_SearchTwoCycle(benchmark::State& state) {
  const Graph g = make_two_cycle(static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(1)));
  const SearchConfig config = SingleThread(true);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const SearchOutcome outcome = search_sem(g, config);
    nodes = outcome.stats.nodes;
    benchmark::DoNotOptimize(outcome.status);
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SearchTwoCycle)
    ->Args({3, 4})
    ->Args({3, 5})
    ->Args({4, 5})
    ->Args({5, 5})
    ->Unit(benchmark::kMillisecond);

void BM_SearchSymmetry(benchmark::State& state) {
  const Graph g = make_cycle(9);
  const SearchConfig config = SingleThread(state.range(0) != 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_sem(g, config).status);
  }
}
BENCHMARK(BM_SearchSymmetry)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SemSet(benchmark::State& state) {
  const Graph g = make_two_cycle(3, static_cast<int>(state.range(0)));
  const SearchConfig config = SingleThread(true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sem_set(g, config).valences.size());
  }
}
BENCHMARK(BM_SemSet)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const Graph g = make_two_cycle(3, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_sem_set(g).size());
  }
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);

void BM_Interval(benchmark::State& state) {
  const Graph g = make_two_cycle(6, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sem_interval(g).lo);
  }
}
BENCHMARK(BM_Interval);

}  // namespace
}  // namespace semlab

BENCHMARK_MAIN();
