// Copyright 2026 The spanopt Authors
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

#include "spanopt/generators.hpp"
#include "spanopt/graph.hpp"
#include "spanopt/junction.hpp"
#include "spanopt/lp_builders.hpp"
#include "spanopt/oracle.hpp"
#include "spanopt/preserver.hpp"

namespace spanopt {
namespace {

RandomInstance Instance(int n, Seed seed) {
  RandomInstanceOptions o;
  o.min_vertices = n;
  o.max_vertices = n;
  o.max_edges = 3 * n;
  return RandomFeasibleInstance(seed, o);
}

void BM_AllPairsBfs(benchmark::State& state) {
  const auto inst = Instance(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(AllPairsDistances(inst.graph));
}
BENCHMARK(BM_AllPairsBfs)->Arg(8)->Arg(32)->Arg(128);

void BM_PreserverLp(benchmark::State& state) {
  const auto inst = Instance(static_cast<int>(state.range(0)), 2);
  const FlowLp lp = BuildPreserverLp(inst.graph, inst.exact);
  for (auto _ : state) benchmark::DoNotOptimize(SolveLp(lp.model));
  state.counters["rows"] = lp.model.num_constraints();
  state.counters["cols"] = lp.model.num_variables();
}
BENCHMARK(BM_PreserverLp)->Arg(6)->Arg(10)->Arg(16);

void BM_JunctionTree(benchmark::State& state) {
  const auto inst = Instance(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(JunctionTreeDensity(inst.graph, inst.bounded, 0, 1));
  }
}
BENCHMARK(BM_JunctionTree)->Arg(6)->Arg(10);

void BM_PreserverApprox(benchmark::State& state) {
  const auto inst = Instance(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(PreserverApprox(inst.graph, inst.exact, 0.5, 1));
  }
}
BENCHMARK(BM_PreserverApprox)->Arg(6)->Arg(10);

void BM_Oracle(benchmark::State& state) {
  const auto inst = Instance(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExactMinSolution(inst.graph, inst.exact, 30));
  }
}
BENCHMARK(BM_Oracle)->Arg(6)->Arg(8);

}  // namespace
}  // namespace spanopt

BENCHMARK_MAIN();
