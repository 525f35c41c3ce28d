// Copyright 2026 The fpsearch Authors
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

#include <benchmark/benchmark.h>

#include "fpsearch/ancilla.hpp"
#include "fpsearch/fixedpoint.hpp"
#include "fpsearch/operators.hpp"
#include "fpsearch/prior.hpp"

namespace {

using namespace fpsearch;

void BM_WalshHadamard(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  StateVector v = random_state(n, 1);
  for (auto _ : state) {
    v = apply_walsh_hadamard(std::move(v));
    benchmark::DoNotOptimize(v.amps().data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WalshHadamard)->RangeMultiplier(4)->Range(1 << 4, 1 << 20)->Complexity(benchmark::oNLogN);

void BM_DatabaseSearch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto [marked, eps] = make_marked_set(n, 0.2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(database_search(n, marked).failure_probability);
}
BENCHMARK(BM_DatabaseSearch)->RangeMultiplier(8)->Range(1 << 4, 1 << 16);

void BM_RecursiveComposite(benchmark::State& state) {
  const auto depth = static_cast<unsigned>(state.range(0));
  SearchInstance inst(WalshHadamard{10}, 0, make_marked_set(1024, 0.3, 1).first);
  for (auto _ : state) benchmark::DoNotOptimize(recursive_composite(inst, depth).failure_probability);
}
BENCHMARK(BM_RecursiveComposite)->DenseRange(0, 4);

void BM_HaarUnitary(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(haar_random_unitary(dim, seed++).dim());
}
BENCHMARK(BM_HaarUnitary)->Arg(2)->Arg(8)->Arg(64);

void BM_KickbackEquivalence(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const StateVector v = random_state(n, 3);
  const auto [marked, eps] = make_marked_set(n, 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(kickback_equivalence(v, marked));
}
BENCHMARK(BM_KickbackEquivalence)->Arg(16)->Arg(1024);

}  // namespace
BENCHMARK_MAIN();
