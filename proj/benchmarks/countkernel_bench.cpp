// Copyright 2026 The countkernel Authors
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

#include "countkernel/chain_gadget.hpp"
#include "countkernel/ds_gadget.hpp"
#include "countkernel/fvs_count.hpp"
#include "countkernel/fvs_reduce.hpp"
#include "countkernel/generators.hpp"
#include "countkernel/oracle.hpp"
#include "countkernel/pipeline.hpp"

namespace ck = countkernel;

namespace {

void BM_CountCycle(benchmark::State& state) {
  const ck::MultiGraph g = ck::make_cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ck::count_min_fvs(g, 1));
}
BENCHMARK(BM_CountCycle)->RangeMultiplier(4)->Range(16, 4096);

void BM_CountGrid(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  const ck::MultiGraph g = ck::make_grid(side, side);
  const int k = static_cast<int>(ck::count_min_fvs_pair(g, 64).size);
  for (auto _ : state) benchmark::DoNotOptimize(ck::count_min_fvs(g, k));
  state.counters["k"] = k;
}
BENCHMARK(BM_CountGrid)->DenseRange(3, 5);

void BM_CountRandom(benchmark::State& state) {
  const ck::MultiGraph g = ck::make_random({14, 18, 7, 0.25, 3});
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ck::count_min_fvs(g, k));
}
BENCHMARK(BM_CountRandom)->DenseRange(1, 5);

void BM_Kernelize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ck::MultiGraph g = ck::make_random({n, n + n / 4, 11, 0.1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(ck::kernelize_fvs(g, 6));
}
BENCHMARK(BM_Kernelize)->RangeMultiplier(2)->Range(32, 512);

void BM_ReplaceLongCycle(benchmark::State& state) {
  const ck::MultiGraph g = ck::make_cycle(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ck::replace_all_chains(g, 1, UINT64_MAX));
}
BENCHMARK(BM_ReplaceLongCycle)->RangeMultiplier(8)->Range(64, 32768);

void BM_PipelineRandom(benchmark::State& state) {
  const ck::MultiGraph g = ck::make_random({40, 48, 3, 0.1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(ck::count_kernelize(g, 4, {4096, true}));
}
BENCHMARK(BM_PipelineRandom);

void BM_BruteForceFvs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ck::MultiGraph g = ck::make_random({n, n + 4, 5, 0.2, 2});
  for (auto _ : state) benchmark::DoNotOptimize(ck::brute_min_fvs(g, static_cast<int>(n)));
}
BENCHMARK(BM_BruteForceFvs)->DenseRange(12, 18, 2);

void BM_DiamondGadget(benchmark::State& state) {
  const ck::MultiGraph g = ck::make_diamond_host(static_cast<std::size_t>(state.range(0)));
  const ck::WideDiamond d = ck::find_wide_diamonds(g).front();
  for (auto _ : state) benchmark::DoNotOptimize(ck::replace_wide_diamond(g, d, 2));
}
BENCHMARK(BM_DiamondGadget)->RangeMultiplier(16)->Range(8, 8192);

void BM_MinorSearch(benchmark::State& state) {
  const ck::MultiGraph g = ck::make_grid(3, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ck::has_k5_or_k33_minor(g));
}
BENCHMARK(BM_MinorSearch)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
