// Copyright 2026 The Authors.
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

// Serial reference kernels against their OpenMP variants.
//
//   ./build/bench_kernels --benchmark_filter=accepted
//
// The second benchmark argument is the worker count for the OpenMP variant.

#include <algorithm>

#include <benchmark/benchmark.h>
#include <omp.h>

#include "polyvol/kernels.hpp"
#include "polyvol/matroid.hpp"
#include "polyvol/polymer_mc.hpp"
#include "polyvol/rng.hpp"
#include "polyvol/zoo.hpp"

using namespace polyvol;

namespace {

// braid(5) basis {H12, H23, H34, H45}: six expanded constraints.
kernels::AcceptanceKernel path_kernel() {
  const auto a = braid(5);
  const auto s = SubsetMask::of({0, 4, 7, 9});
  return build_sampler(a, s).kernel(disk_radii(Family::Braid, std::vector<double>(5, 1.0)));
}

void BM_count_accepted_serial(benchmark::State& state) {
  const auto k = path_kernel();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::count_accepted_serial(k, 42, n));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_count_accepted_omp(benchmark::State& state) {
  const auto k = path_kernel();
  const auto n = static_cast<std::uint64_t>(state.range(0));
  kernels::set_thread_count(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::count_accepted_omp(k, 42, n));
  }
  kernels::set_thread_count(1);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_whitney_sums_serial(benchmark::State& state) {
  const auto a = braid(static_cast<int>(state.range(0)));
  const kernels::RankOracle rank = [&](SubsetMask s) { return a.subset_rank(s); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::whitney_sums_serial(a.size(), a.rank(), rank));
  }
}

void BM_whitney_sums_omp(benchmark::State& state) {
  const auto a = braid(static_cast<int>(state.range(0)));
  const kernels::RankOracle rank = [&](SubsetMask s) { return a.subset_rank(s); };
  kernels::set_thread_count(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::whitney_sums_omp(a.size(), a.rank(), rank));
  }
  kernels::set_thread_count(1);
}

void BM_nbc_counts_serial(benchmark::State& state) {
  const auto a = braid(static_cast<int>(state.range(0)));
  const auto broken = broken_circuits(a, HyperplaneOrder::identity(a.size()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::nbc_counts_serial(a.size(), a.rank(), broken));
  }
}

void BM_nbc_counts_omp(benchmark::State& state) {
  const auto a = braid(static_cast<int>(state.range(0)));
  const auto broken = broken_circuits(a, HyperplaneOrder::identity(a.size()));
  kernels::set_thread_count(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::nbc_counts_omp(a.size(), a.rank(), broken));
  }
  kernels::set_thread_count(1);
}

void thread_sweep(benchmark::internal::Benchmark* b, std::int64_t size) {
  const int top = std::max(4, omp_get_max_threads());
  for (int t = 1; t <= top; t *= 2) b->Args({size, t});
}

}  // namespace

BENCHMARK(BM_count_accepted_serial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_accepted_omp)
    ->Apply([](auto* b) { thread_sweep(b, 1 << 20); })
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK(BM_whitney_sums_serial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_whitney_sums_omp)
    ->Apply([](auto* b) { thread_sweep(b, 6); })
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK(BM_nbc_counts_serial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_nbc_counts_omp)
    ->Apply([](auto* b) { thread_sweep(b, 6); })
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
