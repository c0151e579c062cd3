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

#include <doctest.h>

#include <random>

#include "polyvol/kernels.hpp"
#include "polyvol/matroid.hpp"
#include "polyvol/rng.hpp"
#include "polyvol/zoo.hpp"
#include "support.hpp"

using namespace polyvol;

namespace {

struct ThreadGuard {
  int saved = kernels::thread_count();
  ~ThreadGuard() { kernels::set_thread_count(saved); }
};

kernels::AcceptanceKernel random_kernel(std::mt19937_64& rng, int dims, int constraints) {
  std::uniform_real_distribution<double> w(-2.0, 2.0);
  std::uniform_real_distribution<double> t(0.1, 2.0);
  kernels::AcceptanceKernel k;
  k.dims = dims;
  for (int j = 0; j < constraints; ++j) {
    for (int d = 0; d < dims; ++d) k.weights.push_back(w(rng));
    k.thresholds.push_back(t(rng));
  }
  return k;
}

}  // namespace

TEST_CASE("counter draws are reproducible") {
  CHECK(counter_draw(5, 0) == counter_draw(5, 0));
  CHECK(counter_draw(5, 0) != counter_draw(5, 1));
  CHECK(counter_draw(5, 0) != counter_draw(6, 0));
  CHECK(to_unit_interval(0) == 0.0);
  CHECK(to_unit_interval(~std::uint64_t{0}) < 1.0);
  CHECK(substream_key(42, SubsetMask(1)) != substream_key(42, SubsetMask(2)));
  CHECK(substream_key(42, SubsetMask(1)) != substream_key(43, SubsetMask(1)));
}

TEST_CASE("whitney sums: serial and OpenMP agree") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = testing::random_arrangement(rng, 10, 4);
    kernels::RankOracle rank = [&](SubsetMask s) { return a.subset_rank(s); };
    auto serial = kernels::whitney_sums_serial(a.size(), a.rank(), rank);
    // Brute force.
    std::vector<std::int64_t> expected(a.rank() + 1, 0);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << a.size()); ++b) {
      SubsetMask s(b);
      expected[testing::rational_rank(a, s)] += s.size() % 2 ? -1 : 1;
    }
    CHECK(serial == expected);
    CHECK(kernels::whitney_sums_omp(a.size(), a.rank(), rank) == serial);
  }
}

TEST_CASE("nbc counts: serial and OpenMP agree") {
  auto a = braid(6);  // 15 hyperplanes
  for (int seed = 0; seed < 3; ++seed) {
    std::mt19937_64 rng(seed);
    auto order = testing::random_orders(rng, a.size(), 1).front();
    auto broken = broken_circuits(a, order);
    auto serial = kernels::nbc_counts_serial(a.size(), a.rank(), broken);
    CHECK(serial == std::vector<std::int64_t>{1, 15, 85, 225, 274, 120});
    CHECK(kernels::nbc_counts_omp(a.size(), a.rank(), broken) == serial);
  }
  std::vector<SubsetMask> none;
  CHECK(kernels::nbc_counts_serial(4, 4, none) == std::vector<std::int64_t>{1, 4, 6, 4, 1});
}

TEST_CASE("count_accepted is identical for any thread count") {
  ThreadGuard guard;
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 6; ++trial) {
    auto k = random_kernel(rng, 1 + trial % 4, 1 + trial % 3);
    const std::uint64_t key = rng();
    const auto serial = kernels::count_accepted_serial(k, key, 20011);
    for (int threads : {1, 2, 3, 8}) {
      kernels::set_thread_count(threads);
      CHECK(kernels::count_accepted_omp(k, key, 20011) == serial);
      CHECK(kernels::count_accepted(k, key, 20011) == serial);
    }
  }
}

TEST_CASE("acceptance is a strict inequality") {
  kernels::AcceptanceKernel k;
  k.dims = 1;
  k.weights = {1.0};
  k.thresholds = {1.0};
  std::vector<double> c{1.0}, s{0.0};
  CHECK_FALSE(kernels::accepts(k, c, s));
  k.thresholds = {0.5};
  CHECK(kernels::accepts(k, c, s));
  kernels::AcceptanceKernel empty;
  empty.dims = 2;
  std::vector<double> c2{1.0, 0.0}, s2{0.0, 1.0};
  CHECK(kernels::accepts(empty, c2, s2));
}
