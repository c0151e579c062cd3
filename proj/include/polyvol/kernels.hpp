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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "polyvol/subset.hpp"

// Data-parallel inner loops. Every kernel has a serial reference and an
// OpenMP variant with identical results for any thread count; the unit tests
// and bench_kernels compare the two.
namespace polyvol::kernels {

// Worker count used by the library-level dispatchers below. 1 selects the
// serial reference kernels.
void set_thread_count(int threads);
int thread_count();

using RankOracle = std::function<int(SubsetMask)>;

// out[k] = sum over S subset of [n] with rank(S) == k of (-1)^|S|,
// for k in 0..max_rank.
std::vector<std::int64_t> whitney_sums_serial(int n, int max_rank,
                                              const RankOracle& rank);
std::vector<std::int64_t> whitney_sums_omp(int n, int max_rank,
                                           const RankOracle& rank);

// out[s] = number of S subset of [n], |S| = s <= max_size, containing none of
// the masks in `broken`.
std::vector<std::int64_t> nbc_counts_serial(int n, int max_size,
                                            std::span<const SubsetMask> broken);
std::vector<std::int64_t> nbc_counts_omp(int n, int max_size,
                                         std::span<const SubsetMask> broken);

// Flattened acceptance test for one stratum: sample phi uniformly on the
// torus [0, 2pi)^dims and accept iff for every constraint j
//   | sum_k weights[j * dims + k] * exp(i phi_k) | > thresholds[j].
struct AcceptanceKernel {
  int dims = 0;
  std::vector<double> weights;
  std::vector<double> thresholds;

  int constraints() const { return static_cast<int>(thresholds.size()); }
};

// Number of accepted samples among sample indices [0, n) of stream `key`.
std::uint64_t count_accepted_serial(const AcceptanceKernel& k, std::uint64_t key,
                                    std::uint64_t n);
std::uint64_t count_accepted_omp(const AcceptanceKernel& k, std::uint64_t key,
                                 std::uint64_t n);

// Dispatchers honoring thread_count().
std::vector<std::int64_t> whitney_sums(int n, int max_rank, const RankOracle& rank);
std::vector<std::int64_t> nbc_counts(int n, int max_size,
                                     std::span<const SubsetMask> broken);
std::uint64_t count_accepted(const AcceptanceKernel& k, std::uint64_t key,
                             std::uint64_t n);

// Single-sample test shared by both variants.
bool accepts(const AcceptanceKernel& k, std::span<const double> cos_phi,
             std::span<const double> sin_phi);

}  // namespace polyvol::kernels
