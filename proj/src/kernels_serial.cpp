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

#include <atomic>
#include <cmath>
#include <numbers>

#include "polyvol/kernels.hpp"
#include "polyvol/rng.hpp"

namespace polyvol::kernels {

namespace {
std::atomic<int> g_threads{1};
}  // namespace

void set_thread_count(int threads) { g_threads = threads < 1 ? 1 : threads; }
int thread_count() { return g_threads; }

bool accepts(const AcceptanceKernel& k, std::span<const double> cos_phi,
             std::span<const double> sin_phi) {
  const int d = k.dims;
  for (int j = 0; j < k.constraints(); ++j) {
    const double* w = k.weights.data() + static_cast<std::size_t>(j) * d;
    double re = 0.0, im = 0.0;
    for (int t = 0; t < d; ++t) {
      re += w[t] * cos_phi[t];
      im += w[t] * sin_phi[t];
    }
    const double r = k.thresholds[j];
    if (re * re + im * im <= r * r) return false;
  }
  return true;
}

std::vector<std::int64_t> whitney_sums_serial(int n, int max_rank,
                                              const RankOracle& rank) {
  std::vector<std::int64_t> out(max_rank + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const SubsetMask s(bits);
    out[rank(s)] += (s.size() % 2 == 0) ? 1 : -1;
  }
  return out;
}

std::vector<std::int64_t> nbc_counts_serial(int n, int max_size,
                                            std::span<const SubsetMask> broken) {
  std::vector<std::int64_t> out(max_size + 1, 0);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const SubsetMask s(bits);
    if (s.size() > max_size) continue;
    bool clean = true;
    for (auto b : broken) {
      if (s.contains(b)) {
        clean = false;
        break;
      }
    }
    if (clean) ++out[s.size()];
  }
  return out;
}

std::uint64_t count_accepted_serial(const AcceptanceKernel& k, std::uint64_t key,
                                    std::uint64_t n) {
  if (k.constraints() == 0) return n;
  const auto d = static_cast<std::uint64_t>(k.dims);
  std::vector<double> c(d), s(d);
  std::uint64_t accepted = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    for (std::uint64_t t = 0; t < d; ++t) {
      const double phi = 2.0 * std::numbers::pi * to_unit_interval(counter_draw(key, i * d + t));
      c[t] = std::cos(phi);
      s[t] = std::sin(phi);
    }
    if (accepts(k, c, s)) ++accepted;
  }
  return accepted;
}

std::vector<std::int64_t> whitney_sums(int n, int max_rank, const RankOracle& rank) {
  return thread_count() > 1 ? whitney_sums_omp(n, max_rank, rank)
                            : whitney_sums_serial(n, max_rank, rank);
}

std::vector<std::int64_t> nbc_counts(int n, int max_size,
                                     std::span<const SubsetMask> broken) {
  return thread_count() > 1 ? nbc_counts_omp(n, max_size, broken)
                            : nbc_counts_serial(n, max_size, broken);
}

std::uint64_t count_accepted(const AcceptanceKernel& k, std::uint64_t key,
                             std::uint64_t n) {
  return thread_count() > 1 ? count_accepted_omp(k, key, n)
                            : count_accepted_serial(k, key, n);
}

}  // namespace polyvol::kernels
