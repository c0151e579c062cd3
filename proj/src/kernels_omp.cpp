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

#include <omp.h>

#include <cmath>
#include <numbers>

#include "polyvol/kernels.hpp"
#include "polyvol/rng.hpp"

namespace polyvol::kernels {

std::vector<std::int64_t> whitney_sums_omp(int n, int max_rank,
                                           const RankOracle& rank) {
  std::vector<std::int64_t> out(max_rank + 1, 0);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
#pragma omp parallel num_threads(thread_count())
  {
    std::vector<std::int64_t> local(max_rank + 1, 0);
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t bits = 0; bits < total; ++bits) {
      const SubsetMask s(static_cast<std::uint64_t>(bits));
      local[rank(s)] += (s.size() % 2 == 0) ? 1 : -1;
    }
#pragma omp critical
    for (int k = 0; k <= max_rank; ++k) out[k] += local[k];
  }
  return out;
}

std::vector<std::int64_t> nbc_counts_omp(int n, int max_size,
                                         std::span<const SubsetMask> broken) {
  std::vector<std::int64_t> out(max_size + 1, 0);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
#pragma omp parallel num_threads(thread_count())
  {
    std::vector<std::int64_t> local(max_size + 1, 0);
#pragma omp for schedule(static)
    for (std::int64_t bits = 0; bits < total; ++bits) {
      const SubsetMask s(static_cast<std::uint64_t>(bits));
      if (s.size() > max_size) continue;
      bool clean = true;
      for (auto b : broken) {
        if (s.contains(b)) {
          clean = false;
          break;
        }
      }
      if (clean) ++local[s.size()];
    }
#pragma omp critical
    for (int k = 0; k <= max_size; ++k) out[k] += local[k];
  }
  return out;
}

std::uint64_t count_accepted_omp(const AcceptanceKernel& k, std::uint64_t key,
                                 std::uint64_t n) {
  if (k.constraints() == 0) return n;
  const auto d = static_cast<std::uint64_t>(k.dims);
  std::uint64_t accepted = 0;
  const auto total = static_cast<std::int64_t>(n);
#pragma omp parallel num_threads(thread_count()) reduction(+ : accepted)
  {
    std::vector<double> c(d), s(d);
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < total; ++idx) {
      const auto i = static_cast<std::uint64_t>(idx);
      for (std::uint64_t t = 0; t < d; ++t) {
        const double phi =
            2.0 * std::numbers::pi * to_unit_interval(counter_draw(key, i * d + t));
        c[t] = std::cos(phi);
        s[t] = std::sin(phi);
      }
      if (accepts(k, c, s)) ++accepted;
    }
  }
  return accepted;
}

}  // namespace polyvol::kernels
