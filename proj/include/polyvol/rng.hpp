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

#include "polyvol/subset.hpp"

namespace polyvol {

// Counter-based SplitMix64 (Steele, Lea, Flood 2014). The n-th output of a
// SplitMix64 stream with state `key` is mix64(key + (n + 1) * gamma), so any
// draw can be computed from (key, n) alone. Samplers index draws by
// (sample, dimension), which makes results independent of how the sample
// range is split across threads.
inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t counter_draw(std::uint64_t key, std::uint64_t counter) {
  return mix64(key + (counter + 1) * kSplitMixGamma);
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double to_unit_interval(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Key of the substream for stratum `s` under a user seed.
constexpr std::uint64_t substream_key(std::uint64_t seed, SubsetMask s) {
  return mix64(mix64(seed) ^ mix64(s.bits() + kSplitMixGamma));
}

}  // namespace polyvol
