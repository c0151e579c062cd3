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

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyvol/subset.hpp"
#include "polyvol/zoo.hpp"

namespace polyvol {

using Point = std::complex<double>;

// A realized polymer for the braid or type-B family. For type-B each center
// x_k also carries the mirror disk at -x_k.
struct PolymerConfig {
  Family family = Family::Braid;
  std::vector<Point> centers;
  std::vector<double> disk_radii;
  SubsetMask active;

  int disks() const { return static_cast<int>(centers.size()); }
};

inline constexpr double kTouchTolerance = 1e-9;

// Tube radius R and |h(x)| for hyperplane i of the family arrangement with
// n = config.disks() disks.
double family_gap(const PolymerConfig& config, int hyperplane);
double family_radius(const PolymerConfig& config, int hyperplane);
int family_hyperplane_count(Family family, int n);

// Checks the touching and non-overlap invariants with tolerance
// kTouchTolerance * max R. Returns the first violated hyperplane, if any.
std::optional<int> first_violation(const PolymerConfig& config);

// Solves h_{i_k}(x) = R_{i_k} exp(i angles[k]) for the basis s of braid(n) or
// type_b(n), n = disk_radii.size(). Braid bases are spanning trees and are
// propagated from x_1 = 0; type-B bases determine x uniquely.
// Throws ValidationError if s is not a basis, NotAccepted if some other
// hyperplane's constraint is violated.
PolymerConfig realize_polymer(Family family, SubsetMask s, std::span<const double> angles,
                              std::span<const double> disk_radii);

// First accepted sample of the given basis (or of the first basis, in
// enumeration order, that yields one) within max_attempts draws per basis.
PolymerConfig sample_polymer(Family family, std::span<const double> disk_radii,
                             std::optional<SubsetMask> basis, std::uint64_t seed,
                             std::uint64_t max_attempts);

struct SvgOptions {
  int size_px = 480;
  bool labels = true;
  bool touching = true;
};

// circle / line / text elements only; canvas fitted to the disks with a 5%
// margin.
std::string render_svg(const PolymerConfig& config, const SvgOptions& options = {});

}  // namespace polyvol
