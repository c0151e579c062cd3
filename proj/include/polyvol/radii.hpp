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

#include <vector>

namespace polyvol {

// Per-hyperplane tube radii R_i, aligned with the arrangement order.
struct Radii {
  std::vector<double> values;

  int size() const { return static_cast<int>(values.size()); }
  double operator[](int i) const { return values[i]; }
  double max() const;
};

// Throws ValidationError unless every value is finite and > 0 and, when
// expected_size >= 0, the length matches.
void validate_radii(const Radii& r, int expected_size = -1);

}  // namespace polyvol
