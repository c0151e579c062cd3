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

#include <span>
#include <string>

#include "polyvol/arrangement.hpp"
#include "polyvol/graph.hpp"
#include "polyvol/matroid.hpp"
#include "polyvol/radii.hpp"

namespace polyvol {

enum class Family { Braid, TypeB };

std::string family_name(Family f);

// x_i - x_j for i < j, labels "H_{i,j}" in lexicographic order, essentialized
// to rank n - 1. Requires n >= 2.
Arrangement braid(int n);

// x_i - x_j ("H-_{i,j}"), then x_i + x_j ("H+_{i,j}"), then x_k ("H_k").
// Rank n. Requires n >= 1.
Arrangement type_b(int n);

// x_i - x_j for each edge in input order, essentialized to rank n - k(G).
Arrangement graphical(const Graph& g);

// Tube radii from disk radii r: R_ij = r_i + r_j, and R_k = r_k for the
// coordinate hyperplanes of type B. Aligned with braid(n) / type_b(n).
Radii disk_radii(Family family, std::span<const double> r);

// R at order position p (1-based) equals ratio^p. Requires ratio > 1.
Radii separated_radii(const Arrangement& a, const HyperplaneOrder& order, double ratio);

}  // namespace polyvol
