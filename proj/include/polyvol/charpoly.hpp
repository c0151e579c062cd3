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

#include "polyvol/arrangement.hpp"
#include "polyvol/graph.hpp"
#include "polyvol/matroid.hpp"
#include "polyvol/polynomial.hpp"

namespace polyvol {

// Characteristic polynomial of the essentialized arrangement (degree r(A)) by
// deletion-restriction: chi_A = chi_{A - H} - chi_{A / H} for the first H
// whose deletion keeps the rank; (t - 1)^r once every hyperplane is a coloop.
// Subproblems are memoized on a canonical form of the normals.
IntPolynomial char_poly_dc(const Arrangement& a);

// sum over S of (-1)^|S| t^{r(A) - r(S)}.
IntPolynomial char_poly_whitney(const Arrangement& a, int cap = kDefaultEnumerationCap);

// Coefficient of t^{r - i} is (-1)^i times the number of i-element sets free
// of broken circuits.
IntPolynomial char_poly_nbc(const Arrangement& a, const HyperplaneOrder& order,
                            int cap = kDefaultEnumerationCap);

// Chromatic polynomial by edge deletion-contraction.
IntPolynomial chromatic_polynomial(const Graph& g, int cap = kDefaultEnumerationCap);

// chi_G(t) / t^{k(G)}.
IntPolynomial reduced_chromatic_polynomial(const Graph& g,
                                           int cap = kDefaultEnumerationCap);

// (-t)^r chi_A(-1/t); the Betti numbers of the complement.
IntPolynomial poincare_polynomial(const Arrangement& a);

}  // namespace polyvol
