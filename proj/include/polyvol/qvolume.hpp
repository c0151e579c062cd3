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

#include <utility>
#include <vector>

#include "polyvol/arrangement.hpp"
#include "polyvol/polynomial.hpp"
#include "polyvol/subset.hpp"

namespace polyvol {

// A polynomial in q times the exact factor (2 pi)^two_pi_exponent.
struct QVolume {
  int two_pi_exponent = 0;
  IntPolynomial polynomial;

  Integer coefficient(int degree) const { return polynomial.coefficient(degree); }
  // Value at q = 0: the connected-volume multiplier.
  Integer at_zero() const { return polynomial.coefficient(0); }
  std::string to_string() const;
};

// (-1)^r chi_A(-q) with the factor (2 pi)^r.
QVolume q_volume(const Arrangement& a);

// Volume of the connected stratum union as multiplier * (2 pi)^rank.
struct ConnectedVolume {
  Integer multiplier;
  int rank = 0;
};
ConnectedVolume connected_volume(const Arrangement& a);

// Powers of q and 2 pi attached to the stratum of an independent set s; both
// equal r(A) - r(span_closure(s)) = r(A) - |s|. Throws DependentSetError.
struct StratumExponents {
  int q_exponent = 0;
  int two_pi_exponent = 0;
};
StratumExponents q_volume_stratum_exponents(const Arrangement& a, SubsetMask s);

}  // namespace polyvol
