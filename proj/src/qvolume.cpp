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

#include "polyvol/qvolume.hpp"

#include "polyvol/charpoly.hpp"
#include "polyvol/errors.hpp"
#include "polyvol/matroid.hpp"

namespace polyvol {

std::string QVolume::to_string() const {
  std::string factor = "(2pi)^" + std::to_string(two_pi_exponent);
  return factor + " * (" + polynomial.to_string("q") + ")";
}

QVolume q_volume(const Arrangement& a) {
  const int r = a.rank();
  IntPolynomial p = char_poly_dc(a).negate_variable();
  if (r % 2 == 1) p = IntPolynomial{} - p;
  return QVolume{r, std::move(p)};
}

ConnectedVolume connected_volume(const Arrangement& a) {
  return ConnectedVolume{q_volume(a).at_zero(), a.rank()};
}

StratumExponents q_volume_stratum_exponents(const Arrangement& a, SubsetMask s) {
  if (!is_independent(a, s)) {
    throw DependentSetError("stratum of a dependent set has volume zero");
  }
  const int e = a.rank() - a.subset_rank(span_closure(a, s));
  return StratumExponents{e, e};
}

}  // namespace polyvol
