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

#include <doctest.h>

#include <random>

#include "polyvol/charpoly.hpp"
#include "polyvol/errors.hpp"
#include "polyvol/qvolume.hpp"
#include "polyvol/zoo.hpp"
#include "support.hpp"

using namespace polyvol;

TEST_CASE("q-volume of small families") {
  auto q3 = q_volume(braid(3));
  CHECK(q3.two_pi_exponent == 2);
  CHECK(q3.polynomial == IntPolynomial{2, 3, 1});
  CHECK(q3.to_string() == "(2pi)^2 * (q^2 + 3q + 2)");

  auto b2 = q_volume(type_b(2));
  CHECK(b2.polynomial == IntPolynomial{3, 4, 1});

  auto c = connected_volume(braid(4));
  CHECK(c.multiplier == 6);
  CHECK(c.rank == 3);
}

TEST_CASE("q-volume sums NBC counts") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = testing::random_arrangement(rng, 8, 4);
    auto q = q_volume(a);
    auto counts = nbc_count_by_size(a, HyperplaneOrder::identity(a.size()));
    const int r = a.rank();
    CHECK(q.two_pi_exponent == r);
    CHECK(q.polynomial.coefficient(r) == 1);
    // coefficient of q^{r - s} counts NBC sets of size s
    for (int s = 0; s <= r; ++s) CHECK(q.coefficient(r - s) == counts[s]);
    CHECK(q.at_zero() == connected_volume(a).multiplier);
    // Independent of the order used for NBC.
    auto expected = char_poly_dc(a).negate_variable();
    if (r % 2 == 1) expected = IntPolynomial{} - expected;
    CHECK(q.polynomial == expected);
  }
}

TEST_CASE("stratum exponents") {
  auto a = braid(4);
  auto e = q_volume_stratum_exponents(a, SubsetMask::of({0, 5}));
  CHECK(e.q_exponent == 1);
  CHECK(e.two_pi_exponent == 1);
  auto full = q_volume_stratum_exponents(a, SubsetMask::of({0, 1, 2}));
  CHECK(full.q_exponent == 0);
  CHECK(q_volume_stratum_exponents(a, SubsetMask()).q_exponent == 3);
  // H12, H13, H23 form a circuit.
  CHECK_THROWS_AS(q_volume_stratum_exponents(a, SubsetMask::of({0, 1, 3})),
                  DependentSetError);
}
