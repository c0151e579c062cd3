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

#include <cmath>
#include <limits>

#include "polyvol/errors.hpp"
#include "polyvol/linalg.hpp"

using namespace polyvol;

namespace {

IntegerVector ints(std::initializer_list<long> v) {
  IntegerVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

RationalVector rats(std::initializer_list<const char*> v) {
  RationalVector out;
  for (const char* s : v) out.push_back(parse_rational(s));
  return out;
}

}  // namespace

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-1/3") == Rational(-1, 3));
  CHECK(parse_rational("0") == Rational(0));
  // Beyond 64 bits.
  Rational big = parse_rational("123456789012345678901234567890/7");
  CHECK(big * 7 == Rational(mpz_class("123456789012345678901234567890")));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("2x"), ParseError);
  CHECK_THROWS_AS(parse_rational("/3"), ParseError);
}

TEST_CASE("format_rational is canonical") {
  CHECK(format_rational(Rational(4, 6)) == "2/3");
  CHECK(format_rational(Rational(-5)) == "-5");
  CHECK(format_rational(parse_rational(format_rational(Rational(-22, 7)))) == "-22/7");
}

TEST_CASE("rational_from_double is exact") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(-3.0) == Rational(-3));
  CHECK(rational_from_double(0.1).get_d() == 0.1);
  CHECK(rational_from_double(0.1) != Rational(1, 10));
  CHECK_THROWS(rational_from_double(std::numeric_limits<double>::infinity()));
}

TEST_CASE("primitive_direction normalizes sign and content") {
  auto v = rats({"0", "-2/3", "4/3"});
  CHECK(primitive_direction(std::span<const Rational>(v)) == ints({0, 1, -2}));
  auto w = ints({6, -9, 3});
  CHECK(primitive_direction(std::span<const Integer>(w)) == ints({2, -3, 1}));
}

TEST_CASE("rank_fraction_free") {
  CHECK(rank_fraction_free({}) == 0);
  CHECK(rank_fraction_free({ints({0, 0, 0})}) == 0);
  CHECK(rank_fraction_free({ints({1, 2, 3}), ints({2, 4, 6})}) == 1);
  CHECK(rank_fraction_free({ints({1, -1, 0}), ints({0, 1, -1}), ints({1, 0, -1})}) == 2);
  CHECK(rank_fraction_free({ints({1, 0, 0}), ints({0, 0, 1}), ints({0, 1, 0})}) == 3);
  // Needs a row swap at the first pivot.
  CHECK(rank_fraction_free({ints({0, 1}), ints({1, 0})}) == 2);
  // Large entries stay exact.
  IntegerVector a{mpz_class("100000000000000000000"), mpz_class(1)};
  IntegerVector b{mpz_class("100000000000000000001"), mpz_class(1)};
  CHECK(rank_fraction_free({a, b}) == 2);
  CHECK(rank_fraction_free({a, a}) == 1);
}

TEST_CASE("express_in_span") {
  std::vector<RationalVector> basis{rats({"1", "-1", "0"}), rats({"0", "1", "-1"})};
  auto target = rats({"1", "0", "-1"});
  auto c = express_in_span(basis, target);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 1);
  CHECK((*c)[1] == 1);

  auto half = rats({"1/2", "0", "-1/2"});
  auto h = express_in_span(basis, half);
  REQUIRE(h.has_value());
  CHECK((*h)[0] == Rational(1, 2));

  auto outside = rats({"1", "1", "1"});
  CHECK_FALSE(express_in_span(basis, outside).has_value());
}

TEST_CASE("reduced_row_echelon returns pivots") {
  std::vector<RationalVector> rows{rats({"0", "2", "4"}), rats({"0", "1", "2"}),
                                   rats({"3", "0", "1"})};
  auto pivots = reduced_row_echelon(rows);
  CHECK(pivots == std::vector<int>{0, 1});
}
