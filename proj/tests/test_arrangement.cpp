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

#include "polyvol/arrangement.hpp"
#include "polyvol/errors.hpp"
#include "polyvol/io.hpp"
#include "polyvol/zoo.hpp"
#include "support.hpp"

using namespace polyvol;

namespace {

Functional fn(std::initializer_list<long> v) {
  Functional f;
  for (long x : v) f.coefficients.emplace_back(x);
  return f;
}

}  // namespace

TEST_CASE("construction validates functionals") {
  Arrangement a(2, {fn({1, 0}), fn({0, 1}), fn({1, 1})});
  CHECK(a.size() == 3);
  CHECK(a.rank() == 2);
  CHECK(a.label(0) == "h1");
  CHECK(a.label(2) == "h3");
  CHECK(a.find_label("h2") == 1);
  CHECK(a.find_label("nope") == -1);

  CHECK_THROWS_AS(Arrangement(2, {fn({0, 0})}), ValidationError);
  CHECK_THROWS_AS(Arrangement(2, {fn({1, 2}), fn({-2, -4})}), DuplicateHyperplaneError);
  CHECK_THROWS_AS(Arrangement(2, {fn({1, 2, 3})}), ValidationError);
  CHECK_THROWS_AS(Arrangement(2, {fn({1, 0})}, {"a", "b"}), ValidationError);
}

TEST_CASE("empty arrangement") {
  Arrangement a(3, {});
  CHECK(a.empty());
  CHECK(a.rank() == 0);
  CHECK(essentialize(a).dim() == 0);
}

TEST_CASE("normals are primitive integer vectors") {
  Functional f;
  f.coefficients = {Rational(-1, 2), Rational(3, 4)};
  Arrangement a(2, {f});
  CHECK(a.normal(0) == IntegerVector{mpz_class(2), mpz_class(-3)});
}

TEST_CASE("essentialize preserves the rank function") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = testing::random_arrangement(rng, 7, 5);
    auto e = essentialize(a);
    CHECK(e.dim() == a.rank());
    CHECK(e.labels() == a.labels());
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << a.size()); ++b) {
      SubsetMask s(b);
      CHECK(e.subset_rank(s) == testing::rational_rank(a, s));
    }
  }
}

TEST_CASE("deletion and restriction") {
  // Braid arrangement in R^3, not essentialized.
  Arrangement a(3, {fn({1, -1, 0}), fn({1, 0, -1}), fn({0, 1, -1})},
                {"a", "b", "c"});
  auto d = deletion(a, 1);
  CHECK(d.size() == 2);
  CHECK(d.labels() == std::vector<std::string>{"a", "c"});
  CHECK(d.rank() == 2);

  // Restricting to x1 = x2 identifies b and c.
  auto r = restriction(a, 0);
  CHECK(r.size() == 1);
  CHECK(r.dim() == 2);
  CHECK(r.label(0) == "b|c");
  CHECK(r.rank() == 1);
}

TEST_CASE("restriction drops the rank by one") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = testing::random_arrangement(rng, 7, 4);
    for (int i = 0; i < a.size(); ++i) {
      auto r = restriction(a, i);
      CHECK(r.rank() == a.rank() - 1);
      auto d = deletion(a, i);
      CHECK(d.size() == a.size() - 1);
      CHECK(d.rank() == a.subset_rank(SubsetMask::full(a.size()).without(i)));
    }
  }
}

TEST_CASE("arrangement JSON round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = testing::random_arrangement(rng, 6, 4);
    auto text = serialize_arrangement(a);
    CHECK(parse_arrangement(text) == a);
  }
  auto b = type_b(3);
  CHECK(parse_arrangement(serialize_arrangement(b)) == b);
}

TEST_CASE("arrangement JSON errors") {
  CHECK_THROWS_AS(parse_arrangement("{"), ParseError);
  CHECK_THROWS_AS(parse_arrangement(R"({"functionals": []})"), ParseError);
  CHECK_THROWS_AS(parse_arrangement(R"({"dim": 2, "functionals": [["1", "x"]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_arrangement(R"({"dim": 2, "functionals": [["0", "0"]]})"),
                  ValidationError);
  CHECK_THROWS_AS(
      parse_arrangement(R"({"dim": 2, "functionals": [["1", "1"], ["2", "2"]]})"),
      DuplicateHyperplaneError);
  auto a = parse_arrangement(R"({"dim": 2, "functionals": [["1/2", "-1"], [0, 3]]})");
  CHECK(a.size() == 2);
  CHECK(a.functional(0).coefficients[0] == Rational(1, 2));
}

TEST_CASE("radii and graph JSON") {
  Radii r{{1.0, 2.5, 1e-3}};
  CHECK(parse_radii(serialize_radii(r)).values == r.values);
  CHECK_THROWS_AS(parse_radii(R"({"values": [1, 0]})"), ValidationError);
  CHECK_THROWS_AS(parse_radii(R"({"values": [1, -2]})"), ValidationError);
  CHECK_THROWS_AS(parse_radii(R"({"vals": [1]})"), ParseError);

  auto g = parse_graph(R"({"n": 3, "edges": [[1, 2], [3, 2]]})");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges() == std::vector<Graph::Edge>{{0, 1}, {1, 2}});
  CHECK(parse_graph(serialize_graph(g)).edges() == g.edges());
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[1, 1]]})"), ValidationError);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[1, 3]]})"), ValidationError);
  CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[1, 2], [2, 1]]})"), ValidationError);
}
