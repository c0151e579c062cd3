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

#include "polyvol/errors.hpp"
#include "polyvol/matroid.hpp"
#include "polyvol/zoo.hpp"

using namespace polyvol;

TEST_CASE("braid labels and rank") {
  auto a = braid(4);
  CHECK(a.size() == 6);
  CHECK(a.rank() == 3);
  CHECK(a.dim() == 3);
  CHECK(a.labels() == std::vector<std::string>{"H_{1,2}", "H_{1,3}", "H_{1,4}",
                                               "H_{2,3}", "H_{2,4}", "H_{3,4}"});
  CHECK_THROWS_AS(braid(1), ValidationError);
  CHECK(family_name(Family::Braid) == "braid");
}

TEST_CASE("type-B labels and rank") {
  auto a = type_b(2);
  CHECK(a.labels() == std::vector<std::string>{"H-_{1,2}", "H+_{1,2}", "H_1", "H_2"});
  CHECK(a.rank() == 2);
  CHECK(type_b(3).size() == 9);
  CHECK(type_b(1).size() == 1);
  CHECK_THROWS_AS(type_b(0), ValidationError);
}

TEST_CASE("graphical arrangements") {
  auto path = graphical(Graph::path(4));
  CHECK(path.size() == 3);
  CHECK(path.rank() == 3);
  CHECK(enumerate_circuits(path).empty());
  auto cyc = graphical(Graph::cycle(4));
  CHECK(cyc.rank() == 3);
  CHECK(enumerate_circuits(cyc).size() == 1);
  // Two components: rank n - k.
  auto two = graphical(Graph(4, {{0, 1}, {2, 3}}));
  CHECK(two.rank() == 2);
  CHECK(essentialize(graphical(Graph::complete(4))).labels().size() == 6);
  CHECK_THROWS_AS(graphical(Graph(3, {})), ValidationError);
  // K3 has the braid(3) matroid.
  auto k3 = graphical(Graph::complete(3));
  CHECK(k3.rank() == 2);
  CHECK(enumerate_circuits(k3) == enumerate_circuits(braid(3)));
  CHECK(enumerate_bases(k3) == enumerate_bases(braid(3)));
}

TEST_CASE("disk radii") {
  std::vector<double> r{1, 2, 3};
  auto b = disk_radii(Family::Braid, r);
  CHECK(b.values == std::vector<double>{3, 4, 5});
  auto t = disk_radii(Family::TypeB, r);
  CHECK(t.values == std::vector<double>{3, 4, 5, 3, 4, 5, 1, 2, 3});
  std::vector<double> bad{1, 0};
  CHECK_THROWS_AS(disk_radii(Family::Braid, bad), ValidationError);
}

TEST_CASE("separated radii") {
  auto a = braid(3);
  HyperplaneOrder o({2, 0, 1});
  auto r = separated_radii(a, o, 10.0);
  CHECK(r.values == std::vector<double>{100, 1000, 10});
  CHECK_THROWS_AS(separated_radii(a, o, 1.0), ValidationError);
}
