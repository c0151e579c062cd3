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
#include "polyvol/zoo.hpp"
#include "support.hpp"

using namespace polyvol;

TEST_CASE("IntPolynomial basics") {
  IntPolynomial p{-6, 11, -6, 1};
  CHECK(p == IntPolynomial::from_roots({1, 2, 3}));
  CHECK(p.degree() == 3);
  CHECK(p(Integer(4)) == 6);
  CHECK(p.to_string() == "t^3 - 6t^2 + 11t - 6");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{0, -1}.to_string() == "-t");
  CHECK(IntPolynomial{1, 0, 1}.to_string("q") == "q^2 + 1");
  CHECK(p.negate_variable() == IntPolynomial{-6, -11, -6, -1});
  CHECK(IntPolynomial{1}.shift(2) == IntPolynomial::monomial(1, 2));
  CHECK((p - p).is_zero());
  CHECK(IntPolynomial{1, 1} * IntPolynomial{-1, 1} == IntPolynomial{-1, 0, 1});
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
}

TEST_CASE("three-element braid arrangement") {
  auto a = braid(3);
  IntPolynomial expected{2, -3, 1};
  CHECK(char_poly_dc(a) == expected);
  CHECK(char_poly_whitney(a) == expected);
  CHECK(char_poly_nbc(a, HyperplaneOrder::identity(3)) == expected);
}

TEST_CASE("braid and type-B product formulas") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<long> roots;
    for (long k = 1; k < n; ++k) roots.push_back(k);
    CHECK(char_poly_dc(braid(n)) == IntPolynomial::from_roots(roots));
  }
  for (int n = 1; n <= 4; ++n) {
    std::vector<long> roots;
    for (long k = 1; k <= 2 * n - 1; k += 2) roots.push_back(k);
    CHECK(char_poly_dc(type_b(n)) == IntPolynomial::from_roots(roots));
  }
}

TEST_CASE("coordinate arrangement and empty arrangement") {
  std::vector<Functional> fs;
  for (int i = 0; i < 3; ++i) {
    Functional f;
    f.coefficients.assign(3, Rational(0));
    f.coefficients[i] = 1;
    fs.push_back(f);
  }
  Arrangement a(3, fs);
  CHECK(char_poly_dc(a) == IntPolynomial::from_roots({1, 1, 1}));
  Arrangement e(2, {});
  CHECK(char_poly_dc(e) == IntPolynomial{1});
  CHECK(char_poly_whitney(e) == IntPolynomial{1});
}

TEST_CASE("three methods agree on random arrangements") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = testing::random_arrangement(rng, 8, 4);
    auto dc = char_poly_dc(a);
    CHECK(dc.degree() == a.rank());
    CHECK(dc.coefficient(a.rank()) == 1);
    if (!a.empty()) CHECK(dc(Integer(1)) == 0);
    CHECK(char_poly_whitney(a) == dc);
    for (const auto& order : testing::random_orders(rng, a.size(), 3)) {
      CHECK(char_poly_nbc(a, order) == dc);
    }
  }
}

TEST_CASE("chromatic polynomial counts colorings") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : testing::all_graphs(n)) {
      auto chi = chromatic_polynomial(g);
      CHECK(chi.degree() == n);
      for (int t = 0; t <= n + 1; ++t) {
        CHECK(chi(Integer(t)) == testing::count_colorings(g, t));
      }
    }
  }
  // (t - 1)^5 - (t - 1)
  CHECK(chromatic_polynomial(Graph::cycle(5)) ==
        IntPolynomial::from_roots({1, 1, 1, 1, 1}) - IntPolynomial{-1, 1});
  CHECK(chromatic_polynomial(Graph::complete(4)) == IntPolynomial::from_roots({0, 1, 2, 3}));
}

TEST_CASE("graphical identity chi_G = t^k chi_A(G)") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = testing::random_graph(rng, 6);
    if (g.edge_count() == 0) {
      CHECK_THROWS_AS(graphical(g), ValidationError);
      continue;
    }
    auto chi = chromatic_polynomial(g);
    CHECK(chi == char_poly_dc(graphical(g)).shift(g.component_count()));
    CHECK(reduced_chromatic_polynomial(g) == char_poly_dc(graphical(g)));
    for (int t = 0; t <= 3; ++t) CHECK(chi(Integer(t)) == testing::count_colorings(g, t));
  }
}

TEST_CASE("Poincare coefficients are NBC counts") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = testing::random_arrangement(rng, 8, 4);
    auto p = poincare_polynomial(a);
    auto counts = nbc_count_by_size(a, HyperplaneOrder::identity(a.size()));
    for (int k = 0; k <= a.rank(); ++k) CHECK(p.coefficient(k) == counts[k]);
  }
  CHECK(poincare_polynomial(braid(4)) == IntPolynomial{1, 6, 11, 6});
}
