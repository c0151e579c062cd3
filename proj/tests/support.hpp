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

// Test-only generators and brute-force oracles. Nothing here calls the
// algorithms under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "polyvol/arrangement.hpp"
#include "polyvol/graph.hpp"
#include "polyvol/matroid.hpp"

namespace polyvol::testing {

// Random arrangement with 1..max_n hyperplanes in dimension 1..max_d, entries
// p/q with |p| <= 3, q in {1, 2}. Zero and proportional rows are redrawn.
inline Arrangement random_arrangement(std::mt19937_64& rng, int max_n, int max_d) {
  std::uniform_int_distribution<int> dim_dist(1, max_d);
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  const int d = dim_dist(rng);
  // Few distinct directions exist when d == 1; keep N small enough.
  const int limit = d == 1 ? 1 : max_n;
  std::uniform_int_distribution<int> n_dist(1, limit);
  const int n = n_dist(rng);
  std::vector<Functional> fs;
  int attempts = 0;
  while (static_cast<int>(fs.size()) < n && attempts++ < 1000) {
    Functional f;
    for (int k = 0; k < d; ++k) f.coefficients.emplace_back(num(rng), den(rng));
    for (auto& c : f.coefficients) c.canonicalize();
    if (is_zero(f.coefficients)) continue;
    const auto dir = primitive_direction(std::span<const Rational>(f.coefficients));
    bool dup = false;
    for (const auto& g : fs) {
      if (primitive_direction(std::span<const Rational>(g.coefficients)) == dir) dup = true;
    }
    if (!dup) fs.push_back(std::move(f));
  }
  return Arrangement(d, std::move(fs));
}

inline Graph random_graph(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> n_dist(1, max_vertices);
  std::bernoulli_distribution coin(0.5);
  const int n = n_dist(rng);
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

// All graphs on n labelled vertices (2^{n choose 2} of them).
inline std::vector<Graph> all_graphs(int n) {
  std::vector<Graph::Edge> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
    std::vector<Graph::Edge> e;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((bits >> k) & 1U) e.push_back(slots[k]);
    out.emplace_back(n, std::move(e));
  }
  return out;
}

// Number of proper colorings of g with t colors, by exhaustive search.
inline long count_colorings(const Graph& g, int t) {
  const int n = g.vertex_count();
  std::vector<int> color(n, 0);
  long count = 0;
  std::function<void(int)> go = [&](int v) {
    if (v == n) {
      ++count;
      return;
    }
    for (int c = 0; c < t; ++c) {
      bool ok = true;
      for (auto [a, b] : g.edges()) {
        if ((a == v && b < v && color[b] == c) || (b == v && a < v && color[a] == c)) ok = false;
      }
      if (ok) {
        color[v] = c;
        go(v + 1);
      }
    }
  };
  go(0);
  return count;
}

// Rank of the raw rational rows by plain elimination with fractions.
inline int rational_rank(const Arrangement& a, SubsetMask s) {
  std::vector<RationalVector> rows;
  for (int i : s.indices()) rows.push_back(a.functional(i).coefficients);
  return static_cast<int>(reduced_row_echelon(rows).size());
}

inline std::vector<HyperplaneOrder> random_orders(std::mt19937_64& rng, int n, int count) {
  std::vector<HyperplaneOrder> out;
  for (int k = 0; k < count; ++k) {
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i;
    std::shuffle(seq.begin(), seq.end(), rng);
    out.emplace_back(std::move(seq));
  }
  return out;
}

}  // namespace polyvol::testing
