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

#include "polyvol/charpoly.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polyvol/errors.hpp"
#include "polyvol/kernels.hpp"

namespace polyvol {

namespace {

using Rows = std::vector<IntegerVector>;

IntPolynomial t_minus_one_power(int r) {
  IntPolynomial p{1};
  for (int k = 0; k < r; ++k) p = p * IntPolynomial{-1, 1};
  return p;
}

// Reduce every other row modulo rows[i] and drop the pivot coordinate.
Rows restrict_rows(const Rows& rows, std::size_t i) {
  const auto& h = rows[i];
  std::size_t p = 0;
  while (h[p] == 0) ++p;
  Rows out;
  std::set<IntegerVector> seen;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (j == i) continue;
    const auto& g = rows[j];
    IntegerVector reduced;
    reduced.reserve(g.size() - 1);
    bool zero = true;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k == p) continue;
      Integer v = h[p] * g[k] - g[p] * h[k];
      if (v != 0) zero = false;
      reduced.push_back(std::move(v));
    }
    if (zero) continue;
    auto prim = primitive_direction(std::span<const Integer>(reduced));
    if (seen.insert(prim).second) out.push_back(std::move(prim));
  }
  return out;
}

class DeletionRestriction {
 public:
  IntPolynomial operator()(const Rows& rows) {
    if (rows.empty()) return IntPolynomial{1};
    Rows key = rows;
    std::sort(key.begin(), key.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = rank_fraction_free(rows);
    IntPolynomial result;
    bool split = false;
    for (std::size_t i = 0; i < rows.size() && !split; ++i) {
      Rows others;
      others.reserve(rows.size() - 1);
      for (std::size_t j = 0; j < rows.size(); ++j)
        if (j != i) others.push_back(rows[j]);
      if (rank_fraction_free(others) == r) {
        result = (*this)(others) - (*this)(restrict_rows(rows, i));
        split = true;
      }
    }
    if (!split) result = t_minus_one_power(r);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::map<Rows, IntPolynomial> memo_;
};

using EdgeList = std::vector<Graph::Edge>;

class ChromaticDC {
 public:
  IntPolynomial operator()(int n, EdgeList edges) {
    std::sort(edges.begin(), edges.end());
    if (edges.empty()) return IntPolynomial::monomial(1, n);
    auto key = std::make_pair(n, edges);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto [u, v] = edges.back();
    EdgeList deleted(edges.begin(), edges.end() - 1);
    // Contract v into u, renumbering vertices above v down by one.
    std::set<Graph::Edge> merged;
    for (auto [a, b] : deleted) {
      auto relabel = [&](int x) { return x == v ? u : (x > v ? x - 1 : x); };
      int x = relabel(a), y = relabel(b);
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      merged.insert({x, y});
    }
    IntPolynomial result =
        (*this)(n, deleted) - (*this)(n - 1, EdgeList(merged.begin(), merged.end()));
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::map<std::pair<int, EdgeList>, IntPolynomial> memo_;
};

}  // namespace

IntPolynomial char_poly_dc(const Arrangement& a) {
  Rows rows;
  rows.reserve(a.size());
  for (int i = 0; i < a.size(); ++i) rows.push_back(a.normal(i));
  return DeletionRestriction{}(rows);
}

IntPolynomial char_poly_whitney(const Arrangement& a, int cap) {
  check_cap(a, cap, "char_poly_whitney");
  const int r = a.rank();
  const auto sums = kernels::whitney_sums(
      a.size(), r, [&a](SubsetMask s) { return a.subset_rank(s); });
  std::vector<Integer> c(r + 1);
  for (int k = 0; k <= r; ++k) c[r - k] = sums[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial char_poly_nbc(const Arrangement& a, const HyperplaneOrder& order, int cap) {
  const auto counts = nbc_count_by_size(a, order, cap);
  const int r = a.rank();
  std::vector<Integer> c(r + 1);
  for (int i = 0; i <= r; ++i) c[r - i] = (i % 2 == 0) ? Integer(counts[i]) : Integer(-counts[i]);
  return IntPolynomial(std::move(c));
}

IntPolynomial chromatic_polynomial(const Graph& g, int cap) {
  if (g.vertex_count() > cap) {
    throw CapExceeded("chromatic_polynomial: " + std::to_string(g.vertex_count()) +
                      " vertices exceeds the cap of " + std::to_string(cap));
  }
  return ChromaticDC{}(g.vertex_count(), g.edges());
}

IntPolynomial reduced_chromatic_polynomial(const Graph& g, int cap) {
  const auto chi = chromatic_polynomial(g, cap);
  const int k = g.component_count();
  const auto& c = chi.coefficients();
  return IntPolynomial(std::vector<Integer>(c.begin() + std::min<std::size_t>(k, c.size()), c.end()));
}

IntPolynomial poincare_polynomial(const Arrangement& a) {
  const auto chi = char_poly_dc(a);
  const int r = a.rank();
  std::vector<Integer> c(r + 1);
  for (int k = 0; k <= r; ++k) {
    const Integer v = chi.coefficient(r - k);
    c[k] = (k % 2 == 0) ? v : Integer(-v);
  }
  return IntPolynomial(std::move(c));
}

}  // namespace polyvol
