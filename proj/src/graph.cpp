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

#include "polyvol/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "polyvol/errors.hpp"
#include "polyvol/radii.hpp"

namespace polyvol {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw ValidationError("negative vertex count");
  std::set<Edge> seen;
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ValidationError("edge endpoint out of range");
    }
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u + 1));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      throw ValidationError("parallel edge " + std::to_string(u + 1) + "-" +
                            std::to_string(v + 1));
    }
    edges_.emplace_back(u, v);
  }
}

int Graph::component_count() const {
  std::vector<int> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n_;
  for (auto [u, v] : edges_) {
    int a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

Graph Graph::complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
  auto e = path(n).edges();
  if (n >= 3) e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

double Radii::max() const {
  return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

void validate_radii(const Radii& r, int expected_size) {
  if (expected_size >= 0 && r.size() != expected_size) {
    throw ValidationError("radii length " + std::to_string(r.size()) +
                          " does not match " + std::to_string(expected_size) +
                          " hyperplanes");
  }
  for (double v : r.values) {
    if (!std::isfinite(v) || v <= 0) {
      throw ValidationError("radii must be finite and strictly positive");
    }
  }
}

}  // namespace polyvol
