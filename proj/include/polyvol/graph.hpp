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

namespace polyvol {

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  // Edges are stored with first < second, in input order. Self-loops,
  // parallel edges and out-of-range vertices raise ValidationError.
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  int component_count() const;

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace polyvol
