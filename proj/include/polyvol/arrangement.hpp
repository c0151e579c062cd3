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

#include <cstddef>
#include <string>
#include <vector>

#include "polyvol/linalg.hpp"
#include "polyvol/subset.hpp"

namespace polyvol {

// A linear functional on Q^d; never the zero vector inside an Arrangement.
struct Functional {
  RationalVector coefficients;

  std::size_t dim() const { return coefficients.size(); }
  friend bool operator==(const Functional&, const Functional&) = default;
};

// Central hyperplane arrangement with rational normals. Immutable; the
// constructor rejects zero and pairwise proportional functionals.
class Arrangement {
 public:
  Arrangement() = default;
  Arrangement(int dim, std::vector<Functional> functionals,
              std::vector<std::string> labels = {});

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(functionals_.size()); }
  bool empty() const { return functionals_.empty(); }
  int rank() const { return rank_; }

  const Functional& functional(int i) const;
  const std::string& label(int i) const;
  const std::vector<Functional>& functionals() const { return functionals_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Primitive integer normal of hyperplane i (same ray as functional(i)).
  const IntegerVector& normal(int i) const { return normals_[i]; }

  // Rank of the span of the functionals indexed by s.
  int subset_rank(SubsetMask s) const;

  // Index of the hyperplane with this label, or -1.
  int find_label(const std::string& label) const;

  friend bool operator==(const Arrangement& a, const Arrangement& b) {
    return a.dim_ == b.dim_ && a.functionals_ == b.functionals_ &&
           a.labels_ == b.labels_;
  }

 private:
  int dim_ = 0;
  std::vector<Functional> functionals_;
  std::vector<std::string> labels_;
  std::vector<IntegerVector> normals_;
  int rank_ = 0;
};

// Quotient by the common intersection: ambient dimension becomes rank(a),
// the matroid is unchanged, and labels are kept.
Arrangement essentialize(const Arrangement& a);

// Removes hyperplane i.
Arrangement deletion(const Arrangement& a, int i);

// Restricts to hyperplane i: every other functional is reduced modulo h_i and
// one coordinate is eliminated. Zero results are dropped and proportional
// results are merged, joining their labels with '|'.
Arrangement restriction(const Arrangement& a, int i);

}  // namespace polyvol
