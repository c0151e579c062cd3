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

#include "polyvol/arrangement.hpp"

#include <map>
#include <utility>

#include "polyvol/errors.hpp"

namespace polyvol {

Arrangement::Arrangement(int dim, std::vector<Functional> functionals,
                         std::vector<std::string> labels)
    : dim_(dim), functionals_(std::move(functionals)), labels_(std::move(labels)) {
  if (dim_ < 0) throw ValidationError("negative ambient dimension");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < functionals_.size(); ++i) {
      labels_.push_back("h" + std::to_string(i + 1));
    }
  }
  if (labels_.size() != functionals_.size()) {
    throw ValidationError("label count " + std::to_string(labels_.size()) +
                          " does not match functional count " +
                          std::to_string(functionals_.size()));
  }
  std::map<IntegerVector, std::size_t> seen;
  normals_.reserve(functionals_.size());
  for (std::size_t i = 0; i < functionals_.size(); ++i) {
    auto& f = functionals_[i];
    if (f.dim() != static_cast<std::size_t>(dim_)) {
      throw ValidationError("functional " + labels_[i] + " has length " +
                            std::to_string(f.dim()) + ", expected " +
                            std::to_string(dim_));
    }
    for (auto& c : f.coefficients) c.canonicalize();
    if (is_zero(f.coefficients)) {
      throw ValidationError("functional " + labels_[i] + " is zero");
    }
    auto n = primitive_direction(std::span<const Rational>(f.coefficients));
    auto [it, inserted] = seen.emplace(n, i);
    if (!inserted) {
      throw DuplicateHyperplaneError("functionals " + labels_[it->second] +
                                     " and " + labels_[i] +
                                     " define the same hyperplane");
    }
    normals_.push_back(std::move(n));
  }
  rank_ = normals_.empty() ? 0 : rank_fraction_free(normals_);
}

const Functional& Arrangement::functional(int i) const {
  if (i < 0 || i >= size()) throw IndexError("hyperplane index out of range");
  return functionals_[i];
}

const std::string& Arrangement::label(int i) const {
  if (i < 0 || i >= size()) throw IndexError("hyperplane index out of range");
  return labels_[i];
}

int Arrangement::subset_rank(SubsetMask s) const {
  std::vector<IntegerVector> rows;
  for (int i : s.indices()) {
    if (i >= size()) throw IndexError("subset index out of range");
    rows.push_back(normals_[i]);
  }
  return rank_fraction_free(std::move(rows));
}

int Arrangement::find_label(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return -1;
}

Arrangement essentialize(const Arrangement& a) {
  if (a.empty()) return Arrangement(0, {}, {});
  // The nonzero RREF rows form a basis of the row space with an identity block
  // on the pivot columns, so the coordinates of h_i in that basis are just its
  // entries at the pivot columns.
  std::vector<RationalVector> rows;
  for (const auto& f : a.functionals()) rows.push_back(f.coefficients);
  const auto pivots = reduced_row_echelon(rows);
  std::vector<Functional> out;
  out.reserve(a.size());
  for (const auto& f : a.functionals()) {
    Functional g;
    for (int p : pivots) g.coefficients.push_back(f.coefficients[p]);
    out.push_back(std::move(g));
  }
  return Arrangement(static_cast<int>(pivots.size()), std::move(out), a.labels());
}

Arrangement deletion(const Arrangement& a, int i) {
  if (i < 0 || i >= a.size()) throw IndexError("delete: index out of range");
  std::vector<Functional> fs;
  std::vector<std::string> labels;
  for (int j = 0; j < a.size(); ++j) {
    if (j == i) continue;
    fs.push_back(a.functional(j));
    labels.push_back(a.label(j));
  }
  return Arrangement(a.dim(), std::move(fs), std::move(labels));
}

Arrangement restriction(const Arrangement& a, int i) {
  if (i < 0 || i >= a.size()) throw IndexError("restrict: index out of range");
  const auto& h = a.functional(i).coefficients;
  std::size_t pivot = 0;
  while (h[pivot] == 0) ++pivot;

  std::vector<Functional> fs;
  std::vector<std::string> labels;
  std::map<IntegerVector, std::size_t> slot;
  for (int j = 0; j < a.size(); ++j) {
    if (j == i) continue;
    const auto& g = a.functional(j).coefficients;
    const Rational factor = g[pivot] / h[pivot];
    Functional reduced;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k == pivot) continue;
      reduced.coefficients.push_back(g[k] - factor * h[k]);
    }
    if (is_zero(reduced.coefficients)) continue;
    auto key = primitive_direction(std::span<const Rational>(reduced.coefficients));
    if (auto it = slot.find(key); it != slot.end()) {
      labels[it->second] += "|" + a.label(j);
      continue;
    }
    slot.emplace(std::move(key), fs.size());
    fs.push_back(std::move(reduced));
    labels.push_back(a.label(j));
  }
  return Arrangement(a.dim() - 1, std::move(fs), std::move(labels));
}

}  // namespace polyvol
