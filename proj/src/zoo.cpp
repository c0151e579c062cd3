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

#include "polyvol/zoo.hpp"

#include <cmath>

#include "polyvol/errors.hpp"

namespace polyvol {

namespace {

std::string pair_label(const char* prefix, int i, int j) {
  return std::string(prefix) + "_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
}

Functional coordinate_form(int d, int i, int j, int sign_j) {
  Functional f;
  f.coefficients.assign(d, Rational(0));
  f.coefficients[i] = 1;
  if (j >= 0) f.coefficients[j] = sign_j;
  return f;
}

}  // namespace

std::string family_name(Family f) { return f == Family::Braid ? "braid" : "type-B"; }

Arrangement braid(int n) {
  if (n < 2) throw ValidationError("braid(n) requires n >= 2");
  std::vector<Functional> fs;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      fs.push_back(coordinate_form(n, i, j, -1));
      labels.push_back(pair_label("H", i, j));
    }
  }
  return essentialize(Arrangement(n, std::move(fs), std::move(labels)));
}

Arrangement type_b(int n) {
  if (n < 1) throw ValidationError("type_b(n) requires n >= 1");
  std::vector<Functional> fs;
  std::vector<std::string> labels;
  for (int sign : {-1, +1}) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        fs.push_back(coordinate_form(n, i, j, sign));
        labels.push_back(pair_label(sign < 0 ? "H-" : "H+", i, j));
      }
    }
  }
  for (int k = 0; k < n; ++k) {
    fs.push_back(coordinate_form(n, k, -1, 0));
    labels.push_back("H_" + std::to_string(k + 1));
  }
  return Arrangement(n, std::move(fs), std::move(labels));
}

Arrangement graphical(const Graph& g) {
  if (g.edge_count() == 0) throw ValidationError("graphical arrangement of an edgeless graph");
  std::vector<Functional> fs;
  std::vector<std::string> labels;
  for (auto [i, j] : g.edges()) {
    fs.push_back(coordinate_form(g.vertex_count(), i, j, -1));
    labels.push_back(pair_label("H", i, j));
  }
  return essentialize(Arrangement(g.vertex_count(), std::move(fs), std::move(labels)));
}

Radii disk_radii(Family family, std::span<const double> r) {
  const int n = static_cast<int>(r.size());
  for (double v : r) {
    if (!std::isfinite(v) || v <= 0) throw ValidationError("disk radii must be positive");
  }
  if (family == Family::Braid && n < 2) throw ValidationError("braid needs at least 2 disks");
  if (family == Family::TypeB && n < 1) throw ValidationError("type-B needs at least 1 disk");
  Radii out;
  const int passes = family == Family::Braid ? 1 : 2;
  for (int pass = 0; pass < passes; ++pass) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) out.values.push_back(r[i] + r[j]);
  }
  if (family == Family::TypeB) {
    for (int k = 0; k < n; ++k) out.values.push_back(r[k]);
  }
  return out;
}

Radii separated_radii(const Arrangement& a, const HyperplaneOrder& order, double ratio) {
  if (!(ratio > 1) || !std::isfinite(ratio)) {
    throw ValidationError("separated radii need ratio > 1");
  }
  if (order.size() != a.size()) throw ValidationError("order size mismatch");
  Radii out;
  out.values.resize(a.size());
  for (int i = 0; i < a.size(); ++i) out.values[i] = std::pow(ratio, order.position(i) + 1);
  return out;
}

}  // namespace polyvol
