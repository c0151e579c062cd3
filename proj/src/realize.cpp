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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include "polyvol/errors.hpp"
#include "polyvol/matroid.hpp"
#include "polyvol/polymer.hpp"
#include "polyvol/polymer_mc.hpp"
#include "polyvol/rng.hpp"

namespace polyvol {

namespace {

// x_i + sign * x_j, or x_i alone when j < 0.
struct Form {
  int i = 0;
  int j = -1;
  int sign = 0;
};

Form family_form(Family family, int n, int hyperplane) {
  const int pairs = n * (n - 1) / 2;
  int idx = hyperplane;
  int sign = -1;
  if (family == Family::TypeB) {
    if (idx >= 2 * pairs) return Form{idx - 2 * pairs, -1, 0};
    if (idx >= pairs) {
      idx -= pairs;
      sign = +1;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (idx-- == 0) return Form{i, j, sign};
    }
  }
  throw IndexError("hyperplane index out of range for family");
}

Point evaluate(const Form& f, const std::vector<Point>& x) {
  return f.j < 0 ? x[f.i] : x[f.i] + static_cast<double>(f.sign) * x[f.j];
}

Arrangement family_arrangement(Family family, int n) {
  return family == Family::Braid ? braid(n) : type_b(n);
}

std::vector<Point> solve_complex(std::vector<std::vector<Point>> m, std::vector<Point> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[p][col])) p = r;
    if (std::abs(m[p][col]) == 0.0) throw ValidationError("singular polymer system");
    std::swap(m[p], m[col]);
    std::swap(rhs[p], rhs[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Point f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Point> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Point acc = rhs[k];
    for (std::size_t c = k + 1; c < n; ++c) acc -= m[k][c] * x[c];
    x[k] = acc / m[k][k];
  }
  return x;
}

}  // namespace

int family_hyperplane_count(Family family, int n) {
  const int pairs = n * (n - 1) / 2;
  return family == Family::Braid ? pairs : 2 * pairs + n;
}

double family_gap(const PolymerConfig& config, int hyperplane) {
  return std::abs(evaluate(family_form(config.family, config.disks(), hyperplane), config.centers));
}

double family_radius(const PolymerConfig& config, int hyperplane) {
  const Form f = family_form(config.family, config.disks(), hyperplane);
  return f.j < 0 ? config.disk_radii[f.i] : config.disk_radii[f.i] + config.disk_radii[f.j];
}

std::optional<int> first_violation(const PolymerConfig& config) {
  const int count = family_hyperplane_count(config.family, config.disks());
  double max_r = 0.0;
  for (int h = 0; h < count; ++h) max_r = std::max(max_r, family_radius(config, h));
  const double tol = kTouchTolerance * max_r;
  for (int h = 0; h < count; ++h) {
    const double slack = family_gap(config, h) - family_radius(config, h);
    if (config.active.contains(h) ? std::abs(slack) > tol : slack < -tol) return h;
  }
  return std::nullopt;
}

PolymerConfig realize_polymer(Family family, SubsetMask s, std::span<const double> angles,
                              std::span<const double> disk_radii) {
  const int n = static_cast<int>(disk_radii.size());
  const Arrangement a = family_arrangement(family, n);
  const Radii tube = polyvol::disk_radii(family, disk_radii);
  if (s.size() != a.rank() || !is_independent(a, s)) {
    throw ValidationError("realize_polymer: active set is not a basis");
  }
  if (static_cast<int>(angles.size()) != a.rank()) {
    throw ValidationError("realize_polymer: expected one angle per basis element");
  }
  const auto basis = s.indices();
  PolymerConfig config{family, std::vector<Point>(n), {disk_radii.begin(), disk_radii.end()}, s};

  if (family == Family::Braid) {
    // Spanning tree: walk outward from disk 1 fixing x_i - x_j = R e^{i phi}.
    std::vector<bool> placed(n, false);
    placed[0] = true;
    std::queue<int> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const Form f = family_form(family, n, basis[k]);
        const Point step = std::polar(tube[basis[k]], angles[k]);
        if (f.i == u && !placed[f.j]) {
          config.centers[f.j] = config.centers[u] - step;
          placed[f.j] = true;
          frontier.push(f.j);
        } else if (f.j == u && !placed[f.i]) {
          config.centers[f.i] = config.centers[u] + step;
          placed[f.i] = true;
          frontier.push(f.i);
        }
      }
    }
  } else {
    std::vector<std::vector<Point>> m(n, std::vector<Point>(n));
    std::vector<Point> rhs(n);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Form f = family_form(family, n, basis[k]);
      m[k][f.i] = 1.0;
      if (f.j >= 0) m[k][f.j] = static_cast<double>(f.sign);
      rhs[k] = std::polar(tube[basis[k]], angles[k]);
    }
    config.centers = solve_complex(std::move(m), std::move(rhs));
  }

  if (auto bad = first_violation(config)) {
    throw NotAccepted("realize_polymer: constraint " + a.label(*bad) +
                      " is violated at these angles");
  }
  return config;
}

PolymerConfig sample_polymer(Family family, std::span<const double> disk_radii,
                             std::optional<SubsetMask> basis, std::uint64_t seed,
                             std::uint64_t max_attempts) {
  const int n = static_cast<int>(disk_radii.size());
  const Arrangement a = family_arrangement(family, n);
  const Radii tube = polyvol::disk_radii(family, disk_radii);
  const auto candidates = basis ? std::vector<SubsetMask>{*basis} : enumerate_bases(a);
  for (auto b : candidates) {
    const auto sampler = build_sampler(a, b);
    const auto kernel = sampler.kernel(tube);
    const auto key = substream_key(seed, b);
    const auto d = static_cast<std::uint64_t>(sampler.dims());
    std::vector<double> phi(d), c(d), s(d);
    for (std::uint64_t i = 0; i < max_attempts; ++i) {
      for (std::uint64_t t = 0; t < d; ++t) {
        phi[t] = 2.0 * std::numbers::pi * to_unit_interval(counter_draw(key, i * d + t));
        c[t] = std::cos(phi[t]);
        s[t] = std::sin(phi[t]);
      }
      if (kernels::accepts(kernel, c, s)) return realize_polymer(family, b, phi, disk_radii);
    }
  }
  throw NotAccepted("no accepted sample within the attempt budget");
}

}  // namespace polyvol
