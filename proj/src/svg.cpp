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
#include <cstdio>
#include <sstream>

#include "polyvol/polymer.hpp"

namespace polyvol {

namespace {

struct Disk {
  Point center;
  double radius;
  std::string label;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

std::string render_svg(const PolymerConfig& config, const SvgOptions& options) {
  const int n = config.disks();
  std::vector<Disk> disks;
  for (int k = 0; k < n; ++k) {
    disks.push_back({config.centers[k], config.disk_radii[k], std::to_string(k + 1)});
    if (config.family == Family::TypeB) {
      disks.push_back({-config.centers[k], config.disk_radii[k], "-" + std::to_string(k + 1)});
    }
  }
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  if (disks.empty()) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1\" "
           "height=\"1\" viewBox=\"0 0 1 1\"></svg>\n";
    return out.str();
  }

  double min_x = disks[0].center.real() - disks[0].radius, max_x = min_x;
  double min_y = disks[0].center.imag() - disks[0].radius, max_y = min_y;
  for (const auto& d : disks) {
    min_x = std::min(min_x, d.center.real() - d.radius);
    max_x = std::max(max_x, d.center.real() + d.radius);
    min_y = std::min(min_y, d.center.imag() - d.radius);
    max_y = std::max(max_y, d.center.imag() + d.radius);
  }
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double margin = 0.05 * span;
  const double scale = options.size_px / (span + 2 * margin);
  const double width = (max_x - min_x + 2 * margin) * scale;
  const double height = (max_y - min_y + 2 * margin) * scale;
  auto px = [&](Point p) {
    return Point((p.real() - (min_x - margin)) * scale, ((max_y + margin) - p.imag()) * scale);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " "
      << num(height) << "\">\n";
  for (const auto& d : disks) {
    const Point c = px(d.center);
    out << "  <circle cx=\"" << num(c.real()) << "\" cy=\"" << num(c.imag()) << "\" r=\""
        << num(d.radius * scale) << "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  if (options.touching) {
    auto segment = [&](Point a, Point b) {
      const Point p = px(a), q = px(b);
      out << "  <line x1=\"" << num(p.real()) << "\" y1=\"" << num(p.imag()) << "\" x2=\""
          << num(q.real()) << "\" y2=\"" << num(q.imag())
          << "\" stroke=\"gray\" stroke-dasharray=\"4 2\"/>\n";
    };
    const int pairs = n * (n - 1) / 2;
    for (int h : config.active.indices()) {
      // Mirror the hyperplane numbering of braid(n) / type_b(n).
      int idx = h, sign = -1;
      if (config.family == Family::TypeB && idx >= 2 * pairs) {
        const int k = idx - 2 * pairs;
        segment(config.centers[k], -config.centers[k]);
        continue;
      }
      if (idx >= pairs) {
        idx -= pairs;
        sign = +1;
      }
      int i = 0, j = 1;
      for (int t = 0; t < idx; ++t) {
        if (++j == n) j = ++i + 1;
      }
      const Point xi = config.centers[i], xj = config.centers[j];
      if (config.family == Family::Braid) {
        segment(xi, xj);
      } else if (sign < 0) {
        segment(xi, xj);
        segment(-xi, -xj);
      } else {
        segment(xi, -xj);
        segment(-xi, xj);
      }
    }
  }
  if (options.labels) {
    for (const auto& d : disks) {
      const Point c = px(d.center);
      out << "  <text x=\"" << num(c.real()) << "\" y=\"" << num(c.imag())
          << "\" font-size=\"" << num(std::max(8.0, 0.5 * d.radius * scale))
          << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << d.label
          << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace polyvol
