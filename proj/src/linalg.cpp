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

#include "polyvol/linalg.hpp"

#include <cctype>
#include <cmath>
#include <utility>

#include "polyvol/errors.hpp"

namespace polyvol {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(negative ? Integer(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& value) {
  // mpq get_str already prints "p" when the denominator is one.
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw ValidationError("non-finite value");
  return Rational(value);
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

IntegerVector primitive_direction(std::span<const Rational> v) {
  Integer lcm_den = 1;
  for (const auto& x : v) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  }
  IntegerVector scaled;
  scaled.reserve(v.size());
  for (const auto& x : v) {
    Rational y = x * lcm_den;
    scaled.push_back(y.get_num());
  }
  return primitive_direction(std::span<const Integer>(scaled));
}

IntegerVector primitive_direction(std::span<const Integer> v) {
  Integer g = 0;
  int sign = 0;
  for (const auto& x : v) {
    if (x != 0 && sign == 0) sign = sgn(x);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 0) throw ValidationError("zero vector has no direction");
  if (sign < 0) g = -g;
  IntegerVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    Integer y;
    mpz_divexact(y.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    out.push_back(std::move(y));
  }
  return out;
}

int rank_fraction_free(std::vector<IntegerVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.size();
  const std::size_t m = rows.front().size();
  std::size_t r = 0;
  Integer prev = 1;
  Integer t1, t2;
  for (std::size_t col = 0; col < m && r < n; ++col) {
    std::size_t p = r;
    while (p < n && rows[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(rows[r], rows[p]);
    const Integer& pivot = rows[r][col];
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < m; ++j) {
        t1 = pivot * rows[i][j];
        t2 = rows[i][col] * rows[r][j];
        t1 -= t2;
        mpz_divexact(rows[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][col] = 0;
    }
    prev = pivot;
    ++r;
  }
  return static_cast<int>(r);
}

std::vector<int> reduced_row_echelon(std::vector<RationalVector>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const std::size_t n = rows.size();
  const std::size_t m = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < m && r < n; ++col) {
    std::size_t p = r;
    while (p < n && rows[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(rows[r], rows[p]);
    const Rational inv = 1 / rows[r][col];
    for (std::size_t j = col; j < m; ++j) rows[r][j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = col; j < m; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::optional<RationalVector> express_in_span(
    std::span<const RationalVector> basis, std::span<const Rational> target) {
  const std::size_t s = basis.size();
  const std::size_t d = target.size();
  // Augmented system: columns are the basis vectors, last column the target.
  std::vector<RationalVector> m(d, RationalVector(s + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < s; ++k) m[i][k] = basis[k][i];
    m[i][s] = target[i];
  }
  auto pivots = reduced_row_echelon(m);
  RationalVector coeffs(s);
  for (std::size_t row = 0; row < pivots.size(); ++row) {
    const auto col = static_cast<std::size_t>(pivots[row]);
    if (col == s) return std::nullopt;  // inconsistent
    coeffs[col] = m[row][s];
  }
  if (pivots.size() < s) return std::nullopt;  // basis was dependent
  return coeffs;
}

}  // namespace polyvol
