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

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polyvol {

using Integer = mpz_class;
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

// Parses "p", "-p", "p/q". Rejects q == 0 and trailing garbage.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& value);

// Exact conversion of a finite double to a rational.
Rational rational_from_double(double value);

bool is_zero(std::span<const Rational> v);

// Scales v to the unique primitive integer vector on the same ray with the
// first nonzero entry positive. v must be nonzero.
IntegerVector primitive_direction(std::span<const Rational> v);
IntegerVector primitive_direction(std::span<const Integer> v);

// Rank by fraction-free (Bareiss) elimination. Rows may have any count;
// all rows must share the same length.
int rank_fraction_free(std::vector<IntegerVector> rows);

// Solves sum_k c_k * basis[k] == target over Q. Returns nullopt if target is
// not in the span. basis rows must be linearly independent.
std::optional<RationalVector> express_in_span(
    std::span<const RationalVector> basis, std::span<const Rational> target);

// Row-reduced echelon form; returns the pivot column of each nonzero row.
std::vector<int> reduced_row_echelon(std::vector<RationalVector>& rows);

}  // namespace polyvol
