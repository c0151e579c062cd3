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

#include <string>
#include <vector>

#include <json.hpp>

#include "polyvol/arrangement.hpp"
#include "polyvol/polymer.hpp"
#include "polyvol/polymer_mc.hpp"
#include "polyvol/polynomial.hpp"
#include "polyvol/qvolume.hpp"

// JSON and text serializers shared by the CLI. JSON keeps full double
// precision; text rounds floats to 6 significant digits.
namespace polyvol::report {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& v);
Json polynomial_json(const IntPolynomial& p, const std::string& variable = "t");
Json qvolume_json(const QVolume& q);
Json subset_json(const Arrangement& a, SubsetMask s);
Json subsets_json(const Arrangement& a, const std::vector<SubsetMask>& sets);
Json estimate_json(const Arrangement& a, SubsetMask s, const MCEstimate& e);
Json mc_qvolume_json(const Arrangement& a, const McQVolume& m);
Json invariance_json(const InvarianceReport& r);
Json tori_json(const Arrangement& a, const ToriReport& r);
Json product_json(const Arrangement& a, const ProductReport& r);
Json polymer_json(const PolymerConfig& c);

std::string format_double(double v);
std::string subset_text(const Arrangement& a, SubsetMask s);
std::string mc_qvolume_text(const Arrangement& a, const McQVolume& m);
std::string invariance_text(const InvarianceReport& r);
std::string tori_text(const Arrangement& a, const ToriReport& r);
std::string product_text(const Arrangement& a, const ProductReport& r);

// Serialized JSON followed by a newline.
std::string dump(const Json& j);

}  // namespace polyvol::report
