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
#include <string_view>

#include <json.hpp>

#include "polyvol/arrangement.hpp"
#include "polyvol/graph.hpp"
#include "polyvol/radii.hpp"

namespace polyvol {

// {"dim": d, "functionals": [["p/q", ...], ...], "labels": [...]}
Arrangement parse_arrangement(std::string_view text);
nlohmann::ordered_json arrangement_to_json(const Arrangement& a);
std::string serialize_arrangement(const Arrangement& a);

// {"values": [R_1, ...]}
Radii parse_radii(std::string_view text);
std::string serialize_radii(const Radii& r);

// {"n": n, "edges": [[i, j], ...]} with 1-based vertices.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

std::string read_file(const std::string& path);

}  // namespace polyvol
