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

#include "polyvol/io.hpp"

#include <fstream>
#include <sstream>

#include "polyvol/errors.hpp"

namespace polyvol {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json parse_document(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Rational rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(v.dump());
  throw ParseError("rational must be a string \"p/q\" or an integer, got " + v.dump());
}

}  // namespace

Arrangement parse_arrangement(std::string_view text) {
  const json doc = parse_document(text, "arrangement");
  if (!doc.is_object()) throw ParseError("arrangement must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw ParseError("arrangement: missing integer field \"dim\"");
  }
  if (!doc.contains("functionals") || !doc["functionals"].is_array()) {
    throw ParseError("arrangement: missing array field \"functionals\"");
  }
  const int dim = doc["dim"].get<int>();
  std::vector<Functional> fs;
  for (const auto& row : doc["functionals"]) {
    if (!row.is_array()) throw ParseError("arrangement: functional must be an array");
    Functional f;
    for (const auto& entry : row) f.coefficients.push_back(rational_from_json(entry));
    fs.push_back(std::move(f));
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw ParseError("arrangement: labels must be an array");
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw ParseError("arrangement: labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return Arrangement(dim, std::move(fs), std::move(labels));
}

ordered_json arrangement_to_json(const Arrangement& a) {
  ordered_json doc;
  doc["dim"] = a.dim();
  auto functionals = ordered_json::array();
  for (const auto& f : a.functionals()) {
    auto row = ordered_json::array();
    for (const auto& c : f.coefficients) row.push_back(format_rational(c));
    functionals.push_back(std::move(row));
  }
  doc["functionals"] = std::move(functionals);
  doc["labels"] = a.labels();
  return doc;
}

std::string serialize_arrangement(const Arrangement& a) {
  return arrangement_to_json(a).dump();
}

Radii parse_radii(std::string_view text) {
  const json doc = parse_document(text, "radii");
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_array()) {
    throw ParseError("radii: expected {\"values\": [...]}");
  }
  Radii r;
  for (const auto& v : doc["values"]) {
    if (!v.is_number()) throw ParseError("radii: values must be numbers");
    r.values.push_back(v.get<double>());
  }
  validate_radii(r);
  return r;
}

std::string serialize_radii(const Radii& r) {
  ordered_json doc;
  doc["values"] = r.values;
  return doc.dump();
}

Graph parse_graph(std::string_view text) {
  const json doc = parse_document(text, "graph");
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer() ||
      !doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("graph: expected {\"n\": int, \"edges\": [[i, j], ...]}");
  }
  std::vector<Graph::Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ParseError("graph: each edge must be a pair of integers");
    }
    edges.emplace_back(e[0].get<int>() - 1, e[1].get<int>() - 1);
  }
  return Graph(doc["n"].get<int>(), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  ordered_json doc;
  doc["n"] = g.vertex_count();
  auto edges = ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace polyvol
