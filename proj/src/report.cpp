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

#include "polyvol/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace polyvol::report {

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json polynomial_json(const IntPolynomial& p, const std::string& variable) {
  Json j;
  j["variable"] = variable;
  auto coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(integer_json(c));
  if (p.is_zero()) coeffs.push_back(0);
  j["coefficients"] = std::move(coeffs);
  return j;
}

Json qvolume_json(const QVolume& q) {
  Json j;
  j["two_pi_exponent"] = q.two_pi_exponent;
  const auto poly = polynomial_json(q.polynomial, "q");
  j["variable"] = poly["variable"];
  j["coefficients"] = poly["coefficients"];
  return j;
}

Json subset_json(const Arrangement& a, SubsetMask s) {
  auto j = Json::array();
  for (int i : s.indices()) j.push_back(a.label(i));
  return j;
}

Json subsets_json(const Arrangement& a, const std::vector<SubsetMask>& sets) {
  auto j = Json::array();
  for (auto s : sets) j.push_back(subset_json(a, s));
  return j;
}

Json estimate_json(const Arrangement& a, SubsetMask s, const MCEstimate& e) {
  Json j;
  j["subset"] = subset_json(a, s);
  j["mean"] = e.mean;
  j["std_error"] = e.std_error;
  j["n"] = e.n_samples;
  j["seed"] = e.seed;
  return j;
}

Json mc_qvolume_json(const Arrangement& a, const McQVolume& m) {
  Json j;
  j["two_pi_exponent"] = m.rank;
  j["variable"] = "q";
  j["coefficients"] = m.coefficients;
  j["std_errors"] = m.std_errors;
  auto strata = Json::array();
  for (const auto& s : m.strata) strata.push_back(estimate_json(a, s.subset, s.estimate));
  j["strata"] = std::move(strata);
  return j;
}

Json invariance_json(const InvarianceReport& r) {
  Json j;
  auto sizes = Json::array();
  for (const auto& c : r.sizes) {
    Json e;
    e["size"] = c.size;
    e["sum1"] = c.sum1;
    e["std_error1"] = c.std_error1;
    e["sum2"] = c.sum2;
    e["std_error2"] = c.std_error2;
    e["z"] = std::isfinite(c.z) ? Json(c.z) : Json("inf");
    sizes.push_back(std::move(e));
  }
  j["sizes"] = std::move(sizes);
  j["z_threshold"] = kZThreshold;
  j["result"] = r.pass ? "PASS" : "FAIL";
  return j;
}

Json tori_json(const Arrangement& a, const ToriReport& r) {
  Json j;
  j["ratio"] = format_rational(r.ratio);
  j["sufficient_ratio"] = format_rational(r.sufficient_ratio);
  auto bases = Json::array();
  for (const auto& b : r.bases) {
    Json e;
    e["subset"] = subset_json(a, b.basis);
    e["certified"] = b.certified;
    e["nbc"] = b.nbc;
    if (b.mc_mean) e["mc_mean"] = *b.mc_mean;
    bases.push_back(std::move(e));
  }
  j["bases"] = std::move(bases);
  j["tori"] = r.tori;
  j["expected_tori"] = integer_json(r.expected_tori);
  j["matches_nbc"] = r.matches_nbc;
  j["mc_agrees"] = r.mc_agrees;
  j["result"] = r.pass ? "PASS" : "FAIL";
  return j;
}

Json product_json(const Arrangement& a, const ProductReport& r) {
  Json j;
  j["whole"] = estimate_json(a, r.subset, r.whole);
  auto parts = Json::array();
  for (std::size_t k = 0; k < r.components.size(); ++k)
    parts.push_back(estimate_json(a, r.components[k], r.parts[k]));
  j["components"] = std::move(parts);
  j["product"] = r.product;
  j["product_std_error"] = r.product_std_error;
  j["z"] = std::isfinite(r.z) ? Json(r.z) : Json("inf");
  j["result"] = r.pass ? "PASS" : "FAIL";
  return j;
}

Json polymer_json(const PolymerConfig& c) {
  Json j;
  j["family"] = family_name(c.family);
  auto centers = Json::array();
  for (const auto& p : c.centers) centers.push_back({p.real(), p.imag()});
  j["centers"] = std::move(centers);
  j["disk_radii"] = c.disk_radii;
  j["active"] = c.active.indices();
  return j;
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string subset_text(const Arrangement& a, SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ", ";
    out += a.label(i);
    first = false;
  }
  return out + "}";
}

std::string mc_qvolume_text(const Arrangement& a, const McQVolume& m) {
  std::ostringstream os;
  os << "estimated q-volume / (2pi)^" << m.rank << "\n";
  for (int p = m.rank; p >= 0; --p) {
    os << "  q^" << p << ": " << format_double(m.coefficients[p]) << " +/- "
       << format_double(m.std_errors[p]) << "\n";
  }
  os << "strata:\n";
  for (const auto& s : m.strata) {
    os << "  " << subset_text(a, s.subset) << "  mean " << format_double(s.estimate.mean)
       << "  se " << format_double(s.estimate.std_error) << "\n";
  }
  return os.str();
}

std::string invariance_text(const InvarianceReport& r) {
  std::ostringstream os;
  for (const auto& c : r.sizes) {
    os << "size " << c.size << ": " << format_double(c.sum1) << " +/- "
       << format_double(c.std_error1) << " vs " << format_double(c.sum2) << " +/- "
       << format_double(c.std_error2) << "  z = " << format_double(c.z) << "\n";
  }
  os << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string tori_text(const Arrangement& a, const ToriReport& r) {
  std::ostringstream os;
  os << "ratio " << format_rational(r.ratio) << " (sufficient: "
     << format_rational(r.sufficient_ratio) << ")\n";
  for (const auto& b : r.bases) {
    os << "  " << subset_text(a, b.basis) << "  certified " << b.certified
       << (b.nbc ? "  nbc" : "");
    if (b.mc_mean) os << "  mc " << format_double(*b.mc_mean);
    os << "\n";
  }
  os << (r.pass ? "PASS" : "FAIL") << ", " << r.tori << " tori (expected "
     << r.expected_tori.get_str() << ")\n";
  return os.str();
}

std::string product_text(const Arrangement& a, const ProductReport& r) {
  std::ostringstream os;
  os << subset_text(a, r.subset) << ": " << format_double(r.whole.mean) << " +/- "
     << format_double(r.whole.std_error) << "\n";
  for (std::size_t k = 0; k < r.components.size(); ++k) {
    os << "  component " << subset_text(a, r.components[k]) << ": "
       << format_double(r.parts[k].mean) << " +/- " << format_double(r.parts[k].std_error)
       << "\n";
  }
  os << "product " << format_double(r.product) << " +/- "
     << format_double(r.product_std_error) << "  z = " << format_double(r.z) << "\n";
  os << (r.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace polyvol::report
