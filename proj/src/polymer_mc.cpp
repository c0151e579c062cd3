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

#include "polyvol/polymer_mc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polyvol/charpoly.hpp"
#include "polyvol/errors.hpp"
#include "polyvol/qvolume.hpp"
#include "polyvol/rng.hpp"

namespace polyvol {

namespace {

// Exact expansion of h_target through the functionals in `through`.
RationalVector expand(const Arrangement& a, const std::vector<int>& through, int target) {
  std::vector<RationalVector> basis;
  for (int i : through) basis.push_back(a.functional(i).coefficients);
  auto c = express_in_span(basis, a.functional(target).coefficients);
  if (!c) throw Error("internal: expansion target outside the span");
  return *c;
}

Rational l1_norm(const RationalVector& v) {
  Rational s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

}  // namespace

kernels::AcceptanceKernel StratumSampler::kernel(const Radii& radii) const {
  kernels::AcceptanceKernel k;
  k.dims = dims();
  for (const auto& c : constraints) {
    for (int t = 0; t < dims(); ++t) {
      k.weights.push_back(c.coefficients[t].get_d() * radii[basis[t]]);
    }
    k.thresholds.push_back(radii[c.index]);
  }
  return k;
}

StratumSampler build_sampler(const Arrangement& a, SubsetMask s) {
  if (!is_independent(a, s)) {
    throw DependentSetError("stratum sampler needs an independent set");
  }
  StratumSampler out;
  out.active = s;
  out.basis = s.indices();
  const SubsetMask extra = span_closure(a, s) - s;
  for (int j : extra.indices()) {
    StratumSampler::Constraint c{j, expand(a, out.basis, j)};
    // Verify sum_k c_k h_{i_k} - h_j == 0 exactly.
    RationalVector residual = a.functional(j).coefficients;
    for (std::size_t k = 0; k < out.basis.size(); ++k) {
      const auto& h = a.functional(out.basis[k]).coefficients;
      for (std::size_t x = 0; x < residual.size(); ++x) residual[x] -= c.coefficients[k] * h[x];
    }
    if (!is_zero(residual)) throw Error("internal: inexact stratum expansion");
    out.constraints.push_back(std::move(c));
  }
  return out;
}

MCEstimate acceptance_estimate(const StratumSampler& sampler, const Radii& radii,
                               std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw ValidationError("acceptance_estimate needs at least one sample");
  const auto key = substream_key(seed, sampler.active);
  const auto accepted = kernels::count_accepted(sampler.kernel(radii), key, n);
  const double mean = static_cast<double>(accepted) / static_cast<double>(n);
  return MCEstimate{mean, std::sqrt(mean * (1.0 - mean) / static_cast<double>(n)), n, seed};
}

McQVolume mc_q_volume(const Arrangement& a, const Radii& radii,
                      std::uint64_t n_per_stratum, std::uint64_t seed, int cap) {
  validate_radii(radii, a.size());
  const int r = a.rank();
  McQVolume out;
  out.rank = r;
  out.coefficients.assign(r + 1, 0.0);
  std::vector<double> var(r + 1, 0.0);
  for (auto s : enumerate_independent_sets(a, cap)) {
    const auto est = acceptance_estimate(build_sampler(a, s), radii, n_per_stratum, seed);
    const int power = r - s.size();
    out.coefficients[power] += est.mean;
    var[power] += est.std_error * est.std_error;
    out.strata.push_back({s, est});
  }
  for (double v : var) out.std_errors.push_back(std::sqrt(v));
  return out;
}

McConnectedVolume mc_connected_volume(const Arrangement& a, const Radii& radii,
                                      std::uint64_t n_per_stratum, std::uint64_t seed,
                                      int cap) {
  validate_radii(radii, a.size());
  McConnectedVolume out;
  double var = 0.0;
  for (auto b : enumerate_bases(a, cap)) {
    const auto est = acceptance_estimate(build_sampler(a, b), radii, n_per_stratum, seed);
    out.sum += est.mean;
    var += est.std_error * est.std_error;
    out.strata.push_back({b, est});
  }
  out.std_error = std::sqrt(var);
  return out;
}

double z_score(double a, double sa, double b, double sb) {
  const double s = std::sqrt(sa * sa + sb * sb);
  if (s == 0.0) return a == b ? 0.0 : std::numeric_limits<double>::infinity();
  return (a - b) / s;
}

InvarianceReport invariance_check(const Arrangement& a, const Radii& r1, const Radii& r2,
                                  std::uint64_t n, std::uint64_t seed, int cap) {
  const auto m1 = mc_q_volume(a, r1, n, seed, cap);
  const auto m2 = mc_q_volume(a, r2, n, seed, cap);
  InvarianceReport out;
  out.pass = true;
  for (int s = 0; s <= a.rank(); ++s) {
    const int p = a.rank() - s;
    SizeComparison c{s, m1.coefficients[p], m1.std_errors[p], m2.coefficients[p],
                     m2.std_errors[p], 0.0};
    c.z = z_score(c.sum1, c.std_error1, c.sum2, c.std_error2);
    if (!(std::abs(c.z) <= kZThreshold)) out.pass = false;
    out.sizes.push_back(c);
  }
  return out;
}

Rational sufficient_ratio(const Arrangement& a, int cap) {
  Rational worst = 0;
  for (auto c : enumerate_circuits(a, cap)) {
    const auto idx = c.indices();
    for (int e : idx) {
      std::vector<int> rest;
      for (int i : idx)
        if (i != e) rest.push_back(i);
      worst = std::max(worst, l1_norm(expand(a, rest, e)));
    }
  }
  return worst + 1;
}

ToriReport separated_radii_check(const Arrangement& a, const HyperplaneOrder& order,
                                 double ratio, std::uint64_t mc_samples, std::uint64_t seed,
                                 int cap) {
  if (!(ratio > 1) || !std::isfinite(ratio)) throw ValidationError("ratio must be > 1");
  if (order.size() != a.size()) throw ValidationError("order size mismatch");
  ToriReport out;
  out.ratio = rational_from_double(ratio);
  out.sufficient_ratio = sufficient_ratio(a, cap);

  std::vector<Rational> exact_r(a.size());
  for (int i = 0; i < a.size(); ++i) {
    Rational p = 1;
    for (int e = 0; e <= order.position(i); ++e) p *= out.ratio;
    exact_r[i] = p;
  }
  Radii radii;
  for (const auto& x : exact_r) radii.values.push_back(x.get_d());

  const auto nbc = nbc_bases(a, order, cap);
  std::vector<SubsetMask> certified_one;
  for (auto b : enumerate_bases(a, cap)) {
    const auto sampler = build_sampler(a, b);
    bool never = false;   // some constraint can never hold
    bool always = true;   // every constraint always holds
    for (const auto& c : sampler.constraints) {
      Rational upper = 0, top = 0;
      for (int t = 0; t < sampler.dims(); ++t) {
        const Rational term = abs(c.coefficients[t]) * exact_r[sampler.basis[t]];
        upper += term;
        top = std::max(top, term);
      }
      const Rational lower = top - (upper - top);
      const Rational& bound = exact_r[c.index];
      if (upper <= bound) never = true;
      if (!(lower > bound)) always = false;
    }
    if (!never && !always) {
      throw RatioTooSmall("ratio " + format_rational(out.ratio) +
                          " cannot certify every basis; a sufficient ratio is " +
                          format_rational(out.sufficient_ratio));
    }
    BasisCertificate cert;
    cert.basis = b;
    cert.certified = never ? 0 : 1;
    cert.nbc = std::find(nbc.begin(), nbc.end(), b) != nbc.end();
    if (mc_samples > 0) {
      cert.mc_mean = acceptance_estimate(sampler, radii, mc_samples, seed).mean;
      if (*cert.mc_mean != static_cast<double>(cert.certified)) out.mc_agrees = false;
    }
    if (cert.certified == 1) certified_one.push_back(b);
    out.bases.push_back(cert);
  }
  out.tori = static_cast<int>(certified_one.size());
  out.expected_tori = connected_volume(a).multiplier;
  out.matches_nbc = certified_one == nbc;
  out.pass = out.matches_nbc && Integer(out.tori) == out.expected_tori && out.mc_agrees;
  return out;
}

bool in_T_region(const Arrangement& a, const Radii& radii, int cap) {
  validate_radii(radii, a.size());
  std::vector<Rational> r;
  for (double v : radii.values) r.push_back(rational_from_double(v));
  for (auto c : enumerate_circuits(a, cap)) {
    const auto idx = c.indices();
    for (int e : idx) {
      std::vector<int> rest;
      for (int i : idx)
        if (i != e) rest.push_back(i);
      const auto coeffs = expand(a, rest, e);
      Rational bound = 0;
      for (std::size_t k = 0; k < rest.size(); ++k) bound += abs(coeffs[k]) * r[rest[k]];
      if (r[e] > bound) return false;
    }
  }
  return true;
}

ProductReport product_check(const Arrangement& a, SubsetMask s, const Radii& radii,
                            std::uint64_t n, std::uint64_t seed, int cap) {
  validate_radii(radii, a.size());
  ProductReport out;
  out.subset = s;
  out.whole = acceptance_estimate(build_sampler(a, s), radii, n, seed);
  out.components = components(a, s, cap);
  for (auto part : out.components) {
    out.parts.push_back(acceptance_estimate(build_sampler(a, part), radii, n, seed));
  }
  double var = 0.0;
  for (std::size_t j = 0; j < out.parts.size(); ++j) {
    out.product *= out.parts[j].mean;
    double others = 1.0;
    for (std::size_t k = 0; k < out.parts.size(); ++k)
      if (k != j) others *= out.parts[k].mean;
    var += others * others * out.parts[j].std_error * out.parts[j].std_error;
  }
  out.product_std_error = std::sqrt(var);
  out.z = z_score(out.whole.mean, out.whole.std_error, out.product, out.product_std_error);
  out.pass = std::abs(out.z) <= kZThreshold;
  return out;
}

}  // namespace polyvol
