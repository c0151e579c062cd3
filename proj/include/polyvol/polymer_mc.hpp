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

#include <cstdint>
#include <optional>
#include <vector>

#include "polyvol/arrangement.hpp"
#include "polyvol/kernels.hpp"
#include "polyvol/matroid.hpp"
#include "polyvol/radii.hpp"

namespace polyvol {

// Angle parametrization of the stratum of an independent set S = {i_1 < ... <
// i_s}: h_{i_k}(x) = R_{i_k} exp(i phi_k). Every j in span_closure(S) - S is
// expanded exactly as h_j = sum_k c_{j,k} h_{i_k}, so a sample is accepted iff
// |sum_k c_{j,k} R_{i_k} exp(i phi_k)| > R_j for all such j.
struct StratumSampler {
  struct Constraint {
    int index = 0;
    RationalVector coefficients;
  };

  SubsetMask active;
  std::vector<int> basis;
  std::vector<Constraint> constraints;

  int dims() const { return static_cast<int>(basis.size()); }
  kernels::AcceptanceKernel kernel(const Radii& radii) const;
};

// Throws DependentSetError if s is dependent.
StratumSampler build_sampler(const Arrangement& a, SubsetMask s);

// Bernoulli estimate of vol / (2 pi)^{|S|} for one stratum.
struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
};

// Draws come from the substream substream_key(seed, sampler.active), so the
// result depends only on (sampler, radii, n, seed).
MCEstimate acceptance_estimate(const StratumSampler& sampler, const Radii& radii,
                               std::uint64_t n, std::uint64_t seed);

struct StratumRecord {
  SubsetMask subset;
  MCEstimate estimate;
};

// Estimated q-volume in units of (2 pi)^rank: coefficient of q^{r - s} is the
// sum of acceptances over independent sets of size s.
struct McQVolume {
  int rank = 0;
  std::vector<double> coefficients;
  std::vector<double> std_errors;
  std::vector<StratumRecord> strata;
};

McQVolume mc_q_volume(const Arrangement& a, const Radii& radii,
                      std::uint64_t n_per_stratum, std::uint64_t seed,
                      int cap = kDefaultEnumerationCap);

// Sum of acceptances over the bases only.
struct McConnectedVolume {
  double sum = 0.0;
  double std_error = 0.0;
  std::vector<StratumRecord> strata;
};
McConnectedVolume mc_connected_volume(const Arrangement& a, const Radii& radii,
                                      std::uint64_t n_per_stratum, std::uint64_t seed,
                                      int cap = kDefaultEnumerationCap);

// (a - b) / sqrt(sa^2 + sb^2); 0 when both errors vanish and a == b, infinite
// when both vanish and a != b.
double z_score(double a, double sa, double b, double sb);

inline constexpr double kZThreshold = 4.0;

struct SizeComparison {
  int size = 0;
  double sum1 = 0.0, std_error1 = 0.0;
  double sum2 = 0.0, std_error2 = 0.0;
  double z = 0.0;
};

struct InvarianceReport {
  std::vector<SizeComparison> sizes;
  bool pass = false;
};

// Per-size acceptance sums under two radii vectors, same seed for both.
InvarianceReport invariance_check(const Arrangement& a, const Radii& r1, const Radii& r2,
                                  std::uint64_t n, std::uint64_t seed,
                                  int cap = kDefaultEnumerationCap);

struct BasisCertificate {
  SubsetMask basis;
  int certified = 0;  // acceptance is identically 0 or identically 1
  bool nbc = false;
  std::optional<double> mc_mean;
};

struct ToriReport {
  Rational ratio;
  Rational sufficient_ratio;
  std::vector<BasisCertificate> bases;
  int tori = 0;             // bases certified 1
  Integer expected_tori;    // (-1)^r chi_A(0)
  bool matches_nbc = false;
  bool mc_agrees = true;
  bool pass = false;
};

// 1 + max over circuits C and e in C of the l1 norm of the coefficients
// expressing h_e through C - {e}. Any ratio above it certifies every basis.
Rational sufficient_ratio(const Arrangement& a, int cap = kDefaultEnumerationCap);

// Certifies each basis under R = separated_radii(a, order, ratio) with exact
// rational bounds. mc_samples > 0 adds a Monte Carlo spot check per basis.
// Throws RatioTooSmall if some basis cannot be decided.
ToriReport separated_radii_check(const Arrangement& a, const HyperplaneOrder& order,
                                 double ratio, std::uint64_t mc_samples = 10000,
                                 std::uint64_t seed = 42,
                                 int cap = kDefaultEnumerationCap);

// R_{i0} <= sum_k |c_k| R_{i_k} for every circuit and every distinguished
// element i0 of it, evaluated exactly.
bool in_T_region(const Arrangement& a, const Radii& radii, int cap = kDefaultEnumerationCap);

struct ProductReport {
  SubsetMask subset;
  std::vector<SubsetMask> components;
  MCEstimate whole;
  std::vector<MCEstimate> parts;
  double product = 1.0;
  double product_std_error = 0.0;
  double z = 0.0;
  bool pass = false;
};

// acceptance(S) against the product of acceptance(S_j) over its components.
ProductReport product_check(const Arrangement& a, SubsetMask s, const Radii& radii,
                            std::uint64_t n, std::uint64_t seed,
                            int cap = kDefaultEnumerationCap);

}  // namespace polyvol
