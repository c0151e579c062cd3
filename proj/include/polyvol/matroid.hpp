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
#include <string>
#include <vector>

#include "polyvol/arrangement.hpp"
#include "polyvol/subset.hpp"

namespace polyvol {

inline constexpr int kDefaultEnumerationCap = 24;

// A linear order on the hyperplanes, stored as the sequence of indices from
// smallest to largest.
class HyperplaneOrder {
 public:
  HyperplaneOrder() = default;
  explicit HyperplaneOrder(std::vector<int> sequence);

  static HyperplaneOrder identity(int n);
  // Order given by a permutation of the arrangement's labels.
  static HyperplaneOrder from_labels(const Arrangement& a,
                                     const std::vector<std::string>& labels);

  int size() const { return static_cast<int>(sequence_.size()); }
  const std::vector<int>& sequence() const { return sequence_; }
  // 0-based rank of hyperplane i in the order.
  int position(int i) const { return position_[i]; }
  // The largest element of s in this order; s must be nonempty.
  int max_of(SubsetMask s) const;

 private:
  std::vector<int> sequence_;
  std::vector<int> position_;
};

int subset_rank(const Arrangement& a, SubsetMask s);
bool is_independent(const Arrangement& a, SubsetMask s);

// Masks are listed in lexicographic order of their sorted index lists.
std::vector<SubsetMask> enumerate_bases(const Arrangement& a,
                                        int cap = kDefaultEnumerationCap);
std::vector<SubsetMask> enumerate_independent_sets(const Arrangement& a,
                                                   int cap = kDefaultEnumerationCap);
std::vector<SubsetMask> enumerate_circuits(const Arrangement& a,
                                           int cap = kDefaultEnumerationCap);
// Circuits of a contained in `ground`.
std::vector<SubsetMask> circuits_within(const Arrangement& a, SubsetMask ground,
                                        int cap = kDefaultEnumerationCap);

// Distinct sets C - {max C} over all circuits C.
std::vector<SubsetMask> broken_circuits(const Arrangement& a,
                                        const HyperplaneOrder& order,
                                        int cap = kDefaultEnumerationCap);

// Number of subsets free of broken circuits, indexed by size 0..rank(a).
std::vector<std::int64_t> nbc_count_by_size(const Arrangement& a,
                                            const HyperplaneOrder& order,
                                            int cap = kDefaultEnumerationCap);

// Bases containing no broken circuit.
std::vector<SubsetMask> nbc_bases(const Arrangement& a, const HyperplaneOrder& order,
                                  int cap = kDefaultEnumerationCap);

// All i with h_i in the span of {h_j : j in s}.
SubsetMask span_closure(const Arrangement& a, SubsetMask s);

// Partition of s: i and j share a block iff some circuit of a lying inside
// span_closure(s) contains both. Blocks are ordered by smallest element.
std::vector<SubsetMask> components(const Arrangement& a, SubsetMask s,
                                   int cap = kDefaultEnumerationCap);

// Throws CapExceeded if the arrangement is too large to enumerate.
void check_cap(const Arrangement& a, int cap, const char* what);

}  // namespace polyvol
