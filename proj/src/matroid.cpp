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

#include "polyvol/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "polyvol/errors.hpp"
#include "polyvol/kernels.hpp"

namespace polyvol {

namespace {

// Calls f on every k-subset of `ground` (as a mask over the full index set).
template <typename F>
void for_each_k_subset(SubsetMask ground, int k, F&& f) {
  const auto elems = ground.indices();
  const int m = static_cast<int>(elems.size());
  if (k > m) return;
  if (k == 0) {
    f(SubsetMask{});
    return;
  }
  // Gosper's hack over positions inside `elems`.
  std::uint64_t local = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << m;
  while (local < limit) {
    std::uint64_t bits = 0;
    for (std::uint64_t b = local; b != 0; b &= b - 1) {
      bits |= std::uint64_t{1} << elems[std::countr_zero(b)];
    }
    f(SubsetMask(bits));
    const std::uint64_t c = local & -local;
    const std::uint64_t r = local + c;
    local = (((r ^ local) >> 2) / c) | r;
  }
}

void sort_lex(std::vector<SubsetMask>& v) {
  std::sort(v.begin(), v.end(), lex_less);
}

}  // namespace

HyperplaneOrder::HyperplaneOrder(std::vector<int> sequence)
    : sequence_(std::move(sequence)), position_(sequence_.size(), -1) {
  const int n = size();
  for (int p = 0; p < n; ++p) {
    const int i = sequence_[p];
    if (i < 0 || i >= n || position_[i] != -1) {
      throw ValidationError("hyperplane order is not a permutation");
    }
    position_[i] = p;
  }
}

HyperplaneOrder HyperplaneOrder::identity(int n) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  return HyperplaneOrder(std::move(seq));
}

HyperplaneOrder HyperplaneOrder::from_labels(const Arrangement& a,
                                             const std::vector<std::string>& labels) {
  if (static_cast<int>(labels.size()) != a.size()) {
    throw ValidationError("order must list every hyperplane label exactly once");
  }
  std::vector<int> seq;
  for (const auto& l : labels) {
    const int i = a.find_label(l);
    if (i < 0) throw ValidationError("unknown hyperplane label '" + l + "'");
    seq.push_back(i);
  }
  return HyperplaneOrder(std::move(seq));
}

int HyperplaneOrder::max_of(SubsetMask s) const {
  int best = -1;
  for (int i : s.indices()) {
    if (best < 0 || position_[i] > position_[best]) best = i;
  }
  return best;
}

void check_cap(const Arrangement& a, int cap, const char* what) {
  if (a.size() > cap || a.size() > 62) {
    throw CapExceeded(std::string(what) + ": " + std::to_string(a.size()) +
                      " hyperplanes exceeds the enumeration cap of " +
                      std::to_string(std::min(cap, 62)));
  }
}

int subset_rank(const Arrangement& a, SubsetMask s) { return a.subset_rank(s); }

bool is_independent(const Arrangement& a, SubsetMask s) {
  return a.subset_rank(s) == s.size();
}

std::vector<SubsetMask> enumerate_bases(const Arrangement& a, int cap) {
  check_cap(a, cap, "enumerate_bases");
  std::vector<SubsetMask> out;
  for_each_k_subset(SubsetMask::full(a.size()), a.rank(), [&](SubsetMask s) {
    if (a.subset_rank(s) == a.rank()) out.push_back(s);
  });
  sort_lex(out);
  return out;
}

std::vector<SubsetMask> enumerate_independent_sets(const Arrangement& a, int cap) {
  check_cap(a, cap, "enumerate_independent_sets");
  std::vector<SubsetMask> out;
  for (int k = 0; k <= a.rank(); ++k) {
    for_each_k_subset(SubsetMask::full(a.size()), k, [&](SubsetMask s) {
      if (a.subset_rank(s) == k) out.push_back(s);
    });
  }
  sort_lex(out);
  return out;
}

std::vector<SubsetMask> circuits_within(const Arrangement& a, SubsetMask ground,
                                        int cap) {
  check_cap(a, cap, "enumerate_circuits");
  std::vector<SubsetMask> out;
  const int max_size = std::min(ground.size(), a.subset_rank(ground) + 1);
  for (int k = 1; k <= max_size; ++k) {
    for_each_k_subset(ground, k, [&](SubsetMask s) {
      for (auto c : out) {
        if (s.contains(c)) return;
      }
      // Every proper subset is independent here, so dependence means minimal.
      if (a.subset_rank(s) < k) out.push_back(s);
    });
  }
  sort_lex(out);
  return out;
}

std::vector<SubsetMask> enumerate_circuits(const Arrangement& a, int cap) {
  return circuits_within(a, SubsetMask::full(a.size()), cap);
}

std::vector<SubsetMask> broken_circuits(const Arrangement& a,
                                        const HyperplaneOrder& order, int cap) {
  if (order.size() != a.size()) throw ValidationError("order size mismatch");
  std::vector<SubsetMask> out;
  for (auto c : enumerate_circuits(a, cap)) out.push_back(c.without(order.max_of(c)));
  sort_lex(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::int64_t> nbc_count_by_size(const Arrangement& a,
                                            const HyperplaneOrder& order, int cap) {
  const auto broken = broken_circuits(a, order, cap);
  return kernels::nbc_counts(a.size(), a.rank(), broken);
}

std::vector<SubsetMask> nbc_bases(const Arrangement& a, const HyperplaneOrder& order,
                                  int cap) {
  const auto broken = broken_circuits(a, order, cap);
  std::vector<SubsetMask> out;
  for (auto b : enumerate_bases(a, cap)) {
    const bool clean = std::none_of(broken.begin(), broken.end(),
                                    [&](SubsetMask bc) { return b.contains(bc); });
    if (clean) out.push_back(b);
  }
  return out;
}

SubsetMask span_closure(const Arrangement& a, SubsetMask s) {
  const int r = a.subset_rank(s);
  SubsetMask out = s;
  for (int i = 0; i < a.size(); ++i) {
    if (!s.contains(i) && a.subset_rank(s.with(i)) == r) out = out.with(i);
  }
  return out;
}

std::vector<SubsetMask> components(const Arrangement& a, SubsetMask s, int cap) {
  if (s.empty()) return {};
  const SubsetMask closure = span_closure(a, s);
  std::vector<int> parent(a.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto c : circuits_within(a, closure, cap)) {
    const auto idx = c.indices();
    for (std::size_t t = 1; t < idx.size(); ++t) parent[find(idx[t])] = find(idx[0]);
  }
  std::vector<SubsetMask> blocks;
  std::vector<int> roots;
  for (int i : s.indices()) {
    const int root = find(i);
    auto it = std::find(roots.begin(), roots.end(), root);
    if (it == roots.end()) {
      roots.push_back(root);
      blocks.push_back(SubsetMask{}.with(i));
    } else {
      auto& block = blocks[it - roots.begin()];
      block = block.with(i);
    }
  }
  return blocks;
}

}  // namespace polyvol
