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

#include "matact/detail/minor_ops.hpp"

#include <vector>

namespace matact::detail {

namespace {

// Visits every size-k submask of the labels of `universe`.
template <typename Fn>
void for_each_k_subset(ElementSet universe, int k, const Fn& fn) {
  if (k < 0 || k > universe.size()) return;
  const std::vector<int> labels = universe.labels();
  const int n = static_cast<int>(labels.size());
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    ElementSet s;
    for (int i : idx) s = s.with(labels[static_cast<std::size_t>(i)]);
    fn(s);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

bool is_uniactive_minor_basis(const Matroid& m, ElementSet restrict_to,
                              ElementSet contract, ElementSet basis,
                              bool internal_side) {
  const ElementSet ground = restrict_to - contract;
  if (ground.empty() || !basis.subset_of(ground)) return false;
  const int p = ground.min();
  const int rank_f = m.rank_of(contract);
  const int r = m.rank_of(restrict_to) - rank_f;
  const int target = rank_f + r;
  if (basis.size() != r || m.rank_of(basis | contract) != target) return false;
  // min(ground) is always active on the side it lies on; uniactivity pins it
  // to the requested side and forbids every other activity.
  if (basis.contains(p) != internal_side) return false;
  for (int b : basis) {
    const bool active =
        minor_internally_active(m, contract, ground, basis, target, b);
    if (active != (internal_side && b == p)) return false;
  }
  for (int e : ground - basis) {
    const bool active = minor_externally_active(m, contract, basis, target, e);
    if (active != (!internal_side && e == p)) return false;
  }
  return true;
}

long long count_uniactive_bases(const Matroid& m, ElementSet restrict_to,
                                ElementSet contract, bool internal_side) {
  const ElementSet ground = restrict_to - contract;
  if (ground.empty()) return 0;
  const int rank_f = m.rank_of(contract);
  const int r = m.rank_of(restrict_to) - rank_f;
  long long count = 0;
  for_each_k_subset(ground, r, [&](ElementSet basis) {
    if (is_uniactive_minor_basis(m, restrict_to, contract, basis,
                                 internal_side)) {
      ++count;
    }
  });
  return count;
}

bool minor_is_connected(const Matroid& m, ElementSet restrict_to,
                        ElementSet contract) {
  const ElementSet ground = restrict_to - contract;
  const int n = ground.size();
  if (n <= 1) return true;
  const int rank_f = m.rank_of(contract);
  const int total = m.rank_of(restrict_to) - rank_f;
  const std::vector<int> labels = ground.labels();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << (n - 1)); ++s) {
    ElementSet a = ElementSet().with(labels[0]);
    for (int i = 1; i < n; ++i) {
      if ((s >> (i - 1)) & 1u) a = a.with(labels[static_cast<std::size_t>(i)]);
    }
    if (a.size() == n) continue;
    const int ra = m.rank_of(a | contract) - rank_f;
    const int rb = m.rank_of((ground - a) | contract) - rank_f;
    if (ra + rb == total) return false;
  }
  return true;
}

}  // namespace matact::detail
