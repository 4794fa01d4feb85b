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

#include "matact/filtration.hpp"

#include <algorithm>

#include "matact/detail/minor_ops.hpp"

namespace matact {

Filtration Filtration::validate(const GroundSet& ground,
                                std::vector<ElementSet> chain,
                                std::size_t cyclic_index) {
  if (chain.empty() || cyclic_index >= chain.size()) {
    fail(ErrorCode::kEndpointMismatch, "filtration chain malformed");
  }
  if (!chain.front().empty()) {
    fail(ErrorCode::kEndpointMismatch, "filtration must start at the empty set");
  }
  if (chain.back() != ground.all()) {
    fail(ErrorCode::kEndpointMismatch, "filtration must end at the ground set");
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!ground.contains(chain[i])) {
      fail(ErrorCode::kElementOutsideGround, "chain set outside ground");
    }
    if (!(chain[i].subset_of(chain[i + 1])) || chain[i] == chain[i + 1]) {
      fail(ErrorCode::kNotNested, "chain not strictly nested");
    }
  }
  // Internal side: min(F_k \ F_{k-1}) increasing with k.
  for (std::size_t i = cyclic_index; i + 2 < chain.size(); ++i) {
    if ((chain[i + 1] - chain[i]).min() >= (chain[i + 2] - chain[i + 1]).min()) {
      fail(ErrorCode::kMinNotIncreasing,
           "internal-side minima not increasing at step " +
               std::to_string(i + 1 - cyclic_index));
    }
  }
  // External side: min(F'_{k-1} \ F'_k) increasing with k, i.e. decreasing
  // along the ascending chain below F_c.
  for (std::size_t i = 0; i + 1 < cyclic_index; ++i) {
    if ((chain[i + 1] - chain[i]).min() <= (chain[i + 2] - chain[i + 1]).min()) {
      fail(ErrorCode::kMinNotIncreasing,
           "external-side minima not increasing at step " +
               std::to_string(cyclic_index - i));
    }
  }
  return Filtration(std::move(chain), cyclic_index);
}

Filtration Filtration::validate_chains(
    const GroundSet& ground, const std::vector<ElementSet>& external_chain,
    const std::vector<ElementSet>& internal_chain) {
  if (external_chain.empty() || internal_chain.empty() ||
      external_chain.back() != internal_chain.front()) {
    fail(ErrorCode::kEndpointMismatch,
         "external chain must end where the internal chain starts (F_c)");
  }
  std::vector<ElementSet> chain = external_chain;
  chain.insert(chain.end(), internal_chain.begin() + 1, internal_chain.end());
  return validate(ground, std::move(chain), external_chain.size() - 1);
}

std::vector<int> Filtration::part_sizes() const {
  std::vector<int> out;
  out.reserve(chain_.size() - 1);
  for (std::size_t i = 0; i + 1 < chain_.size(); ++i) {
    out.push_back((chain_[i + 1] - chain_[i]).size());
  }
  return out;
}

std::string Filtration::text(const GroundSet& ground, bool unicode) const {
  std::string out;
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    if (i > 0) out += unicode ? "⊂" : " < ";
    std::string s;
    if (!ground.empty() && chain_[i] == ground.all()) {
      s = "E";
    } else {
      s = set_text(chain_[i], unicode);
    }
    if (i == cyclic_index_) s = "[" + s + "]";
    out += s;
  }
  return out;
}

namespace {

// Enumerates the set partitions of `labels` (ascending) via restricted-growth
// assignment; parts are keyed by their smallest member.
void for_each_set_partition(const std::vector<int>& labels, std::size_t next,
                            std::vector<ElementSet>& parts,
                            const std::function<void(const std::vector<ElementSet>&)>& fn) {
  if (next == labels.size()) {
    fn(parts);
    return;
  }
  const int e = labels[next];
  for (std::size_t i = 0; i < parts.size(); ++i) {
    parts[i] = parts[i].with(e);
    for_each_set_partition(labels, next + 1, parts, fn);
    parts[i] = parts[i].without(e);
  }
  parts.push_back(ElementSet().with(e));
  for_each_set_partition(labels, next + 1, parts, fn);
  parts.pop_back();
}

}  // namespace

void enumerate_filtrations(const GroundSet& ground,
                           const std::function<void(const Filtration&)>& fn,
                           int max_n) {
  const int n = ground.size();
  if (n > max_n) {
    fail(ErrorCode::kSizeBoundExceeded,
         "filtration enumeration bound exceeded: |E|=" + std::to_string(n) +
             " > " + std::to_string(max_n));
  }
  const std::vector<int> labels = ground.labels();

  for (std::uint64_t sub = 0;; ++sub) {
    ElementSet cyclic;
    for (int i = 0; i < n; ++i) {
      if ((sub >> i) & 1u) cyclic = cyclic.with(labels[static_cast<std::size_t>(i)]);
    }

    std::vector<ElementSet> external_parts;
    for_each_set_partition(
        cyclic.labels(), 0, external_parts, [&](const std::vector<ElementSet>& ext) {
          std::vector<ElementSet> internal_parts;
          for_each_set_partition(
              (ground.all() - cyclic).labels(), 0, internal_parts,
              [&](const std::vector<ElementSet>& intl) {
                // Rebuild the nested chain by the smallest-element rule:
                // parts are already keyed by minima in increasing key order.
                std::vector<ElementSet> chain;
                chain.reserve(ext.size() + intl.size() + 1);
                ElementSet acc;
                // F'_k = union of external parts with key > a'_k; ascending
                // chain order adds parts with the largest keys first.
                for (std::size_t i = ext.size(); i-- > 0;) {
                  chain.push_back(acc);
                  acc = acc | ext[i];
                }
                const std::size_t cyclic_index = ext.size();
                chain.push_back(acc);
                for (const ElementSet& part : intl) {
                  acc = acc | part;
                  chain.push_back(acc);
                }
                fn(Filtration::validate(ground, std::move(chain), cyclic_index));
              });
        });

    if (sub + 1 == (std::uint64_t{1} << n)) break;
  }
}

bool is_connected_filtration(const Matroid& m, const Filtration& f) {
  for (int k = 1; k <= f.iota(); ++k) {
    const ElementSet g = f.internal_set(k), c = f.internal_set(k - 1);
    if (!detail::minor_is_connected(m, g, c)) return false;
    const ElementSet ground = g - c;
    if (ground.size() == 1 && m.rank_of(g) == m.rank_of(c)) return false;  // loop
  }
  for (int k = 1; k <= f.epsilon(); ++k) {
    const ElementSet g = f.external_set(k - 1), c = f.external_set(k);
    if (!detail::minor_is_connected(m, g, c)) return false;
    const ElementSet ground = g - c;
    if (ground.size() == 1 && m.rank_of(g) != m.rank_of(c)) return false;  // isthmus
  }
  return true;
}

InducedMinors induced_minors(const Matroid& m, const Filtration& f) {
  InducedMinors out;
  out.internal_minors.reserve(static_cast<std::size_t>(f.iota()));
  out.external_minors.reserve(static_cast<std::size_t>(f.epsilon()));
  for (int k = 1; k <= f.iota(); ++k) {
    out.internal_minors.push_back(
        minor(m, f.internal_set(k), f.internal_set(k - 1)));
  }
  for (int k = 1; k <= f.epsilon(); ++k) {
    out.external_minors.push_back(
        minor(m, f.external_set(k - 1), f.external_set(k)));
  }
  return out;
}

long long beta_product(const Matroid& m, const Filtration& f) {
  long long product = 1;
  for (int k = 1; k <= f.iota() && product != 0; ++k) {
    product *= detail::count_uniactive_bases(
        m, f.internal_set(k), f.internal_set(k - 1), /*internal_side=*/true);
  }
  for (int k = 1; k <= f.epsilon() && product != 0; ++k) {
    product *= detail::count_uniactive_bases(
        m, f.external_set(k - 1), f.external_set(k), /*internal_side=*/false);
  }
  return product;
}

Filtration filtration_dual(const Filtration& f, const GroundSet& ground) {
  const std::vector<ElementSet>& chain = f.chain();
  std::vector<ElementSet> out;
  out.reserve(chain.size());
  for (std::size_t i = chain.size(); i-- > 0;) {
    out.push_back(ground.all() - chain[i]);
  }
  return Filtration::validate(ground, std::move(out),
                              chain.size() - 1 - f.cyclic_index());
}

}  // namespace matact
