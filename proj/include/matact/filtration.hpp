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

#ifndef MATACT_FILTRATION_HPP
#define MATACT_FILTRATION_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "matact/matroid.hpp"

namespace matact {

// Default bound on exhaustive enumerations over all filtrations or all
// subsets of the ground set (overridable per call; the CLI reads
// ACTIVE_MATROID_MAX_N).
inline constexpr int kDefaultEnumerationBound = 10;

// A filtration of an ordered set E:
//   empty = F'_eps c ... c F'_0 = F_c = F_0 c ... c F_iota = E
// with min(F_k \ F_{k-1}) increasing in k on the internal side and
// min(F'_{k-1} \ F'_k) increasing in k on the external side.
//
// Stored as the single ascending chain from the empty set to E together with
// the index of F_c in that chain.
class Filtration {
 public:
  // Validates nesting, endpoints and the min-increase conditions.
  // Errors: kNotNested, kEndpointMismatch, kMinNotIncreasing.
  static Filtration validate(const GroundSet& ground,
                             std::vector<ElementSet> chain,
                             std::size_t cyclic_index);

  // Convenience form taking the two chains of the definition:
  // external_chain = F'_eps .. F'_0 ascending, internal_chain = F_0 .. F_iota.
  static Filtration validate_chains(const GroundSet& ground,
                                    const std::vector<ElementSet>& external_chain,
                                    const std::vector<ElementSet>& internal_chain);

  int iota() const { return static_cast<int>(chain_.size()) - 1 -
                            static_cast<int>(cyclic_index_); }
  int epsilon() const { return static_cast<int>(cyclic_index_); }

  ElementSet cyclic_set() const { return chain_[cyclic_index_]; }
  const std::vector<ElementSet>& chain() const { return chain_; }
  std::size_t cyclic_index() const { return cyclic_index_; }

  // F_k, 0 <= k <= iota.
  ElementSet internal_set(int k) const {
    return chain_[cyclic_index_ + static_cast<std::size_t>(k)];
  }
  // F'_k, 0 <= k <= epsilon.
  ElementSet external_set(int k) const {
    return chain_[cyclic_index_ - static_cast<std::size_t>(k)];
  }
  // F_k \ F_{k-1}, 1 <= k <= iota.
  ElementSet internal_diff(int k) const {
    return internal_set(k) - internal_set(k - 1);
  }
  // F'_{k-1} \ F'_k, 1 <= k <= epsilon.
  ElementSet external_diff(int k) const {
    return external_set(k - 1) - external_set(k);
  }

  // Sizes of the successive chain differences, bottom (empty set) to top (E).
  std::vector<int> part_sizes() const;

  // Text form, e.g. "0 < 356 < [E]": `<` for inclusion, `0` for the empty
  // set, the cyclic set bracketed, the full ground set written E. This is
  // also the canonical form used to key filtrations.
  std::string text(const GroundSet& ground, bool unicode = false) const;

  friend bool operator==(const Filtration& a, const Filtration& b) {
    return a.cyclic_index_ == b.cyclic_index_ && a.chain_ == b.chain_;
  }

 private:
  Filtration(std::vector<ElementSet> chain, std::size_t cyclic_index)
      : chain_(std::move(chain)), cyclic_index_(cyclic_index) {}

  std::vector<ElementSet> chain_;
  std::size_t cyclic_index_ = 0;
};

// Streams every filtration of E exactly once, generated as pairs
// (bipartition by F_c, refinement into parts) and rebuilt through the
// smallest-element rule. Errors: kSizeBoundExceeded when |E| > max_n.
void enumerate_filtrations(const GroundSet& ground,
                           const std::function<void(const Filtration&)>& fn,
                           int max_n = kDefaultEnumerationBound);

// True iff every internal minor M(F_k)/F_{k-1} is connected and not a loop,
// and every external minor M(F'_{k-1})/F'_k is connected and not an isthmus.
bool is_connected_filtration(const Matroid& m, const Filtration& f);

struct InducedMinors {
  std::vector<Matroid> internal_minors;  // M_k = M(F_k)/F_{k-1}, k = 1..iota
  std::vector<Matroid> external_minors;  // M'_k = M(F'_{k-1})/F'_k, k = 1..eps
};

InducedMinors induced_minors(const Matroid& m, const Filtration& f);

// prod_k beta(M_k) * prod_k beta*(M'_k); nonzero iff the filtration is
// connected.
long long beta_product(const Matroid& m, const Filtration& f);

// Complement-reversed chains: the dual filtration for M*. An involution.
Filtration filtration_dual(const Filtration& f, const GroundSet& ground);

}  // namespace matact

#endif  // MATACT_FILTRATION_HPP
