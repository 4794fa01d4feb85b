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

#ifndef MATACT_DETAIL_MINOR_OPS_HPP
#define MATACT_DETAIL_MINOR_OPS_HPP

#include <unordered_map>

#include "matact/matroid.hpp"

namespace matact::detail {

// Rank arithmetic on minors M(G)/F through the parent matroid, avoiding the
// materialization of minors in enumeration loops. Subsets passed here live in
// G\F.

// Rank of `subset` in M(G)/F.
inline int minor_rank(const Matroid& m, ElementSet contract, ElementSet subset) {
  return m.rank_of(subset | contract) - m.rank_of(contract);
}

// `candidate` is a basis of M(G)/F iff it has the minor's rank and is
// independent in the contraction.
inline bool is_minor_basis(const Matroid& m, ElementSet restrict_to,
                           ElementSet contract, ElementSet candidate) {
  const int rank_f = m.rank_of(contract);
  const int minor_rank_total = m.rank_of(restrict_to) - rank_f;
  return candidate.size() == minor_rank_total &&
         m.rank_of(candidate | contract) == rank_f + minor_rank_total;
}

// Activity tests for a basis `I` of the minor with ground g = G\F.
// b in I is internally active iff no e < b outside I keeps I-b+e a basis;
// e outside I is externally active iff no b < e in I keeps I-b+e a basis.
inline bool minor_internally_active(const Matroid& m, ElementSet contract,
                                    ElementSet ground, ElementSet basis,
                                    int rank_f_plus_r, int b) {
  for (int e : (ground - basis).below(b)) {
    if (m.rank_of((basis.without(b).with(e)) | contract) == rank_f_plus_r) {
      return false;
    }
  }
  return true;
}

inline bool minor_externally_active(const Matroid& m, ElementSet contract,
                                    ElementSet basis, int rank_f_plus_r,
                                    int e) {
  for (int b : basis.below(e)) {
    if (m.rank_of((basis.without(b).with(e)) | contract) == rank_f_plus_r) {
      return false;
    }
  }
  return true;
}

// True iff `basis` is a basis of M(G)/F with activities (1,0) (internal
// side) or (0,1) (external side).
bool is_uniactive_minor_basis(const Matroid& m, ElementSet restrict_to,
                              ElementSet contract, ElementSet basis,
                              bool internal_side);

// Counts the bases of M(G)/F with activities (1,0) (internal side) or (0,1)
// (external side); these are beta and beta* of the minor.
long long count_uniactive_bases(const Matroid& m, ElementSet restrict_to,
                                ElementSet contract, bool internal_side);

// Connectivity of M(G)/F (single-element and empty minors count as
// connected).
bool minor_is_connected(const Matroid& m, ElementSet restrict_to,
                        ElementSet contract);

// Memoizes beta and beta* of minors of a fixed matroid; used by the
// filtration-sum and classification loops where the same minors recur.
class BetaCache {
 public:
  explicit BetaCache(const Matroid& m) : m_(&m) {}

  long long beta(ElementSet restrict_to, ElementSet contract) {
    return lookup(restrict_to, contract, /*internal_side=*/true);
  }
  long long beta_star(ElementSet restrict_to, ElementSet contract) {
    return lookup(restrict_to, contract, /*internal_side=*/false);
  }

  const Matroid& matroid() const { return *m_; }

 private:
  struct Key {
    Mask restrict_bits;
    Mask contract_bits;
    bool internal_side;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<Mask>()(k.restrict_bits);
      h ^= std::hash<Mask>()(k.contract_bits) + 0x9e3779b97f4a7c15ULL +
           (h << 6) + (h >> 2);
      return h * 2u + (k.internal_side ? 1u : 0u);
    }
  };

  long long lookup(ElementSet restrict_to, ElementSet contract,
                   bool internal_side) {
    const Key key{restrict_to.bits(), contract.bits(), internal_side};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const long long value =
        count_uniactive_bases(*m_, restrict_to, contract, internal_side);
    memo_.emplace(key, value);
    return value;
  }

  const Matroid* m_;
  std::unordered_map<Key, long long, KeyHash> memo_;
};

}  // namespace matact::detail

#endif  // MATACT_DETAIL_MINOR_OPS_HPP
