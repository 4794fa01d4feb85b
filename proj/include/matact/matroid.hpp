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

#ifndef MATACT_MATROID_HPP
#define MATACT_MATROID_HPP

#include <array>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "matact/element_set.hpp"

namespace matact {

// A matroid on a linearly ordered ground set, represented by its explicit
// basis family. All bases have the same cardinality (the rank). Immutable
// after construction; every operation below is a pure function, so values can
// be shared freely across threads.
class Matroid {
 public:
  // Validating constructor: checks nonemptiness, uniform cardinality,
  // containment in the ground set, and the basis exchange axiom (exhaustive,
  // desk scale). Errors: kEmptyBases, kMixedRank, kElementOutsideGround,
  // kExchangeAxiomViolation.
  static Matroid from_bases(const GroundSet& ground,
                            std::vector<ElementSet> bases);

  // Constructor for basis families that are valid by construction
  // (uniform/graphic matroids, duals, minors, relabelings). Skips the
  // exchange-axiom sweep but still normalizes the family.
  static Matroid from_valid_bases(const GroundSet& ground,
                                  std::vector<ElementSet> bases);

  const GroundSet& ground() const { return ground_; }
  int rank() const { return rank_; }

  // Bases in lexicographic order of their sorted label sequences.
  const std::vector<ElementSet>& bases() const { return bases_; }

  bool is_basis(ElementSet s) const {
    return basis_lookup_.count(s.bits()) != 0;
  }

  // rank(A) = max over bases B of |B n A|; valid for the explicit-bases
  // representation. A must be a subset of the ground set.
  int rank_of(ElementSet subset) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.ground_ == b.ground_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(GroundSet ground, std::vector<ElementSet> bases, bool validate);

  void build_rank_table();
  std::uint32_t compress(ElementSet s) const;

  GroundSet ground_;
  std::vector<ElementSet> bases_;
  std::unordered_set<Mask> basis_lookup_;
  int rank_ = 0;

  // rank_table_[compressed subset] = rank; built when the ground set is small
  // enough for the 2^n table to be cheap.
  std::vector<std::uint8_t> rank_table_;
  std::array<std::int8_t, kMaxLabel + 2> position_{};
};

// Bases = edge sets of maximal spanning forests; element i is the i-th edge
// (1-based, ground-set order = input order). Self-loops and parallel edges
// are permitted; vertices are 1..vertex_count.
Matroid graphic_matroid(int vertex_count,
                        const std::vector<std::pair<int, int>>& edges);

// U_{r,n} on ground set {1..n}: bases are all r-subsets.
// Errors: kRankOutOfRange.
Matroid uniform_matroid(int rank, int size);

// Bases of the dual are the complements of the bases; same ground order.
Matroid dual(const Matroid& m);

// M(restrict_to)/contract: restriction then contraction, on ground set
// restrict_to \ contract, keeping the original labels. Requires
// contract <= restrict_to <= E. Errors: kNotNested, kElementOutsideGround.
Matroid minor(const Matroid& m, ElementSet restrict_to, ElementSet contract);

// Relabels ground elements: old label ground.labels()[i] becomes new_labels[i].
// Used for ground-set reorderings; new_labels must be distinct.
Matroid relabel(const Matroid& m, const std::vector<int>& new_labels);

// All minimal dependent sets, in lexicographic order.
std::vector<ElementSet> circuits(const Matroid& m);
std::vector<ElementSet> cocircuits(const Matroid& m);

// C(B;e): the unique circuit inside B u {e}, for e outside the basis B.
// Errors: kNotABasis, kElementOnWrongSide.
ElementSet fundamental_circuit(const Matroid& m, ElementSet basis, int e);

// C*(B;b): the unique cocircuit inside (E\B) u {b}, for b in the basis B.
ElementSet fundamental_cocircuit(const Matroid& m, ElementSet basis, int b);

// True iff no proper nonempty A with rank(A) + rank(E\A) = rank(E).
// Single-element and empty matroids count as connected.
bool is_connected(const Matroid& m);

bool is_flat(const Matroid& m, ElementSet f);        // M/F has no loop
bool is_dual_flat(const Matroid& m, ElementSet f);   // M(F) has no isthmus
bool is_cyclic_flat(const Matroid& m, ElementSet f);
std::vector<ElementSet> cyclic_flats(const Matroid& m);

}  // namespace matact

#endif  // MATACT_MATROID_HPP
