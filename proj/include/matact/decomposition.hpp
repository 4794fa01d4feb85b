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

#ifndef MATACT_DECOMPOSITION_HPP
#define MATACT_DECOMPOSITION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "matact/active_closure.hpp"
#include "matact/filtration.hpp"
#include "matact/matroid.hpp"

namespace matact {

// The unique decomposition of a basis along its active filtration: each
// internal part B_k = B n (F_k \ F_{k-1}) is a uniactive internal basis of
// M(F_k)/F_{k-1}, each external part B'_k a uniactive external basis of
// M(F'_{k-1})/F'_k. An isthmus minor contributes that isthmus; a loop minor
// contributes the empty basis.
struct BasisDecomposition {
  struct Piece {
    Matroid minor;     // the induced minor
    ElementSet basis;  // the uniactive basis induced by B
  };

  ElementSet basis;
  Filtration filtration;
  std::vector<Piece> internal_pieces;  // k = 1..iota
  std::vector<Piece> external_pieces;  // k = 1..epsilon
};

// Decomposes a basis; re-verifies every uniactivity postcondition and the
// connectedness of the filtration before returning. Errors: kNotABasis.
BasisDecomposition decompose_basis(const Matroid& m, ElementSet basis);

// Reassembles a basis from a connected filtration and uniactive bases of its
// induced minors; the result's decomposition round-trips to the inputs.
// Errors: kNotConnectedFiltration, kPartNotABasisOfMinor, kPartNotUniactive.
ElementSet recompose(const Matroid& m, const Filtration& f,
                     const std::vector<ElementSet>& internal_bases,
                     const std::vector<ElementSet>& external_bases);

// Groups every basis under its active filtration, keyed by the canonical
// filtration text. Verifies that keys are connected filtrations, fibers are
// disjoint and cover all bases, and each fiber size equals beta_product.
struct BasisClassification {
  struct Fiber {
    Filtration filtration;
    std::vector<ElementSet> bases;  // lexicographic order
  };
  std::map<std::string, Fiber> fibers;
};

BasisClassification classify_all_bases(const Matroid& m);

// Bases with activities (1,0) and (0,1); |internal| = beta, |external| =
// beta*.
struct UniactiveBases {
  std::vector<ElementSet> internal;
  std::vector<ElementSet> external;
};

UniactiveBases uniactive_bases(const Matroid& m);

// Exchanging the two smallest elements of E maps uniactive internal bases
// bijectively onto uniactive external bases. Returned as (internal,
// external) pairs. Errors: kGroundTooSmall; kNotABijection signals an
// internal inconsistency.
std::vector<std::pair<ElementSet, ElementSet>> swap_min_bijection(
    const Matroid& m);

// The two-piece split: F_c = external part of the fundamental graph;
// B n F_c is a basis of M(F_c) with internal activity 0 and the same Ext;
// B \ F_c is a basis of M/F_c with external activity 0 and the same Int.
struct EtlvSplit {
  ElementSet cyclic_flat;     // F_c
  ElementSet external_basis;  // B n F_c
  ElementSet internal_basis;  // B \ F_c
};

EtlvSplit etlv_split(const Matroid& m, ElementSet basis);

}  // namespace matact

#endif  // MATACT_DECOMPOSITION_HPP
