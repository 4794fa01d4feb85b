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

#ifndef MATACT_ACTIVE_CLOSURE_HPP
#define MATACT_ACTIVE_CLOSURE_HPP

#include <utility>
#include <vector>

#include "matact/filtration.hpp"
#include "matact/fundamental_graph.hpp"

namespace matact {

// Active closure of X <= Int(F): the smallest set containing X that absorbs
// the whole cocircuit of each of its basis elements and pulls in every basis
// element b with nonempty C*(B;b)^< contained in it.
//
// Computed by a single increasing pass over the ground set, cross-checked
// against the fixed-point iteration and the basis-element sweep; a mismatch
// aborts the operation. Errors: kNotInternallyActive.
ElementSet acl_internal(const FundamentalGraph& fg, ElementSet x);

// Dual closure for X <= Ext(F): equals acl_internal(fg_dual(F), X).
// Errors: kNotExternallyActive.
ElementSet acl_external(const FundamentalGraph& fg, ElementSet x);

// (acl(Int(F)), acl(Ext(F))): a bipartition of E, computed by the
// single-pass rule and cross-checked against the two closures.
std::pair<ElementSet, ElementSet> internal_external_partition(
    const FundamentalGraph& fg);

// The active filtration: F_k = E \ acl({a_{k+1}..a_iota}),
// F'_k = acl({a'_{k+1}..a'_eps}), F_c = acl(Ext(F)).
Filtration active_filtration(const FundamentalGraph& fg);

// The active partition of the ground set: the fibers of the Part mapping,
// listed in chain order (the successive differences of the active
// filtration, external side first). Each part contains its key as minimum.
struct ActivePartition {
  struct Part {
    int key = 0;             // the active element keying the part
    bool internal_side = false;
    ElementSet elements;
  };

  std::vector<Part> parts;   // chain order: F'_{eps-1}\F'_eps, .., F_iota\F_{iota-1}
  ElementSet external_part;  // F_c = union of externally keyed parts
  ElementSet internal_part;  // E \ F_c

  // Part(e): the smallest element of the part containing e.
  int part_of(int element) const;
};

// Single-pass computation of the active partition; cross-checked against the
// successive differences of the active filtration.
ActivePartition active_partition(const FundamentalGraph& fg);

}  // namespace matact

#endif  // MATACT_ACTIVE_CLOSURE_HPP
