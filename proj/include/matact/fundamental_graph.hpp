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

#ifndef MATACT_FUNDAMENTAL_GRAPH_HPP
#define MATACT_FUNDAMENTAL_GRAPH_HPP

#include <array>
#include <string>
#include <vector>

#include "matact/matroid.hpp"

namespace matact {

// The fundamental bipartite graph/tableau of a basis: for b in B the
// neighbors are C*(B;b)\{b}, for e outside B the neighbors are C(B;e)\{e}.
// Everything downstream of matroid construction consumes only this structure.
//
// Standalone graphs (not derived from a matroid) are allowed: every bipartite
// graph on (B, E\B) is the fundamental graph of some basis.
class FundamentalGraph {
 public:
  // Validates bipartiteness (edges only across the bipartition) and
  // symmetric adjacency.
  FundamentalGraph(GroundSet ground, ElementSet basis_side,
                   const std::vector<std::pair<int, ElementSet>>& adjacency);

  const GroundSet& ground() const { return ground_; }
  ElementSet basis_side() const { return basis_side_; }
  ElementSet cobasis_side() const { return ground_.all() - basis_side_; }

  // Neighbors of an element (the other side of its fundamental circuit or
  // cocircuit).
  ElementSet adjacent(int element) const {
    return adj_[static_cast<std::size_t>(element)];
  }

  // C*(B;b) for b on the basis side.
  ElementSet cocircuit(int b) const;
  // C(B;e) for e on the cobasis side.
  ElementSet circuit(int e) const;

  friend bool operator==(const FundamentalGraph& a, const FundamentalGraph& b);

 private:
  friend FundamentalGraph fg_dual(const FundamentalGraph&);
  friend FundamentalGraph fg_remove(const FundamentalGraph&, ElementSet);
  FundamentalGraph() = default;

  GroundSet ground_;
  ElementSet basis_side_;
  std::array<ElementSet, kMaxLabel + 2> adj_{};
};

// Fundamental graph of a basis of a matroid. Errors: kNotABasis.
FundamentalGraph fundamental_graph(const Matroid& m, ElementSet basis);

// Parts swapped, same edges; an involution.
FundamentalGraph fg_dual(const FundamentalGraph& fg);

// Removes the vertices in `removed` and their incident edges; the ground set
// shrinks accordingly.
FundamentalGraph fg_remove(const FundamentalGraph& fg, ElementSet removed);

struct ActivitySets {
  ElementSet internally_active;  // Int: {b in B : b = min C*(B;b)}
  ElementSet externally_active;  // Ext: {e not in B : e = min C(B;e)}

  int iota() const { return internally_active.size(); }
  int epsilon() const { return externally_active.size(); }
};

ActivitySets activity_sets(const FundamentalGraph& fg);

// Uniactive internal: Int = {min E} and Ext empty (activities (1,0));
// dually for uniactive external. Errors: kEmptyGroundSet.
bool is_uniactive_internal(const FundamentalGraph& fg);
bool is_uniactive_external(const FundamentalGraph& fg);

// Tableau text: rows/columns in increasing label order, `#` for an entry,
// `.` for zero, the diagonal bracketed.
std::string render_tableau(const FundamentalGraph& fg);

}  // namespace matact

#endif  // MATACT_FUNDAMENTAL_GRAPH_HPP
