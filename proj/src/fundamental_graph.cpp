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

#include "matact/fundamental_graph.hpp"

namespace matact {

FundamentalGraph::FundamentalGraph(
    GroundSet ground, ElementSet basis_side,
    const std::vector<std::pair<int, ElementSet>>& adjacency)
    : ground_(std::move(ground)), basis_side_(basis_side) {
  if (!ground_.contains(basis_side_)) {
    fail(ErrorCode::kElementOutsideGround, "basis side outside ground set");
  }
  for (const auto& [e, nbrs] : adjacency) {
    if (!ground_.contains(e) || !ground_.contains(nbrs)) {
      fail(ErrorCode::kElementOutsideGround, "adjacency outside ground set");
    }
    adj_[static_cast<std::size_t>(e)] = adj_[static_cast<std::size_t>(e)] | nbrs;
    for (int f : nbrs) {
      adj_[static_cast<std::size_t>(f)] =
          adj_[static_cast<std::size_t>(f)].with(e);
    }
  }
  const ElementSet cobasis = cobasis_side();
  for (int e : ground_.all()) {
    const ElementSet nbrs = adj_[static_cast<std::size_t>(e)];
    const ElementSet opposite = basis_side_.contains(e) ? cobasis : basis_side_;
    if (!nbrs.subset_of(opposite)) {
      fail(ErrorCode::kElementOnWrongSide,
           "edge inside one side of the bipartition at element " +
               std::to_string(e));
    }
  }
}

ElementSet FundamentalGraph::cocircuit(int b) const {
  if (!basis_side_.contains(b)) {
    fail(ErrorCode::kElementOnWrongSide,
         "cocircuit of a non-basis element " + std::to_string(b));
  }
  return adjacent(b).with(b);
}

ElementSet FundamentalGraph::circuit(int e) const {
  if (!cobasis_side().contains(e)) {
    fail(ErrorCode::kElementOnWrongSide,
         "circuit of a basis element " + std::to_string(e));
  }
  return adjacent(e).with(e);
}

bool operator==(const FundamentalGraph& a, const FundamentalGraph& b) {
  if (!(a.ground_ == b.ground_) || a.basis_side_ != b.basis_side_) return false;
  for (int e : a.ground_.all()) {
    if (a.adjacent(e) != b.adjacent(e)) return false;
  }
  return true;
}

FundamentalGraph fundamental_graph(const Matroid& m, ElementSet basis) {
  if (!m.is_basis(basis)) {
    fail(ErrorCode::kNotABasis, "fundamental graph of a non-basis");
  }
  FundamentalGraph fg;
  fg.ground_ = m.ground();
  fg.basis_side_ = basis;
  for (int b : basis) {
    fg.adj_[static_cast<std::size_t>(b)] =
        fundamental_cocircuit(m, basis, b).without(b);
  }
  for (int e : m.ground().all() - basis) {
    fg.adj_[static_cast<std::size_t>(e)] =
        fundamental_circuit(m, basis, e).without(e);
  }
  return fg;
}

FundamentalGraph fg_dual(const FundamentalGraph& fg) {
  FundamentalGraph out = fg;
  out.basis_side_ = fg.cobasis_side();
  return out;
}

FundamentalGraph fg_remove(const FundamentalGraph& fg, ElementSet removed) {
  if (!fg.ground().contains(removed)) {
    fail(ErrorCode::kElementOutsideGround, "removal set outside ground set");
  }
  FundamentalGraph out;
  out.ground_ = GroundSet(fg.ground().all() - removed);
  out.basis_side_ = fg.basis_side() - removed;
  for (int e : out.ground_.all()) {
    out.adj_[static_cast<std::size_t>(e)] = fg.adjacent(e) - removed;
  }
  return out;
}

ActivitySets activity_sets(const FundamentalGraph& fg) {
  ActivitySets out;
  for (int b : fg.basis_side()) {
    if (fg.adjacent(b).below(b).empty()) {
      out.internally_active = out.internally_active.with(b);
    }
  }
  for (int e : fg.cobasis_side()) {
    if (fg.adjacent(e).below(e).empty()) {
      out.externally_active = out.externally_active.with(e);
    }
  }
  return out;
}

bool is_uniactive_internal(const FundamentalGraph& fg) {
  if (fg.ground().empty()) {
    fail(ErrorCode::kEmptyGroundSet, "uniactivity of the empty ground set");
  }
  const ActivitySets a = activity_sets(fg);
  return a.externally_active.empty() &&
         a.internally_active == ElementSet().with(fg.ground().all().min());
}

bool is_uniactive_external(const FundamentalGraph& fg) {
  if (fg.ground().empty()) {
    fail(ErrorCode::kEmptyGroundSet, "uniactivity of the empty ground set");
  }
  const ActivitySets a = activity_sets(fg);
  return a.internally_active.empty() &&
         a.externally_active == ElementSet().with(fg.ground().all().min());
}

std::string render_tableau(const FundamentalGraph& fg) {
  std::string out;
  const std::vector<int> labels = fg.ground().labels();
  for (int row : labels) {
    // Row entries: diagonal plus, for a cobasis row, its circuit.
    const bool row_in_basis = fg.basis_side().contains(row);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const int col = labels[i];
      const bool entry =
          (col == row) ||
          (!row_in_basis && fg.basis_side().contains(col) &&
           fg.adjacent(row).contains(col));
      if (i > 0) out += ' ';
      if (col == row) {
        out += "[#]";
      } else {
        out += entry ? " # " : " . ";
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace matact
