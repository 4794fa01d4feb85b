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

#include "matact/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace matact {

namespace {

// Ground sets up to this size get a precomputed 2^n rank table.
constexpr int kRankTableLimit = 12;

std::string set_str(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : s) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

// Enumerates all size-k submasks of `universe`, calling fn(mask).
template <typename Fn>
void for_each_k_subset(ElementSet universe, int k, const Fn& fn) {
  std::vector<int> labels = universe.labels();
  const int n = static_cast<int>(labels.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
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

Matroid::Matroid(GroundSet ground, std::vector<ElementSet> bases, bool validate)
    : ground_(std::move(ground)) {
  if (bases.empty()) fail(ErrorCode::kEmptyBases, "matroid needs at least one basis");
  rank_ = bases.front().size();
  for (ElementSet b : bases) {
    if (b.size() != rank_) {
      fail(ErrorCode::kMixedRank, "bases of mixed cardinality: " + set_str(b));
    }
    if (!ground_.contains(b)) {
      fail(ErrorCode::kElementOutsideGround,
           "basis not inside ground set: " + set_str(b));
    }
  }
  std::sort(bases.begin(), bases.end(), lex_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  bases_ = std::move(bases);
  basis_lookup_.reserve(bases_.size() * 2);
  for (ElementSet b : bases_) basis_lookup_.insert(b.bits());

  if (validate) {
    for (ElementSet b1 : bases_) {
      for (ElementSet b2 : bases_) {
        if (b1 == b2) continue;
        for (int x : b1 - b2) {
          bool ok = false;
          for (int y : b2 - b1) {
            if (basis_lookup_.count(b1.without(x).with(y).bits())) {
              ok = true;
              break;
            }
          }
          if (!ok) {
            fail(ErrorCode::kExchangeAxiomViolation,
                 "exchange axiom fails for B1=" + set_str(b1) +
                     " B2=" + set_str(b2) + " x=" + std::to_string(x));
          }
        }
      }
    }
  }

  position_.fill(-1);
  int pos = 0;
  for (int e : ground_.labels()) position_[static_cast<std::size_t>(e)] = static_cast<std::int8_t>(pos++);
  if (ground_.size() <= kRankTableLimit) build_rank_table();
}

Matroid Matroid::from_bases(const GroundSet& ground,
                            std::vector<ElementSet> bases) {
  return Matroid(ground, std::move(bases), /*validate=*/true);
}

Matroid Matroid::from_valid_bases(const GroundSet& ground,
                                  std::vector<ElementSet> bases) {
  return Matroid(ground, std::move(bases), /*validate=*/false);
}

std::uint32_t Matroid::compress(ElementSet s) const {
  std::uint32_t out = 0;
  for (int e : s) out |= 1u << position_[static_cast<std::size_t>(e)];
  return out;
}

void Matroid::build_rank_table() {
  const int n = ground_.size();
  rank_table_.assign(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> cbases;
  cbases.reserve(bases_.size());
  for (ElementSet b : bases_) cbases.push_back(compress(b));
  for (std::uint32_t s = 0; s < rank_table_.size(); ++s) {
    int best = 0;
    for (std::uint32_t cb : cbases) {
      best = std::max(best, std::popcount(cb & s));
    }
    rank_table_[s] = static_cast<std::uint8_t>(best);
  }
}

int Matroid::rank_of(ElementSet subset) const {
  if (!ground_.contains(subset)) {
    fail(ErrorCode::kElementOutsideGround,
         "rank argument not inside ground set: " + set_str(subset));
  }
  if (!rank_table_.empty()) return rank_table_[compress(subset)];
  int best = 0;
  for (ElementSet b : bases_) {
    best = std::max(best, (b & subset).size());
  }
  return best;
}

Matroid graphic_matroid(int vertex_count,
                        const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 0) {
    fail(ErrorCode::kParseError, "negative vertex count");
  }
  const int n = static_cast<int>(edges.size());
  if (n > kMaxLabel) {
    fail(ErrorCode::kSizeBoundExceeded, "too many edges: " + std::to_string(n));
  }
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > vertex_count || v < 1 || v > vertex_count) {
      fail(ErrorCode::kParseError, "edge endpoint outside 1..vertex_count");
    }
  }

  // Union-find over vertices; rank = vertex_count - #components.
  std::vector<int> parent(static_cast<std::size_t>(vertex_count) + 1);
  auto reset = [&] { std::iota(parent.begin(), parent.end(), 0); };
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };

  reset();
  int components = vertex_count;
  for (const auto& [u, v] : edges) {
    int ru = find(u), rv = find(v);
    if (ru != rv) {
      parent[static_cast<std::size_t>(ru)] = rv;
      --components;
    }
  }
  const int rank = vertex_count - components;

  std::vector<ElementSet> bases;
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  for_each_k_subset(ElementSet::from_labels(all), rank, [&](ElementSet s) {
    reset();
    for (int i : s) {
      const auto& [u, v] = edges[static_cast<std::size_t>(i - 1)];
      int ru = find(u), rv = find(v);
      if (ru == rv) return;  // cycle (covers self-loops)
      parent[static_cast<std::size_t>(ru)] = rv;
    }
    bases.push_back(s);
  });
  return Matroid::from_valid_bases(GroundSet::first_n(n), std::move(bases));
}

Matroid uniform_matroid(int rank, int size) {
  if (rank < 0 || rank > size) {
    fail(ErrorCode::kRankOutOfRange,
         "uniform matroid needs 0 <= r <= n, got r=" + std::to_string(rank) +
             " n=" + std::to_string(size));
  }
  if (size > kMaxLabel) {
    fail(ErrorCode::kSizeBoundExceeded, "ground set too large");
  }
  GroundSet ground = GroundSet::first_n(size);
  std::vector<ElementSet> bases;
  for_each_k_subset(ground.all(), rank,
                    [&](ElementSet s) { bases.push_back(s); });
  return Matroid::from_valid_bases(ground, std::move(bases));
}

Matroid dual(const Matroid& m) {
  std::vector<ElementSet> bases;
  bases.reserve(m.bases().size());
  for (ElementSet b : m.bases()) bases.push_back(m.ground().all() - b);
  return Matroid::from_valid_bases(m.ground(), std::move(bases));
}

Matroid minor(const Matroid& m, ElementSet restrict_to, ElementSet contract) {
  if (!m.ground().contains(restrict_to)) {
    fail(ErrorCode::kElementOutsideGround, "restriction set outside ground");
  }
  if (!contract.subset_of(restrict_to)) {
    fail(ErrorCode::kNotNested, "contraction set not inside restriction set");
  }
  const ElementSet ground = restrict_to - contract;
  const int rank_f = m.rank_of(contract);
  const int rank = m.rank_of(restrict_to) - rank_f;
  std::vector<ElementSet> bases;
  for_each_k_subset(ground, rank, [&](ElementSet s) {
    if (m.rank_of(s | contract) == rank + rank_f) bases.push_back(s);
  });
  return Matroid::from_valid_bases(GroundSet(ground), std::move(bases));
}

Matroid relabel(const Matroid& m, const std::vector<int>& new_labels) {
  const std::vector<int> old_labels = m.ground().labels();
  if (new_labels.size() != old_labels.size()) {
    fail(ErrorCode::kParseError, "relabeling must cover the whole ground set");
  }
  std::array<int, kMaxLabel + 2> map{};
  for (std::size_t i = 0; i < old_labels.size(); ++i) {
    map[static_cast<std::size_t>(old_labels[i])] = new_labels[i];
  }
  auto remap = [&](ElementSet s) {
    ElementSet out;
    for (int e : s) out = out.with(map[static_cast<std::size_t>(e)]);
    return out;
  };
  std::vector<ElementSet> bases;
  bases.reserve(m.bases().size());
  for (ElementSet b : m.bases()) bases.push_back(remap(b));
  return Matroid::from_valid_bases(GroundSet(remap(m.ground().all())),
                                   std::move(bases));
}

std::vector<ElementSet> circuits(const Matroid& m) {
  // A is a circuit iff A is dependent and every A-e is independent.
  std::vector<ElementSet> out;
  const std::vector<int> labels = m.ground().labels();
  const int n = static_cast<int>(labels.size());
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    ElementSet a;
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1u) a = a.with(labels[static_cast<std::size_t>(i)]);
    }
    if (m.rank_of(a) != a.size() - 1) continue;
    bool minimal = true;
    for (int e : a) {
      ElementSet sub = a.without(e);
      if (m.rank_of(sub) != sub.size()) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<ElementSet> cocircuits(const Matroid& m) {
  return circuits(dual(m));
}

ElementSet fundamental_circuit(const Matroid& m, ElementSet basis, int e) {
  if (!m.is_basis(basis)) {
    fail(ErrorCode::kNotABasis, "not a basis: " + set_str(basis));
  }
  if (!m.ground().contains(e) || basis.contains(e)) {
    fail(ErrorCode::kElementOnWrongSide,
         "fundamental circuit needs e outside the basis");
  }
  ElementSet c = ElementSet().with(e);
  for (int b : basis) {
    if (m.is_basis(basis.without(b).with(e))) c = c.with(b);
  }
  return c;
}

ElementSet fundamental_cocircuit(const Matroid& m, ElementSet basis, int b) {
  if (!m.is_basis(basis)) {
    fail(ErrorCode::kNotABasis, "not a basis: " + set_str(basis));
  }
  if (!basis.contains(b)) {
    fail(ErrorCode::kElementOnWrongSide,
         "fundamental cocircuit needs b inside the basis");
  }
  ElementSet c = ElementSet().with(b);
  for (int e : m.ground().all() - basis) {
    if (m.is_basis(basis.without(b).with(e))) c = c.with(e);
  }
  return c;
}

bool is_connected(const Matroid& m) {
  const int n = m.ground().size();
  if (n <= 1) return true;
  const std::vector<int> labels = m.ground().labels();
  const int total = m.rank();
  // Fix the first element on one side to halve the sweep.
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << (n - 1)); ++s) {
    ElementSet a = ElementSet().with(labels[0]);
    for (int i = 1; i < n; ++i) {
      if ((s >> (i - 1)) & 1u) a = a.with(labels[static_cast<std::size_t>(i)]);
    }
    if (a.size() == n) continue;
    if (m.rank_of(a) + m.rank_of(m.ground().all() - a) == total) return false;
  }
  return true;
}

bool is_flat(const Matroid& m, ElementSet f) {
  if (!m.ground().contains(f)) {
    fail(ErrorCode::kElementOutsideGround, "flat argument outside ground");
  }
  const int rf = m.rank_of(f);
  for (int e : m.ground().all() - f) {
    if (m.rank_of(f.with(e)) == rf) return false;
  }
  return true;
}

bool is_dual_flat(const Matroid& m, ElementSet f) {
  if (!m.ground().contains(f)) {
    fail(ErrorCode::kElementOutsideGround, "dual-flat argument outside ground");
  }
  const int rf = m.rank_of(f);
  for (int e : f) {
    if (m.rank_of(f.without(e)) < rf) return false;  // e is an isthmus of M(F)
  }
  return true;
}

bool is_cyclic_flat(const Matroid& m, ElementSet f) {
  return is_flat(m, f) && is_dual_flat(m, f);
}

std::vector<ElementSet> cyclic_flats(const Matroid& m) {
  std::vector<ElementSet> out;
  const std::vector<int> labels = m.ground().labels();
  const int n = static_cast<int>(labels.size());
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    ElementSet a;
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1u) a = a.with(labels[static_cast<std::size_t>(i)]);
    }
    if (is_cyclic_flat(m, a)) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace matact
