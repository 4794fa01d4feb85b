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

#include "matact/decomposition.hpp"

#include <algorithm>

#include "matact/fundamental_graph.hpp"
#include "matact/tutte.hpp"

namespace matact {

BasisDecomposition decompose_basis(const Matroid& m, ElementSet basis) {
  if (!m.is_basis(basis)) {
    fail(ErrorCode::kNotABasis, "cannot decompose a non-basis");
  }
  const FundamentalGraph fg = fundamental_graph(m, basis);
  Filtration f = active_filtration(fg);

  // The theorem's disjointness rests on these postconditions; re-verify all
  // of them before handing the decomposition out.
  if (!is_connected_filtration(m, f)) {
    fail(ErrorCode::kInternalCheckFailed,
         "active filtration of a basis is not connected");
  }

  BasisDecomposition out{basis, f, {}, {}};
  ElementSet covered;
  const ActivitySets activity = activity_sets(fg);

  for (int k = 1; k <= f.iota(); ++k) {
    Matroid mk = minor(m, f.internal_set(k), f.internal_set(k - 1));
    const ElementSet bk = basis & f.internal_diff(k);
    if (!mk.is_basis(bk) ||
        !is_uniactive_internal(fundamental_graph(mk, bk))) {
      fail(ErrorCode::kInternalCheckFailed,
           "internal piece is not a uniactive internal basis of its minor");
    }
    covered = covered | bk;
    out.internal_pieces.push_back({std::move(mk), bk});
  }
  for (int k = 1; k <= f.epsilon(); ++k) {
    Matroid mk = minor(m, f.external_set(k - 1), f.external_set(k));
    const ElementSet bk = basis & f.external_diff(k);
    if (!mk.is_basis(bk) ||
        !is_uniactive_external(fundamental_graph(mk, bk))) {
      fail(ErrorCode::kInternalCheckFailed,
           "external piece is not a uniactive external basis of its minor");
    }
    covered = covered | bk;
    out.external_pieces.push_back({std::move(mk), bk});
  }
  if (covered != basis) {
    fail(ErrorCode::kInternalCheckFailed, "pieces do not partition the basis");
  }

  // Activity transport: Int(B) = {a_k}, Ext(B) = {a'_k}.
  ElementSet internal_keys, external_keys;
  for (int k = 1; k <= f.iota(); ++k) {
    internal_keys = internal_keys.with(f.internal_diff(k).min());
  }
  for (int k = 1; k <= f.epsilon(); ++k) {
    external_keys = external_keys.with(f.external_diff(k).min());
  }
  if (internal_keys != activity.internally_active ||
      external_keys != activity.externally_active) {
    fail(ErrorCode::kInternalCheckFailed,
         "filtration keys disagree with the basis activities");
  }
  return out;
}

ElementSet recompose(const Matroid& m, const Filtration& f,
                     const std::vector<ElementSet>& internal_bases,
                     const std::vector<ElementSet>& external_bases) {
  if (!is_connected_filtration(m, f)) {
    fail(ErrorCode::kNotConnectedFiltration,
         "recompose needs a connected filtration");
  }
  if (internal_bases.size() != static_cast<std::size_t>(f.iota()) ||
      external_bases.size() != static_cast<std::size_t>(f.epsilon())) {
    fail(ErrorCode::kPartNotABasisOfMinor,
         "wrong number of uniactive parts for the filtration");
  }

  ElementSet basis;
  for (int k = 1; k <= f.iota(); ++k) {
    const ElementSet bk = internal_bases[static_cast<std::size_t>(k - 1)];
    const Matroid mk = minor(m, f.internal_set(k), f.internal_set(k - 1));
    if (!bk.subset_of(f.internal_diff(k)) || !mk.is_basis(bk)) {
      fail(ErrorCode::kPartNotABasisOfMinor,
           "internal part " + std::to_string(k) + " is not a basis of its minor");
    }
    if (!is_uniactive_internal(fundamental_graph(mk, bk))) {
      fail(ErrorCode::kPartNotUniactive,
           "internal part " + std::to_string(k) + " is not uniactive internal");
    }
    basis = basis | bk;
  }
  for (int k = 1; k <= f.epsilon(); ++k) {
    const ElementSet bk = external_bases[static_cast<std::size_t>(k - 1)];
    const Matroid mk = minor(m, f.external_set(k - 1), f.external_set(k));
    if (!bk.subset_of(f.external_diff(k)) || !mk.is_basis(bk)) {
      fail(ErrorCode::kPartNotABasisOfMinor,
           "external part " + std::to_string(k) + " is not a basis of its minor");
    }
    if (!is_uniactive_external(fundamental_graph(mk, bk))) {
      fail(ErrorCode::kPartNotUniactive,
           "external part " + std::to_string(k) + " is not uniactive external");
    }
    basis = basis | bk;
  }

  if (!m.is_basis(basis)) {
    fail(ErrorCode::kInternalCheckFailed,
         "assembled parts do not form a basis");
  }
  // The theorem makes the assembled basis decompose back to the inputs.
  if (!(active_filtration(fundamental_graph(m, basis)) == f)) {
    fail(ErrorCode::kInternalCheckFailed,
         "assembled basis has a different active filtration");
  }
  return basis;
}

BasisClassification classify_all_bases(const Matroid& m) {
  BasisClassification out;
  long long total = 0;
  for (ElementSet b : m.bases()) {
    const BasisDecomposition dec = decompose_basis(m, b);
    const std::string key = dec.filtration.text(m.ground());
    auto it = out.fibers.find(key);
    if (it == out.fibers.end()) {
      it = out.fibers.emplace(key, BasisClassification::Fiber{dec.filtration, {}})
               .first;
    }
    it->second.bases.push_back(b);
    ++total;
  }
  for (auto& [key, fiber] : out.fibers) {
    std::sort(fiber.bases.begin(), fiber.bases.end(), lex_less);
    if (!is_connected_filtration(m, fiber.filtration)) {
      fail(ErrorCode::kInternalCheckFailed,
           "classification key is not a connected filtration");
    }
    if (static_cast<long long>(fiber.bases.size()) !=
        beta_product(m, fiber.filtration)) {
      fail(ErrorCode::kInternalCheckFailed,
           "fiber size differs from the beta product at " + key);
    }
  }
  if (total != static_cast<long long>(m.bases().size())) {
    fail(ErrorCode::kInternalCheckFailed, "fibers do not cover all bases");
  }
  return out;
}

UniactiveBases uniactive_bases(const Matroid& m) {
  UniactiveBases out;
  for (ElementSet b : m.bases()) {
    const ActivitySets a = activity_sets(fundamental_graph(m, b));
    if (a.iota() == 1 && a.epsilon() == 0) out.internal.push_back(b);
    if (a.iota() == 0 && a.epsilon() == 1) out.external.push_back(b);
  }
  return out;
}

std::vector<std::pair<ElementSet, ElementSet>> swap_min_bijection(
    const Matroid& m) {
  if (m.ground().size() < 2) {
    fail(ErrorCode::kGroundTooSmall,
         "the swap bijection needs at least two elements");
  }
  const int p = m.ground().all().min();
  const int q = (m.ground().all().without(p)).min();
  auto swap_labels = [&](ElementSet s) {
    ElementSet out = s;
    const bool has_p = s.contains(p), has_q = s.contains(q);
    if (has_p != has_q) {
      out = has_p ? s.without(p).with(q) : s.without(q).with(p);
    }
    return out;
  };

  const UniactiveBases ub = uniactive_bases(m);
  std::vector<std::pair<ElementSet, ElementSet>> out;
  out.reserve(ub.internal.size());
  std::vector<ElementSet> hit;
  for (ElementSet b : ub.internal) {
    const ElementSet partner = swap_labels(b);
    const ActivitySets a = activity_sets(fundamental_graph(m, partner));
    if (!m.is_basis(partner) || a.iota() != 0 || a.epsilon() != 1) {
      fail(ErrorCode::kNotABijection,
           "swap image of a uniactive internal basis is not uniactive external");
    }
    hit.push_back(partner);
    out.emplace_back(b, partner);
  }
  std::sort(hit.begin(), hit.end(), lex_less);
  std::vector<ElementSet> external_sorted = ub.external;
  std::sort(external_sorted.begin(), external_sorted.end(), lex_less);
  if (hit != external_sorted) {
    fail(ErrorCode::kNotABijection,
         "swap images do not exhaust the uniactive external bases");
  }
  return out;
}

EtlvSplit etlv_split(const Matroid& m, ElementSet basis) {
  if (!m.is_basis(basis)) {
    fail(ErrorCode::kNotABasis, "cannot split a non-basis");
  }
  const FundamentalGraph fg = fundamental_graph(m, basis);
  const auto [internal_part, external_part] = internal_external_partition(fg);
  EtlvSplit out{external_part, basis & external_part, basis - external_part};

  // Postconditions from the two-piece decomposition, cross-checked against
  // the full decomposition's truncation at F_c.
  const ActivitySets a = activity_sets(fg);
  const Matroid restriction = minor(m, external_part, ElementSet());
  const Matroid contraction = minor(m, m.ground().all(), external_part);
  bool ok = restriction.is_basis(out.external_basis) &&
            contraction.is_basis(out.internal_basis);
  if (ok && !external_part.empty()) {
    const ActivitySets ar =
        activity_sets(fundamental_graph(restriction, out.external_basis));
    ok = ar.iota() == 0 && ar.externally_active == a.externally_active;
  }
  if (ok && external_part != m.ground().all()) {
    const ActivitySets ac =
        activity_sets(fundamental_graph(contraction, out.internal_basis));
    ok = ac.epsilon() == 0 && ac.internally_active == a.internally_active;
  }
  if (ok) {
    const Filtration f = active_filtration(fg);
    ok = f.cyclic_set() == external_part;
  }
  if (!ok) {
    fail(ErrorCode::kInternalCheckFailed,
         "two-piece split postconditions failed");
  }
  return out;
}

}  // namespace matact
