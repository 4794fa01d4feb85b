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

#include "matact/active_closure.hpp"

#include <algorithm>
#include <array>

namespace matact {

namespace {

// Single increasing pass over the ground set.
ElementSet acl_linear_pass(const FundamentalGraph& fg, ElementSet x,
                           ElementSet internally_active) {
  ElementSet out;
  for (int e : fg.ground().all()) {
    if (x.contains(e)) {
      out = out.with(e);
    } else if (fg.basis_side().contains(e)) {
      if (!internally_active.contains(e) &&
          fg.adjacent(e).below(e).subset_of(out)) {
        out = out.with(e);
      }
    } else if (fg.adjacent(e).below(e).intersects(out)) {
      out = out.with(e);
    }
  }
  return out;
}

// Fixed-point iteration of the one-step closure operator.
ElementSet acl_fixed_point(const FundamentalGraph& fg, ElementSet x) {
  ElementSet current = x;
  for (;;) {
    ElementSet next = current;
    for (int b : fg.basis_side() & current) {
      next = next | fg.cocircuit(b);
    }
    for (int b : fg.basis_side() - current) {
      const ElementSet lower = fg.adjacent(b).below(b);
      if (!lower.empty() && lower.subset_of(current)) next = next.with(b);
    }
    if (next == current) return current;
    current = next;
  }
}

// Sweep over the basis side in increasing order, absorbing cocircuits.
ElementSet acl_basis_sweep(const FundamentalGraph& fg, ElementSet x) {
  ElementSet out;
  for (int b : fg.basis_side()) {
    const ElementSet lower = fg.adjacent(b).below(b);
    if (x.contains(b) || (!lower.empty() && lower.subset_of(out))) {
      out = out | fg.cocircuit(b);
    }
  }
  return out;
}

ElementSet acl_checked(const FundamentalGraph& fg, ElementSet x,
                       ElementSet internally_active) {
  const ElementSet result = acl_linear_pass(fg, x, internally_active);
  const ElementSet by_iteration = acl_fixed_point(fg, x);
  const ElementSet by_sweep = acl_basis_sweep(fg, x);
  if (result != by_iteration || result != by_sweep) {
    fail(ErrorCode::kInternalCheckFailed,
         "active-closure algorithms disagree on " + set_text(x));
  }
  return result;
}

}  // namespace

ElementSet acl_internal(const FundamentalGraph& fg, ElementSet x) {
  const ElementSet internally_active = activity_sets(fg).internally_active;
  if (!x.subset_of(internally_active)) {
    fail(ErrorCode::kNotInternallyActive,
         "closure argument not internally active: " +
             set_text(x - internally_active));
  }
  return acl_checked(fg, x, internally_active);
}

ElementSet acl_external(const FundamentalGraph& fg, ElementSet x) {
  const ElementSet externally_active = activity_sets(fg).externally_active;
  if (!x.subset_of(externally_active)) {
    fail(ErrorCode::kNotExternallyActive,
         "closure argument not externally active: " +
             set_text(x - externally_active));
  }
  return acl_internal(fg_dual(fg), x);
}

std::pair<ElementSet, ElementSet> internal_external_partition(
    const FundamentalGraph& fg) {
  ElementSet internal, external;
  for (int e : fg.ground().all()) {
    if (fg.basis_side().contains(e)) {
      if (fg.adjacent(e).below(e).intersects(external)) {
        external = external.with(e);
      } else {
        internal = internal.with(e);
      }
    } else {
      if (fg.adjacent(e).below(e).intersects(internal)) {
        internal = internal.with(e);
      } else {
        external = external.with(e);
      }
    }
  }
  const ActivitySets activity = activity_sets(fg);
  if (internal != acl_internal(fg, activity.internally_active) ||
      external != acl_external(fg, activity.externally_active)) {
    fail(ErrorCode::kInternalCheckFailed,
         "single-pass partition disagrees with the closures");
  }
  return {internal, external};
}

Filtration active_filtration(const FundamentalGraph& fg) {
  const ActivitySets activity = activity_sets(fg);
  const std::vector<int> internal_keys = activity.internally_active.labels();
  const std::vector<int> external_keys = activity.externally_active.labels();
  const std::size_t iota = internal_keys.size();
  const std::size_t eps = external_keys.size();
  const ElementSet all = fg.ground().all();

  auto key_tail = [](const std::vector<int>& keys, std::size_t from) {
    ElementSet s;
    for (std::size_t j = from; j < keys.size(); ++j) s = s.with(keys[j]);
    return s;
  };

  std::vector<ElementSet> chain;
  chain.reserve(iota + eps + 1);

  // F'_eps = empty, then F'_k = acl({a'_{k+1}..a'_eps}) up to F'_0 = F_c.
  chain.push_back(ElementSet());
  for (std::size_t k = eps; k-- > 0;) {
    chain.push_back(acl_external(fg, key_tail(external_keys, k)));
  }
  const std::size_t cyclic_index = eps;

  // F_0 = F_c must agree with E \ acl(Int); the partition of E into the two
  // closures guarantees it.
  const ElementSet internal_closure =
      acl_internal(fg, activity.internally_active);
  if (chain[cyclic_index] != all - internal_closure) {
    fail(ErrorCode::kInternalCheckFailed,
         "acl(Ext) and E \\ acl(Int) disagree");
  }

  // F_k = E \ acl({a_{k+1}..a_iota}) for k < iota, then F_iota = E.
  for (std::size_t k = 1; k < iota; ++k) {
    chain.push_back(all - acl_internal(fg, key_tail(internal_keys, k)));
  }
  if (iota > 0) chain.push_back(all);

  Filtration f = Filtration::validate(fg.ground(), std::move(chain), cyclic_index);

  // min(F_k \ F_{k-1}) = a_k and min(F'_{k-1} \ F'_k) = a'_k.
  for (int k = 1; k <= f.iota(); ++k) {
    if (f.internal_diff(k).min() != internal_keys[static_cast<std::size_t>(k - 1)]) {
      fail(ErrorCode::kInternalCheckFailed, "internal step key mismatch");
    }
  }
  for (int k = 1; k <= f.epsilon(); ++k) {
    if (f.external_diff(k).min() != external_keys[static_cast<std::size_t>(k - 1)]) {
      fail(ErrorCode::kInternalCheckFailed, "external step key mismatch");
    }
  }
  return f;
}

int ActivePartition::part_of(int element) const {
  for (const Part& part : parts) {
    if (part.elements.contains(element)) return part.key;
  }
  fail(ErrorCode::kElementOutsideGround,
       "element outside the partitioned ground set: " + std::to_string(element));
}

ActivePartition active_partition(const FundamentalGraph& fg) {
  const ActivitySets activity = activity_sets(fg);
  std::array<int, kMaxLabel + 2> part_key{};
  ElementSet internal, external;

  // Single pass: an active element starts its own part; any other element
  // joins the part of a neighbor below it — the greatest key among
  // other-side neighbors when it crosses sides, else the smallest key among
  // own-side neighbors. Keys compare by numeric label.
  for (int e : fg.ground().all()) {
    const bool on_basis_side = fg.basis_side().contains(e);
    const ElementSet lower = fg.adjacent(e).below(e);
    const ElementSet active_here =
        on_basis_side ? activity.internally_active : activity.externally_active;

    if (active_here.contains(e)) {
      part_key[static_cast<std::size_t>(e)] = e;
      if (on_basis_side) {
        internal = internal.with(e);
      } else {
        external = external.with(e);
      }
      continue;
    }

    const ElementSet other_side = on_basis_side ? external : internal;
    const ElementSet crossing = lower & other_side;
    bool goes_internal;
    int key;
    if (!crossing.empty()) {
      key = -1;
      for (int c : crossing) {
        key = std::max(key, part_key[static_cast<std::size_t>(c)]);
      }
      goes_internal = !on_basis_side;
    } else {
      key = kMaxLabel + 1;
      for (int c : lower) {
        key = std::min(key, part_key[static_cast<std::size_t>(c)]);
      }
      goes_internal = on_basis_side;
    }
    part_key[static_cast<std::size_t>(e)] = key;
    if (goes_internal) {
      internal = internal.with(e);
    } else {
      external = external.with(e);
    }
  }

  ActivePartition out;
  out.internal_part = internal;
  out.external_part = external;

  // Fibers of Part in chain order: external keys descending, then internal
  // keys ascending.
  auto fiber = [&](int key) {
    ElementSet elements;
    for (int e : fg.ground().all()) {
      if (part_key[static_cast<std::size_t>(e)] == key) elements = elements.with(e);
    }
    return elements;
  };
  const std::vector<int> external_keys = activity.externally_active.labels();
  for (std::size_t i = external_keys.size(); i-- > 0;) {
    out.parts.push_back({external_keys[i], false, fiber(external_keys[i])});
  }
  for (int key : activity.internally_active) {
    out.parts.push_back({key, true, fiber(key)});
  }

  // Cross-check against the successive differences of the active filtration.
  const Filtration f = active_filtration(fg);
  bool consistent = out.parts.size() == f.chain().size() - 1 &&
                    out.external_part == f.cyclic_set();
  for (std::size_t i = 0; consistent && i < out.parts.size(); ++i) {
    const ElementSet diff = f.chain()[i + 1] - f.chain()[i];
    consistent = out.parts[i].elements == diff && out.parts[i].key == diff.min();
  }
  if (!consistent) {
    fail(ErrorCode::kInternalCheckFailed,
         "active partition disagrees with the active filtration");
  }
  return out;
}

}  // namespace matact
