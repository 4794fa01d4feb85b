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

#include <doctest.h>

#include "corpus.hpp"
#include "matact/io.hpp"

namespace matact {
namespace {

using testing::k4;

ElementSet S(std::initializer_list<int> labels) {
  return ElementSet::of(labels);
}

TEST_CASE("active closure on the paper's K4 bases") {
  const Matroid m = k4();
  const FundamentalGraph fg126 = fundamental_graph(m, S({1, 2, 6}));
  CHECK(acl_internal(fg126, S({2})) == S({2, 3, 4, 5, 6}));
  CHECK(acl_internal(fg126, ElementSet()).empty());

  const FundamentalGraph fg146 = fundamental_graph(m, S({1, 4, 6}));
  CHECK(acl_internal(fg146, S({1})) == S({1, 3, 5}));

  const FundamentalGraph fg256 = fundamental_graph(m, S({2, 5, 6}));
  CHECK(acl_external(fg256, S({3})) == S({3, 5, 6}));
  CHECK(acl_external(fg256, S({1, 3})) == m.ground().all());
  CHECK(acl_external(fg256, ElementSet()).empty());
}

TEST_CASE("closure arguments must be active on the right side") {
  const FundamentalGraph fg = fundamental_graph(k4(), S({1, 4, 6}));
  CHECK_THROWS_AS(acl_internal(fg, S({4})), Error);
  CHECK_THROWS_AS(acl_external(fg, S({1})), Error);
}

TEST_CASE("closure meets the active sets exactly in its argument") {
  for (const auto& [name, m] : testing::small_corpus()) {
    if (m.ground().size() > 6) continue;
    CAPTURE(name);
    for (ElementSet b : m.bases()) {
      const FundamentalGraph fg = fundamental_graph(m, b);
      const ActivitySets a = activity_sets(fg);
      const std::vector<int> keys = a.internally_active.labels();
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << keys.size()); ++s) {
        ElementSet x;
        for (std::size_t i = 0; i < keys.size(); ++i) {
          if ((s >> i) & 1u) x = x.with(keys[i]);
        }
        const ElementSet closure = acl_internal(fg, x);
        CHECK((closure & (a.internally_active | a.externally_active)) == x);
        if (closure == m.ground().all()) {
          CHECK(x == a.internally_active);
        }
        // Monotonicity against the full closure.
        CHECK(closure.subset_of(acl_internal(fg, a.internally_active)));
      }
    }
  }
}

TEST_CASE("additivity: closing one part of a split, then the rest") {
  for (const auto& [name, m] : testing::small_corpus()) {
    if (m.ground().size() > 6) continue;
    CAPTURE(name);
    for (ElementSet b : m.bases()) {
      const FundamentalGraph fg = fundamental_graph(m, b);
      const ElementSet internal = activity_sets(fg).internally_active;
      const std::vector<int> keys = internal.labels();
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << keys.size()); ++s) {
        ElementSet x;
        for (std::size_t i = 0; i < keys.size(); ++i) {
          if ((s >> i) & 1u) x = x.with(keys[i]);
        }
        const std::vector<int> xs = x.labels();
        for (std::uint64_t t = 0; t < (std::uint64_t{1} << xs.size()); ++t) {
          ElementSet y;
          for (std::size_t i = 0; i < xs.size(); ++i) {
            if ((t >> i) & 1u) y = y.with(xs[i]);
          }
          const ElementSet z = x - y;
          const ElementSet closure_y = acl_internal(fg, y);
          const ElementSet rest =
              acl_internal(fg_remove(fg, closure_y), z);
          CHECK(!closure_y.intersects(rest));
          CHECK((closure_y | rest) == acl_internal(fg, x));
        }
      }
    }
  }
}

TEST_CASE("restriction: the external part never feeds an internal closure") {
  for (const auto& [name, m] : testing::small_corpus()) {
    if (m.ground().size() > 6) continue;
    CAPTURE(name);
    for (ElementSet b : m.bases()) {
      const FundamentalGraph fg = fundamental_graph(m, b);
      const auto [internal, external] = internal_external_partition(fg);
      const ActivitySets a = activity_sets(fg);
      const std::vector<int> keys = a.internally_active.labels();
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << keys.size()); ++s) {
        ElementSet x;
        for (std::size_t i = 0; i < keys.size(); ++i) {
          if ((s >> i) & 1u) x = x.with(keys[i]);
        }
        const ElementSet closure = acl_internal(fg, x);
        CHECK(acl_internal(fg_remove(fg, external), x) == closure);
        // The external part of what is left is still F_c.
        const auto rest = internal_external_partition(fg_remove(fg, closure));
        CHECK(rest.second == external);
      }
    }
  }
}

TEST_CASE("internal/external partition on the paper's K4 bases") {
  const Matroid m = k4();
  const auto p146 = internal_external_partition(fundamental_graph(m, S({1, 4, 6})));
  CHECK(p146.first == S({1, 3, 5}));
  CHECK(p146.second == S({2, 4, 6}));
  const auto p136 = internal_external_partition(fundamental_graph(m, S({1, 3, 6})));
  CHECK(p136.first == m.ground().all());
  CHECK(p136.second.empty());
  const auto p456 = internal_external_partition(fundamental_graph(m, S({4, 5, 6})));
  CHECK(p456.first.empty());
  CHECK(p456.second == m.ground().all());
}

TEST_CASE("active filtrations of the paper's K4 bases") {
  const Matroid m = k4();
  const GroundSet ground = m.ground();

  const Filtration f126 = active_filtration(fundamental_graph(m, S({1, 2, 6})));
  CHECK(f126.text(ground) == "[0] < 1 < E");

  const Filtration f146 = active_filtration(fundamental_graph(m, S({1, 4, 6})));
  CHECK(f146.text(ground) == "0 < [246] < E");

  const Filtration f456 = active_filtration(fundamental_graph(m, S({4, 5, 6})));
  CHECK(f456.text(ground) == "0 < 356 < 23456 < [E]");
}

TEST_CASE("duality: the active filtration of the dual graph") {
  for (const auto& [name, m] : testing::small_corpus()) {
    if (m.ground().size() > 6) continue;
    CAPTURE(name);
    for (ElementSet b : m.bases()) {
      const FundamentalGraph fg = fundamental_graph(m, b);
      const Filtration f = active_filtration(fg);
      CHECK(active_filtration(fg_dual(fg)) ==
            filtration_dual(f, m.ground()));
    }
  }
}

TEST_CASE("active partitions of the paper's K4 bases") {
  const Matroid m = k4();

  const ActivePartition p146 = active_partition(fundamental_graph(m, S({1, 4, 6})));
  REQUIRE(p146.parts.size() == 2);
  CHECK(p146.parts[0].key == 2);
  CHECK(p146.parts[0].elements == S({2, 4, 6}));
  CHECK(!p146.parts[0].internal_side);
  CHECK(p146.parts[1].key == 1);
  CHECK(p146.parts[1].elements == S({1, 3, 5}));
  CHECK(p146.parts[1].internal_side);

  const ActivePartition p124 = active_partition(fundamental_graph(m, S({1, 2, 4})));
  REQUIRE(p124.parts.size() == 3);
  CHECK(p124.parts[0].elements == S({1}));
  CHECK(p124.parts[1].elements == S({2, 3}));
  CHECK(p124.parts[2].elements == S({4, 5, 6}));

  const ActivePartition p136 = active_partition(fundamental_graph(m, S({1, 3, 6})));
  REQUIRE(p136.parts.size() == 1);
  CHECK(p136.parts[0].key == 1);
  CHECK(p136.parts[0].elements == m.ground().all());
  CHECK(p136.part_of(5) == 1);
}

TEST_CASE("each part contains its key as minimum and covers the ground set") {
  for (const auto& [name, m] : testing::small_corpus()) {
    CAPTURE(name);
    for (ElementSet b : m.bases()) {
      const ActivePartition p = active_partition(fundamental_graph(m, b));
      ElementSet covered;
      for (const auto& part : p.parts) {
        CHECK(part.elements.min() == part.key);
        CHECK(!covered.intersects(part.elements));
        covered = covered | part.elements;
      }
      CHECK(covered == m.ground().all());
      CHECK((p.internal_part | p.external_part) == m.ground().all());
    }
  }
}

TEST_CASE("characterization holds exhaustively on small ground sets") {
  for (const auto& [name, m] : testing::small_corpus()) {
    if (m.ground().size() > 5) continue;
    CAPTURE(name);
    CHECK(check_acl_characterization(m) == "");
  }
}

TEST_CASE("empty ground set degenerates cleanly") {
  const Matroid empty = graphic_matroid(1, {});
  const FundamentalGraph fg = fundamental_graph(empty, ElementSet());
  const Filtration f = active_filtration(fg);
  CHECK(f.iota() == 0);
  CHECK(f.epsilon() == 0);
  CHECK(f.cyclic_set().empty());
  CHECK(active_partition(fg).parts.empty());
}

}  // namespace
}  // namespace matact
