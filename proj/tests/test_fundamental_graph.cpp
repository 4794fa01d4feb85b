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

#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "matact/tutte.hpp"

namespace matact {
namespace {

using testing::k4;

ElementSet S(std::initializer_list<int> labels) {
  return ElementSet::of(labels);
}

TEST_CASE("fundamental graph of K4 basis 256 matches the paper's tableau") {
  const FundamentalGraph fg = fundamental_graph(k4(), S({2, 5, 6}));
  CHECK(fg.basis_side() == S({2, 5, 6}));
  CHECK(fg.circuit(1) == S({1, 2, 5, 6}));
  CHECK(fg.circuit(3) == S({3, 5, 6}));
  CHECK(fg.circuit(4) == S({2, 4, 6}));
  CHECK(fg.cocircuit(2) == S({1, 2, 4}));
  CHECK(fg.cocircuit(5) == S({1, 3, 5}));
  CHECK(fg.cocircuit(6) == S({1, 3, 4, 6}));
}

TEST_CASE("fundamental graph of K4 basis 136 matches the paper's tableau") {
  const FundamentalGraph fg = fundamental_graph(k4(), S({1, 3, 6}));
  CHECK(fg.circuit(2) == S({1, 2, 3}));
  CHECK(fg.circuit(4) == S({1, 3, 4, 6}));
  CHECK(fg.circuit(5) == S({3, 5, 6}));
  CHECK(fg.cocircuit(1) == S({1, 2, 4}));
}

TEST_CASE("isthmus basis gives an isolated basis-side vertex") {
  const FundamentalGraph fg = fundamental_graph(uniform_matroid(1, 1), S({1}));
  CHECK(fg.basis_side() == S({1}));
  CHECK(fg.adjacent(1).empty());
}

TEST_CASE("graph duality swaps sides and commutes with matroid duality") {
  const Matroid m = k4();
  const FundamentalGraph fg = fundamental_graph(m, S({2, 5, 6}));
  CHECK(fg_dual(fg).basis_side() == S({1, 3, 4}));
  CHECK(fg_dual(fg_dual(fg)) == fg);
  for (const auto& [name, mm] : testing::small_corpus()) {
    CAPTURE(name);
    for (ElementSet b : mm.bases()) {
      CHECK(fg_dual(fundamental_graph(mm, b)) ==
            fundamental_graph(dual(mm), mm.ground().all() - b));
    }
  }
}

TEST_CASE("vertex removal matches deletion and contraction") {
  for (const auto& [name, m] : testing::small_corpus()) {
    if (m.ground().size() > 6) continue;
    CAPTURE(name);
    const ElementSet all = m.ground().all();
    for (ElementSet b : m.bases()) {
      const FundamentalGraph fg = fundamental_graph(m, b);
      CHECK(fg_remove(fg, ElementSet()) == fg);
      for (int e : b) {
        CHECK(fg_remove(fg, ElementSet().with(e)) ==
              fundamental_graph(minor(m, all, ElementSet().with(e)),
                                b.without(e)));
      }
      for (int e : all - b) {
        CHECK(fg_remove(fg, ElementSet().with(e)) ==
              fundamental_graph(minor(m, all.without(e), ElementSet()), b));
      }
    }
  }
}

TEST_CASE("restriction property: cocircuit-avoiding subsets induce minors") {
  // For every F with C*(B;b) disjoint from F for all b outside F, the other
  // three characterizations hold and removal yields the minor's graph.
  for (const auto& [name, m] : testing::small_corpus()) {
    if (m.ground().size() > 6) continue;
    CAPTURE(name);
    const ElementSet all = m.ground().all();
    const std::vector<int> labels = all.labels();
    const int n = static_cast<int>(labels.size());
    for (ElementSet b : m.bases()) {
      const FundamentalGraph fg = fundamental_graph(m, b);
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        ElementSet f;
        for (int i = 0; i < n; ++i) {
          if ((s >> i) & 1u) f = f.with(labels[static_cast<std::size_t>(i)]);
        }
        bool condition = true;
        for (int bb : b - f) {
          if (fg.cocircuit(bb).intersects(f)) {
            condition = false;
            break;
          }
        }
        if (!condition) continue;
        // (i) B n F basis of M(F); (ii) B\F basis of M/F; (iv) circuits of
        // F-elements stay inside F.
        const Matroid restriction = minor(m, f, ElementSet());
        const Matroid contraction = minor(m, all, f);
        CHECK(restriction.is_basis(b & f));
        CHECK(contraction.is_basis(b - f));
        for (int e : f - b) CHECK(fg.circuit(e).subset_of(f));
        CHECK(fg_remove(fg, f) == fundamental_graph(contraction, b - f));
        CHECK(fg_remove(fg, all - f) == fundamental_graph(restriction, b & f));
      }
    }
  }
}

TEST_CASE("activity sets on the paper's K4 examples") {
  const Matroid m = k4();
  const ActivitySets a256 = activity_sets(fundamental_graph(m, S({2, 5, 6})));
  CHECK(a256.internally_active.empty());
  CHECK(a256.externally_active == S({1, 3}));

  const ActivitySets a136 = activity_sets(fundamental_graph(m, S({1, 3, 6})));
  CHECK(a136.internally_active == S({1}));
  CHECK(a136.epsilon() == 0);

  // The lexicographically smallest basis is fully internally active.
  const ActivitySets amin = activity_sets(fundamental_graph(m, S({1, 2, 4})));
  CHECK(amin.internally_active == S({1, 2, 4}));
  CHECK(amin.externally_active.empty());
}

TEST_CASE("activity duality and min-element membership") {
  for (const auto& [name, m] : testing::small_corpus()) {
    CAPTURE(name);
    if (m.ground().empty()) continue;
    const Matroid md = dual(m);
    ElementSet min_basis, max_basis;
    {
      // Lexicographically extreme bases bound the activities.
      min_basis = m.bases().front();
      max_basis = m.bases().front();
      for (ElementSet b : m.bases()) {
        if (lex_less(b, min_basis)) min_basis = b;
        ElementSet rb = m.ground().all() - b, rm = m.ground().all() - max_basis;
        if (lex_less(rb, rm)) max_basis = b;
      }
    }
    for (ElementSet b : m.bases()) {
      const ActivitySets a = activity_sets(fundamental_graph(m, b));
      const ActivitySets ad =
          activity_sets(fundamental_graph(md, m.ground().all() - b));
      CHECK(a.internally_active == ad.externally_active);
      CHECK(a.externally_active == ad.internally_active);
      CHECK(!a.internally_active.intersects(a.externally_active));
      const int p = m.ground().all().min();
      CHECK((a.internally_active | a.externally_active).contains(p));
      CHECK(a.internally_active.subset_of(min_basis));
      CHECK(a.externally_active.subset_of(m.ground().all() - max_basis));
    }
  }
}

TEST_CASE("activity generating function is order independent") {
  std::mt19937 rng(20260810);
  for (const auto& [name, m] : testing::small_corpus()) {
    CAPTURE(name);
    const TuttePolynomial reference = tutte_by_activities(m);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> labels = m.ground().labels();
      std::shuffle(labels.begin(), labels.end(), rng);
      CHECK(tutte_by_activities(relabel(m, labels)) == reference);
    }
  }
}

TEST_CASE("uniactivity predicates") {
  const Matroid m = k4();
  CHECK(is_uniactive_internal(fundamental_graph(m, S({1, 3, 5}))));
  CHECK(!is_uniactive_external(fundamental_graph(m, S({1, 3, 5}))));
  CHECK(is_uniactive_external(fundamental_graph(m, S({2, 3, 5}))));
  CHECK(is_uniactive_internal(
      fundamental_graph(uniform_matroid(1, 1), S({1}))));
  const FundamentalGraph empty_fg =
      fundamental_graph(graphic_matroid(1, {}), ElementSet());
  CHECK_THROWS_AS(is_uniactive_internal(empty_fg), Error);
}

TEST_CASE("standalone bipartite graphs are accepted and validated") {
  // A path 1-2-3 across the bipartition (B = {1,3}).
  const FundamentalGraph fg(GroundSet::first_n(3), S({1, 3}),
                            {{2, S({1, 3})}});
  CHECK(fg.adjacent(2) == S({1, 3}));
  CHECK(fg.adjacent(1) == S({2}));
  const ActivitySets a = activity_sets(fg);
  CHECK(a.internally_active == S({1}));
  CHECK(a.externally_active.empty());

  // Edges inside one side are rejected.
  CHECK_THROWS_AS(FundamentalGraph(GroundSet::first_n(3), S({1, 3}),
                                   {{1, S({3})}}),
                  Error);
}

TEST_CASE("tableau rendering marks diagonal and circuit entries") {
  const std::string text =
      render_tableau(fundamental_graph(testing::triangle(), S({1, 2})));
  CHECK(text ==
        "[#]  .   . \n"
        " . [#]  . \n"
        " #   #  [#]\n");
}

}  // namespace
}  // namespace matact
