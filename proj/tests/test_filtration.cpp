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

#include "matact/filtration.hpp"

#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "matact/tutte.hpp"

namespace matact {
namespace {

using testing::k4;

ElementSet S(std::initializer_list<int> labels) {
  return ElementSet::of(labels);
}

TEST_CASE("validation accepts the paper's chains and rejects bad ones") {
  const GroundSet e6 = GroundSet::first_n(6);
  const Filtration f = Filtration::validate(
      e6, {ElementSet(), S({1}), S({1, 2, 3}), e6.all()}, 0);
  CHECK(f.iota() == 3);
  CHECK(f.epsilon() == 0);
  CHECK(f.cyclic_set().empty());
  CHECK(f.text(e6) == "[0] < 1 < 123 < E");

  const GroundSet e3 = GroundSet::first_n(3);
  CHECK_THROWS_WITH_AS(
      Filtration::validate(e3, {ElementSet(), S({2}), e3.all()}, 0),
      doctest::Contains("minima not increasing"), Error);
  CHECK_THROWS_AS(Filtration::validate(e3, {S({1}), e3.all()}, 0), Error);
  CHECK_THROWS_AS(
      Filtration::validate(e3, {ElementSet(), S({1, 2})}, 0), Error);
  CHECK_THROWS_AS(
      Filtration::validate(e3, {ElementSet(), S({2, 3}), S({1, 2}), e3.all()}, 0),
      Error);

  const GroundSet empty((std::vector<int>{}));
  const Filtration degenerate =
      Filtration::validate(empty, {ElementSet()}, 0);
  CHECK(degenerate.iota() == 0);
  CHECK(degenerate.epsilon() == 0);
}

TEST_CASE("validate_chains joins the two sides at the cyclic set") {
  const GroundSet e6 = GroundSet::first_n(6);
  const Filtration f = Filtration::validate_chains(
      e6, {ElementSet(), S({3, 5, 6})}, {S({3, 5, 6}), e6.all()});
  CHECK(f.epsilon() == 1);
  CHECK(f.iota() == 1);
  CHECK(f.cyclic_set() == S({3, 5, 6}));
  CHECK_THROWS_AS(
      Filtration::validate_chains(e6, {ElementSet()}, {S({1}), e6.all()}),
      Error);
}

TEST_CASE("enumeration counts match the brute-force chain oracle") {
  const long long expected[] = {1, 2, 6, 22, 94, 454};
  for (int n = 0; n <= 5; ++n) {
    CAPTURE(n);
    long long count = 0;
    std::set<std::string> seen;
    const GroundSet ground = GroundSet::first_n(n);
    enumerate_filtrations(ground, [&](const Filtration& f) {
      ++count;
      CHECK(seen.insert(f.text(ground)).second);  // exactly once
    });
    CHECK(count == expected[n]);
    CHECK(count == testing::brute_force_filtration_count(n));
  }
}

TEST_CASE("enumeration bound is enforced") {
  CHECK_THROWS_AS(
      enumerate_filtrations(GroundSet::first_n(11), [](const Filtration&) {}),
      Error);
  CHECK_NOTHROW(enumerate_filtrations(GroundSet::first_n(4),
                                      [](const Filtration&) {}, 4));
}

TEST_CASE("connected filtrations of K4") {
  const Matroid m = k4();
  const GroundSet ground = m.ground();
  // Row 456 of the paper's table.
  const Filtration f456 = Filtration::validate(
      ground, {ElementSet(), S({3, 5, 6}), S({2, 3, 4, 5, 6}), ground.all()}, 3);
  CHECK(is_connected_filtration(m, f456));

  // M({1,4}) is a pair of isthmuses, so this internal step is disconnected.
  const Filtration f14 = Filtration::validate(
      ground, {ElementSet(), S({1, 4}), ground.all()}, 0);
  CHECK(!is_connected_filtration(m, f14));

  const Filtration trivial =
      Filtration::validate(ground, {ElementSet(), ground.all()}, 0);
  CHECK(is_connected_filtration(m, trivial));

  // Exactly 14 connected filtrations serve the 16 bases.
  int connected = 0;
  enumerate_filtrations(ground, [&](const Filtration& f) {
    if (is_connected_filtration(m, f)) ++connected;
  });
  CHECK(connected == 14);
}

TEST_CASE("induced minors of the paper's examples") {
  const Matroid m = k4();
  const GroundSet ground = m.ground();
  const Filtration f146 =
      Filtration::validate(ground, {ElementSet(), S({2, 4, 6}), ground.all()}, 1);
  const InducedMinors minors = induced_minors(m, f146);
  REQUIRE(minors.external_minors.size() == 1);
  REQUIRE(minors.internal_minors.size() == 1);
  CHECK(minors.external_minors[0] == minor(m, S({2, 4, 6}), ElementSet()));
  CHECK(minors.internal_minors[0].ground().all() == S({1, 3, 5}));
  CHECK(minors.internal_minors[0].rank() == 1);

  const Filtration trivial =
      Filtration::validate(ground, {ElementSet(), ground.all()}, 0);
  const InducedMinors single = induced_minors(m, trivial);
  REQUIRE(single.internal_minors.size() == 1);
  CHECK(single.internal_minors[0] == m);
}

TEST_CASE("induced minors dualize with the filtration") {
  for (const auto& [name, m] : testing::small_corpus()) {
    if (m.ground().size() > 5) continue;
    CAPTURE(name);
    const Matroid md = dual(m);
    enumerate_filtrations(m.ground(), [&](const Filtration& f) {
      const Filtration fd = filtration_dual(f, m.ground());
      const InducedMinors a = induced_minors(m, f);
      const InducedMinors b = induced_minors(md, fd);
      // (M(F_k)/F_{k-1})* = M*(E\F_{k-1})/(E\F_k): internal minors of M
      // correspond to external minors of M*, in reverse order.
      REQUIRE(a.internal_minors.size() == b.external_minors.size());
      for (std::size_t k = 0; k < a.internal_minors.size(); ++k) {
        CHECK(dual(a.internal_minors[k]) ==
              b.external_minors[a.internal_minors.size() - 1 - k]);
      }
    });
  }
}

TEST_CASE("beta products on the paper's K4 filtrations") {
  const Matroid m = k4();
  const GroundSet ground = m.ground();
  const Filtration f146 =
      Filtration::validate(ground, {ElementSet(), S({2, 4, 6}), ground.all()}, 1);
  CHECK(beta_product(m, f146) == 1);

  const Filtration trivial =
      Filtration::validate(ground, {ElementSet(), ground.all()}, 0);
  CHECK(beta_product(m, trivial) == 2);

  const Filtration f14 = Filtration::validate(
      ground, {ElementSet(), S({1, 4}), ground.all()}, 0);
  CHECK(beta_product(m, f14) == 0);
}

TEST_CASE("beta product is nonzero exactly on connected filtrations") {
  for (const auto& [name, m] : testing::small_corpus()) {
    if (m.ground().size() > 6) continue;
    CAPTURE(name);
    enumerate_filtrations(m.ground(), [&](const Filtration& f) {
      CHECK((beta_product(m, f) != 0) == is_connected_filtration(m, f));
      CHECK((beta_product(m, f) != 0) ==
            is_connected_filtration(dual(m), filtration_dual(f, m.ground())));
    });
  }
}

TEST_CASE("connected filtrations consist of flats and dual flats") {
  for (const auto& [name, m] : testing::small_corpus()) {
    if (m.ground().size() > 5) continue;
    CAPTURE(name);
    enumerate_filtrations(m.ground(), [&](const Filtration& f) {
      if (!is_connected_filtration(m, f)) return;
      for (int k = 0; k <= f.iota(); ++k) CHECK(is_flat(m, f.internal_set(k)));
      for (int k = 0; k <= f.epsilon(); ++k) {
        CHECK(is_dual_flat(m, f.external_set(k)));
      }
      CHECK(is_cyclic_flat(m, f.cyclic_set()));

      // Truncations restrict and contract to connected filtrations.
      const ElementSet fc = f.cyclic_set();
      std::vector<ElementSet> lower(f.chain().begin(),
                                    f.chain().begin() + f.cyclic_index() + 1);
      CHECK(is_connected_filtration(
          minor(m, fc, ElementSet()),
          Filtration::validate(GroundSet(fc), lower, f.cyclic_index())));
      std::vector<ElementSet> upper;
      for (std::size_t i = f.cyclic_index(); i < f.chain().size(); ++i) {
        upper.push_back(f.chain()[i] - fc);
      }
      CHECK(is_connected_filtration(
          minor(m, m.ground().all(), fc),
          Filtration::validate(GroundSet(m.ground().all() - fc), upper, 0)));
    });
  }
}

TEST_CASE("filtration duality is an involution") {
  for (const auto& [name, m] : testing::small_corpus()) {
    if (m.ground().size() > 5) continue;
    CAPTURE(name);
    enumerate_filtrations(m.ground(), [&](const Filtration& f) {
      CHECK(filtration_dual(filtration_dual(f, m.ground()), m.ground()) == f);
    });
  }
}

TEST_CASE("dual of the trivial filtration flips the cyclic set") {
  const GroundSet ground = GroundSet::first_n(3);
  const Filtration f =
      Filtration::validate(ground, {ElementSet(), ground.all()}, 0);
  const Filtration fd = filtration_dual(f, ground);
  CHECK(fd.cyclic_set() == ground.all());
  CHECK(fd.epsilon() == 1);
  CHECK(fd.iota() == 0);
}

}  // namespace
}  // namespace matact
