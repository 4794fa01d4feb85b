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

#include "matact/tutte.hpp"

#include <doctest.h>

#include "corpus.hpp"

namespace matact {
namespace {

using testing::k4;

TuttePolynomial poly(std::initializer_list<std::tuple<int, int, long long>> terms) {
  TuttePolynomial out;
  for (const auto& [i, j, c] : terms) out.add(i, j, c);
  return out;
}

const TuttePolynomial kTutteK4 = poly({{3, 0, 1},
                                       {2, 0, 3},
                                       {1, 0, 2},
                                       {1, 1, 4},
                                       {0, 1, 2},
                                       {0, 2, 3},
                                       {0, 3, 1}});

TEST_CASE("activity counts reproduce the paper's K4 polynomial") {
  const TuttePolynomial t = tutte_by_activities(k4());
  CHECK(t == kTutteK4);
  CHECK(t.text() == "x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3");
  CHECK(t.evaluate_at_ones() == 16);

  CHECK(tutte_by_activities(uniform_matroid(1, 1)).text() == "x");
  CHECK(tutte_by_activities(uniform_matroid(0, 1)).text() == "y");
}

TEST_CASE("rank-nullity subset sum agrees and handles the empty matroid") {
  CHECK(tutte_rank_nullity(graphic_matroid(1, {})).text() == "1");
  CHECK(tutte_rank_nullity(k4()) == kTutteK4);
  CHECK(tutte_rank_nullity(uniform_matroid(2, 3)) ==
        poly({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}}));
  CHECK(tutte_rank_nullity(uniform_matroid(2, 3)).text() == "x^2 + x + y");
  CHECK_THROWS_AS(tutte_rank_nullity(uniform_matroid(2, 12)), Error);
}

TEST_CASE("beta invariants") {
  CHECK(beta(k4()) == 2);
  CHECK(beta_star(k4()) == 2);
  CHECK(beta(uniform_matroid(1, 1)) == 1);
  CHECK(beta_star(uniform_matroid(1, 1)) == 0);
  CHECK(beta(uniform_matroid(0, 1)) == 0);
  CHECK(beta_star(uniform_matroid(0, 1)) == 1);
  CHECK(beta(graphic_matroid(1, {})) == 0);
  CHECK(beta_star(graphic_matroid(1, {})) == 0);
  CHECK(beta(uniform_matroid(1, 3)) == 1);
  CHECK(beta(uniform_matroid(1, 3)) ==
        testing::tutte_deletion_contraction(uniform_matroid(1, 3)).coeff(1, 0));
}

TEST_CASE("filtration formula on the small cases") {
  CHECK(tutte_by_filtrations(graphic_matroid(1, {}), true).text() == "1");
  CHECK(tutte_by_filtrations(uniform_matroid(0, 1), true).text() == "y");
  CHECK(tutte_by_filtrations(k4(), true) == kTutteK4);
  CHECK(tutte_by_filtrations(k4(), false) == kTutteK4);
}

TEST_CASE("convolution formula on the small cases") {
  CHECK(tutte_convolution(uniform_matroid(0, 1), true).text() == "y");
  CHECK(tutte_convolution(k4(), true) == kTutteK4);
  CHECK(tutte_convolution(k4(), false) == kTutteK4);
}

TEST_CASE("four methods and the deletion-contraction oracle agree") {
  for (const auto& [name, m] : testing::small_corpus()) {
    if (m.ground().size() > 7) continue;
    CAPTURE(name);
    const TuttePolynomial reference = testing::tutte_deletion_contraction(m);
    CHECK(tutte_by_activities(m) == reference);
    CHECK(tutte_rank_nullity(m) == reference);
    CHECK(tutte_by_filtrations(m, true) == reference);
    CHECK(tutte_by_filtrations(m, false) == reference);
    CHECK(tutte_convolution(m, true) == reference);
    CHECK(tutte_convolution(m, false) == reference);
  }
}

TEST_CASE("beta properties across the corpus") {
  for (const auto& [name, m] : testing::small_corpus()) {
    CAPTURE(name);
    const int n = m.ground().size();
    if (n > 1) {
      CHECK(beta(m) == beta_star(m));
      CHECK(beta(m) == beta(dual(m)));
      CHECK((beta(m) != 0) == is_connected(m));
    }
    CHECK(tutte_by_activities(dual(m)) == tutte_by_activities(m).transpose());
    CHECK(tutte_by_activities(m).evaluate_at_ones() ==
          static_cast<long long>(m.bases().size()));
  }
}

TEST_CASE("polynomial arithmetic and text form") {
  TuttePolynomial a = poly({{1, 0, 1}, {0, 1, 1}});
  TuttePolynomial b = poly({{1, 0, 1}});
  CHECK((a * b) == poly({{2, 0, 1}, {1, 1, 1}}));
  CHECK((a + b) == poly({{1, 0, 2}, {0, 1, 1}}));
  CHECK(poly({}).text() == "0");
  CHECK(poly({{0, 0, 1}}).text() == "1");
  CHECK(poly({{2, 3, 5}}).text() == "5x^2y^3");
  CHECK(a.set_y_zero() == b);
  CHECK(a.set_x_zero() == poly({{0, 1, 1}}));
  CHECK(a.transpose() == a);
}

}  // namespace
}  // namespace matact
