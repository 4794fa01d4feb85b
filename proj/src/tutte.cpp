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

#include <algorithm>
#include <vector>

#include "matact/detail/minor_ops.hpp"
#include "matact/fundamental_graph.hpp"

namespace matact {

void TuttePolynomial::add(int x_exp, int y_exp, Coeff c) {
  if (c == 0) return;
  auto key = std::make_pair(x_exp, y_exp);
  auto [it, inserted] = coeffs_.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

TuttePolynomial::Coeff TuttePolynomial::coeff(int x_exp, int y_exp) const {
  auto it = coeffs_.find({x_exp, y_exp});
  return it == coeffs_.end() ? 0 : it->second;
}

TuttePolynomial::Coeff TuttePolynomial::evaluate_at_ones() const {
  Coeff total = 0;
  for (const auto& [exps, c] : coeffs_) total += c;
  return total;
}

TuttePolynomial TuttePolynomial::operator+(const TuttePolynomial& o) const {
  TuttePolynomial out = *this;
  for (const auto& [exps, c] : o.coeffs_) out.add(exps.first, exps.second, c);
  return out;
}

TuttePolynomial TuttePolynomial::operator*(const TuttePolynomial& o) const {
  TuttePolynomial out;
  for (const auto& [a, ca] : coeffs_) {
    for (const auto& [b, cb] : o.coeffs_) {
      out.add(a.first + b.first, a.second + b.second, ca * cb);
    }
  }
  return out;
}

TuttePolynomial TuttePolynomial::set_y_zero() const {
  TuttePolynomial out;
  for (const auto& [exps, c] : coeffs_) {
    if (exps.second == 0) out.add(exps.first, 0, c);
  }
  return out;
}

TuttePolynomial TuttePolynomial::set_x_zero() const {
  TuttePolynomial out;
  for (const auto& [exps, c] : coeffs_) {
    if (exps.first == 0) out.add(0, exps.second, c);
  }
  return out;
}

TuttePolynomial TuttePolynomial::transpose() const {
  TuttePolynomial out;
  for (const auto& [exps, c] : coeffs_) out.add(exps.second, exps.first, c);
  return out;
}

std::string TuttePolynomial::text() const {
  if (coeffs_.empty()) return "0";
  // x-exponent descending, then y-exponent ascending.
  std::vector<std::pair<std::pair<int, int>, Coeff>> terms(coeffs_.begin(),
                                                           coeffs_.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first > b.first.first;
    return a.first.second < b.first.second;
  });
  std::string out;
  for (const auto& [exps, c] : terms) {
    const auto [i, e] = exps;
    if (!out.empty()) out += " + ";
    std::string mono;
    if (i > 0) mono += i == 1 ? "x" : "x^" + std::to_string(i);
    if (e > 0) mono += e == 1 ? "y" : "y^" + std::to_string(e);
    if (mono.empty()) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += mono;
    }
  }
  return out;
}

TuttePolynomial tutte_by_activities(const Matroid& m) {
  TuttePolynomial out;
  for (ElementSet b : m.bases()) {
    const ActivitySets a = activity_sets(fundamental_graph(m, b));
    out.add(a.iota(), a.epsilon(), 1);
  }
  return out;
}

TuttePolynomial tutte_rank_nullity(const Matroid& m, int max_n) {
  const int n = m.ground().size();
  if (n > max_n) {
    fail(ErrorCode::kSizeBoundExceeded,
         "rank-nullity subset sum bound exceeded: |E|=" + std::to_string(n));
  }
  // Binomial table for expanding (x-1)^a (y-1)^b.
  const int r = m.rank();
  std::vector<std::vector<long long>> choose(
      static_cast<std::size_t>(n + 1),
      std::vector<long long>(static_cast<std::size_t>(n + 1), 0));
  for (int i = 0; i <= n; ++i) {
    choose[static_cast<std::size_t>(i)][0] = 1;
    for (int j = 1; j <= i; ++j) {
      choose[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          choose[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          choose[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
  }

  TuttePolynomial out;
  const std::vector<int> labels = m.ground().labels();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    ElementSet a;
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1u) a = a.with(labels[static_cast<std::size_t>(i)]);
    }
    const int ra = m.rank_of(a);
    const int cx = r - ra;         // corank exponent
    const int cy = a.size() - ra;  // nullity exponent
    for (int i = 0; i <= cx; ++i) {
      for (int j = 0; j <= cy; ++j) {
        const long long sign = ((cx - i + cy - j) % 2 == 0) ? 1 : -1;
        out.add(i, j,
                sign * choose[static_cast<std::size_t>(cx)][static_cast<std::size_t>(i)] *
                    choose[static_cast<std::size_t>(cy)][static_cast<std::size_t>(j)]);
      }
    }
  }
  return out;
}

TuttePolynomial tutte_by_filtrations(const Matroid& m, bool connected_only,
                                     int max_n) {
  TuttePolynomial out;
  detail::BetaCache cache(m);
  enumerate_filtrations(
      m.ground(),
      [&](const Filtration& f) {
        if (connected_only && !is_connected_filtration(m, f)) return;
        long long product = 1;
        for (int k = 1; k <= f.iota() && product != 0; ++k) {
          product *= cache.beta(f.internal_set(k), f.internal_set(k - 1));
        }
        for (int k = 1; k <= f.epsilon() && product != 0; ++k) {
          product *= cache.beta_star(f.external_set(k - 1), f.external_set(k));
        }
        out.add(f.iota(), f.epsilon(), product);
      },
      max_n);
  return out;
}

TuttePolynomial tutte_convolution(const Matroid& m, bool cyclic_flats_only,
                                  int max_n) {
  const int n = m.ground().size();
  if (n > max_n) {
    fail(ErrorCode::kSizeBoundExceeded,
         "convolution subset sum bound exceeded: |E|=" + std::to_string(n));
  }
  TuttePolynomial out;
  auto add_term = [&](ElementSet f_c) {
    const TuttePolynomial contraction =
        tutte_by_activities(minor(m, m.ground().all(), f_c)).set_y_zero();
    const TuttePolynomial restriction =
        tutte_by_activities(minor(m, f_c, ElementSet())).set_x_zero();
    out = out + contraction * restriction;
  };
  if (cyclic_flats_only) {
    for (ElementSet f_c : cyclic_flats(m)) add_term(f_c);
  } else {
    const std::vector<int> labels = m.ground().labels();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      ElementSet a;
      for (int i = 0; i < n; ++i) {
        if ((s >> i) & 1u) a = a.with(labels[static_cast<std::size_t>(i)]);
      }
      add_term(a);
    }
  }
  return out;
}

long long beta(const Matroid& m) {
  return tutte_by_activities(m).coeff(1, 0);
}

long long beta_star(const Matroid& m) {
  return tutte_by_activities(m).coeff(0, 1);
}

}  // namespace matact
