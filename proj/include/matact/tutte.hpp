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

#ifndef MATACT_TUTTE_HPP
#define MATACT_TUTTE_HPP

#include <map>
#include <string>
#include <utility>

#include "matact/filtration.hpp"
#include "matact/matroid.hpp"

namespace matact {

// Sparse bivariate polynomial with exact integer coefficients:
// t(M;x,y) = sum b_{i,e} x^i y^e. Coefficients are counts; no floating point.
class TuttePolynomial {
 public:
  using Coeff = long long;

  void add(int x_exp, int y_exp, Coeff c);
  Coeff coeff(int x_exp, int y_exp) const;
  const std::map<std::pair<int, int>, Coeff>& coefficients() const {
    return coeffs_;
  }

  bool is_zero() const { return coeffs_.empty(); }
  Coeff evaluate_at_ones() const;  // t(1,1) = number of bases

  TuttePolynomial operator+(const TuttePolynomial& o) const;
  TuttePolynomial operator*(const TuttePolynomial& o) const;

  // Coefficient filtering: t(.;x,0) keeps the y-free terms, t(.;0,y) the
  // x-free terms.
  TuttePolynomial set_y_zero() const;
  TuttePolynomial set_x_zero() const;

  // Exponent transposition: x^i y^e -> x^e y^i (duality).
  TuttePolynomial transpose() const;

  friend bool operator==(const TuttePolynomial& a, const TuttePolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Monomials in descending order of the x-exponent, ascending y-exponent,
  // e.g. "x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3"; "0" for the zero
  // polynomial.
  std::string text() const;

 private:
  std::map<std::pair<int, int>, Coeff> coeffs_;
};

// b_{i,e} = number of bases with internal activity i and external activity e.
TuttePolynomial tutte_by_activities(const Matroid& m);

// Corank-nullity subset sum: sum_{A <= E} (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}.
// The independent oracle for the other methods; shares no code path with the
// activity computations. Errors: kSizeBoundExceeded.
TuttePolynomial tutte_rank_nullity(const Matroid& m,
                                   int max_n = kDefaultEnumerationBound);

// Sum over (connected) filtrations of beta_product * x^iota y^eps; the two
// settings of connected_only give the same polynomial.
TuttePolynomial tutte_by_filtrations(const Matroid& m, bool connected_only,
                                     int max_n = kDefaultEnumerationBound);

// Convolution: sum over F_c of t(M/F_c;x,0) * t(M(F_c);0,y), ranging over
// all subsets or over cyclic flats only; both settings agree. Inner factors
// come from tutte_by_activities by coefficient filtering.
TuttePolynomial tutte_convolution(const Matroid& m, bool cyclic_flats_only,
                                  int max_n = kDefaultEnumerationBound);

// beta(M) = b_{1,0} of tutte_by_activities; beta*(M) = b_{0,1}.
long long beta(const Matroid& m);
long long beta_star(const Matroid& m);

}  // namespace matact

#endif  // MATACT_TUTTE_HPP
