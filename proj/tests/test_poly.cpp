/*
 * Copyright 2026 The invpoly Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include "helpers.hpp"
#include "invpoly/poly.hpp"

using namespace invpoly;
using invpoly::testing::Rng;
using invpoly::testing::random_poly;

TEST_CASE("poly arithmetic basics") {
  CHECK(Poly{1, 1} * Poly{1, 0, 1} == Poly{1, 1, 1, 1});
  CHECK(Poly{1, 2, 1} - Poly{1, 2, 1} == Poly::zero());
  CHECK(Poly::zero() * Poly{3, 1} == Poly::zero());
  CHECK(Poly{0, 0, 0} == Poly::zero());
  CHECK(Poly{1, 2}.degree() == 1);
  CHECK(Poly::zero().degree() == -1);
  CHECK(Poly{1, 2, 3}.sum_coeffs() == 6);
  CHECK(Poly{1, 2, 3}.evaluate(2) == 1 + 4 + 12);
  CHECK(Poly{1, 2}.shifted(2) == Poly{0, 0, 1, 2});
  CHECK(Poly{1, 2, 3}.reversed() == Poly{3, 2, 1});
}

TEST_CASE("exact division") {
  // (1 - q^6) / (1 - q^2) = 1 + q^2 + q^4
  CHECK(exact_div(Poly{1, 0, 0, 0, 0, 0, -1}, Poly{1, 0, -1}) == Poly{1, 0, 1, 0, 1});
  CHECK_THROWS_AS(exact_div(Poly{1, 1}, Poly{1, -1}), NonExactDivision);
  CHECK_THROWS_AS(exact_div(Poly{1, 1}, Poly::zero()), Error);
  CHECK(exact_div(Poly::zero(), Poly{1, -1}) == Poly::zero());
  // leading-coefficient divisibility failure
  CHECK_THROWS_AS(exact_div(Poly{0, 3}, Poly{0, 2}), NonExactDivision);
}

TEST_CASE("ring properties on random polynomials") {
  Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    Poly a = random_poly(rng, 8);
    Poly b = random_poly(rng, 8);
    CHECK(a * b == b * a);
    if (!a.is_zero() && !b.is_zero()) {
      CHECK((a * b).degree() == a.degree() + b.degree());
      CHECK(exact_div(a * b, b) == a);
    }
  }
}

TEST_CASE("q tools") {
  CHECK(q_bracket(4) == Poly{1, 1, 1, 1});
  CHECK(q_bracket(1) == Poly::one());
  CHECK(q_bracket(0) == Poly::zero());
  for (int i = 0; i <= 50; ++i) CHECK(q_bracket(i).sum_coeffs() == i);

  CHECK(g_seq(2) == Poly{0, 1});
  CHECK(g_seq(4) == Poly{0, 1, 0, 1, 0, 1});
  CHECK_THROWS_AS(g_seq(1), IndexError);

  CHECK(geometric_q2(3) == Poly{1, 0, 1, 0, 1});
  CHECK(odd_run(1, 7) == Poly{0, 1, 0, 1, 0, 1, 0, 1});
}

TEST_CASE("pochhammer truncation") {
  // (q; q)_3 = (1-q)(1-q^2)(1-q^3) = 1 - q - q^2 + q^4 + q^5 - q^6
  const Poly q = Poly::monomial(1);
  CHECK(pochhammer_trunc(q, 3, 10) == Poly{1, -1, -1, 0, 1, 1, -1});
  CHECK(pochhammer_trunc(q, 3, 4) == Poly{1, -1, -1, 0, 1});
  CHECK(pochhammer_trunc(q, 0, 5) == Poly::one());
}

TEST_CASE("series_coeff examples and spot values") {
  CHECK(series_coeff(2, 3, 3) == 6);
  CHECK(series_coeff(0, 3, 2) == 3);
  CHECK(series_coeff(7, 5, 0) == 1);
  CHECK(series_coeff(0, 0, 3) == 0);
}

TEST_CASE("series_coeff agrees with truncated-series expansion") {
  const int order = 24;
  const TruncatedSeries one_plus_u(Poly{1, 1}, order);
  const TruncatedSeries one_minus_u2(Poly{1, 0, -1}, order);
  const TruncatedSeries inv = one_minus_u2.reciprocal();
  for (int a = 0; a <= 12; ++a) {
    for (int b = 0; b <= 12; ++b) {
      TruncatedSeries s = one_plus_u.pow(static_cast<unsigned>(a)) *
                          inv.pow(static_cast<unsigned>(b));
      for (int n = 0; n <= order; ++n)
        REQUIRE(series_coeff(a, b, n) == s.coeff(static_cast<std::size_t>(n)));
    }
  }
}

TEST_CASE("truncated series reciprocal") {
  const int order = 16;
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    Poly p = Poly::one() + random_poly(rng, 6).shifted(1);
    TruncatedSeries s(p, order);
    TruncatedSeries prod = s * s.reciprocal();
    CHECK(prod.coeff(0) == 1);
    for (int i = 1; i <= order; ++i) CHECK(prod.coeff(static_cast<std::size_t>(i)) == 0);
  }
  CHECK_THROWS_AS(TruncatedSeries(Poly{2, 1}, 4).reciprocal(), NotInvertible);
  // constant term -1 is a unit as well
  TruncatedSeries neg(Poly{-1, 1}, 8);
  TruncatedSeries prod = neg * neg.reciprocal();
  CHECK(prod.coeff(0) == 1);
}

TEST_CASE("matrix product associativity") {
  Rng rng(99);
  for (int t = 0; t < 60; ++t) {
    auto rnd_mat = [&] {
      return PolyMat2{random_poly(rng, 8), random_poly(rng, 8),
                      random_poly(rng, 8), random_poly(rng, 8)};
    };
    PolyMat2 a = rnd_mat(), b = rnd_mat(), c = rnd_mat();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * PolyMat2::identity() == a);
    CHECK(PolyMat2::identity() * a == a);
  }
}

TEST_CASE("binomial and factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(10, 11) == 0);
  CHECK(binomial(10, -1) == 0);
  CHECK(binomial(52, 26) == BigInt("495918532948104"));
  CHECK_THROWS_AS(binomial(-1, 0), IndexError);
}

TEST_CASE("poly printing") {
  CHECK(Poly::zero().to_string() == "0");
  CHECK(Poly{1, 2, 0, 2, 1}.to_string() == "1 + 2*q + 2*q^3 + q^4");
  CHECK(Poly{0, -1}.to_string("x") == "-x");
}
