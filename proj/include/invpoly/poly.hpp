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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "invpoly/bigint.hpp"
#include "invpoly/errors.hpp"

namespace invpoly {

/// Dense univariate polynomial with exact integer coefficients.
///
/// Invariant: the coefficient vector carries no trailing zeros; the zero
/// polynomial is the empty vector (degree() == -1). Values are immutable
/// in spirit: all operations return new polynomials.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<long long> coeffs);
  static Poly constant(BigInt c);
  static Poly monomial(std::size_t exp, BigInt c = 1);
  static Poly from_coeffs(std::vector<BigInt> coeffs);

  static Poly zero() { return Poly(); }
  static Poly one() { return constant(1); }

  const std::vector<BigInt>& coeffs() const { return c_; }
  /// Coefficient of q^i (zero beyond the degree).
  const BigInt& coeff(std::size_t i) const;
  bool is_zero() const { return c_.empty(); }
  /// Degree of the polynomial, -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }

  BigInt sum_coeffs() const;               // evaluation at 1
  BigInt evaluate(const BigInt& x) const;  // Horner
  Poly shifted(std::size_t k) const;       // multiplication by q^k
  Poly reversed() const;                   // q^deg * p(1/q)

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const BigInt& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const BigInt& s) { return a *= s; }
  friend Poly operator*(const BigInt& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string to_string(std::string_view var = "q") const;

 private:
  void normalize();
  std::vector<BigInt> c_;
};

/// Exact quotient a / b. Throws NonExactDivision if b does not divide a
/// over the integers, and Error if b is zero.
Poly exact_div(const Poly& a, const Poly& b);

/// q-bracket [i]_q = 1 + q + ... + q^{i-1}  (zero polynomial for i = 0).
Poly q_bracket(int i);

/// g_i(q) = q + q^3 + ... + q^{2i-3}, the coupling polynomial of the
/// involution inversion recurrence. Requires i >= 2.
Poly g_seq(int i);

/// Sum of q^e for odd e in [lo, hi].
Poly odd_run(int lo, int hi);

/// 1 + q^2 + q^4 + ... + q^{2(m-1)}, i.e. (1 - q^{2m}) / (1 - q^2).
Poly geometric_q2(int m);

/// Truncation of the q-Pochhammer product (a; q)_n = prod_{k<n} (1 - a q^k)
/// to total degree trunc.
Poly pochhammer_trunc(const Poly& a, int n, int trunc);

/// Exact coefficient [u^n] (1+u)^a (1-u^2)^{-b}, computed by binomial
/// convolution. Requires a, b, n >= 0.
BigInt series_coeff(long long a, long long b, long long n);

/// 2x2 matrix of polynomials; carrier for the matrix-product forms of the
/// inversion recurrences.
struct PolyMat2 {
  Poly a11, a12, a21, a22;

  static PolyMat2 identity();
  friend PolyMat2 operator*(const PolyMat2& l, const PolyMat2& r);
  friend bool operator==(const PolyMat2& a, const PolyMat2& b) {
    return a.a11 == b.a11 && a.a12 == b.a12 && a.a21 == b.a21 && a.a22 == b.a22;
  }
};

/// Formal power series truncated at a fixed order. Multiplication and
/// reciprocal are exact modulo u^{order+1}.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(const Poly& p, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const BigInt& coeff(std::size_t i) const { return c_.at(i); }
  const std::vector<BigInt>& coeffs() const { return c_; }

  TruncatedSeries& operator*=(const TruncatedSeries& o);
  friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) {
    return a *= b;
  }
  TruncatedSeries pow(unsigned e) const;
  /// Multiplicative inverse; requires constant term +1 or -1.
  TruncatedSeries reciprocal() const;

 private:
  std::vector<BigInt> c_;  // size order+1, not normalized
};

}  // namespace invpoly
