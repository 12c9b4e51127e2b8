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

#include <map>
#include <string>
#include <utility>

#include "invpoly/poly.hpp"

namespace invpoly {

/// Sparse bivariate polynomial in (x, q) with exact integer coefficients.
/// Stored coefficients are always nonzero.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (x exponent, q exponent)

  BiPoly() = default;
  static BiPoly monomial(int i, int j, BigInt c = 1);

  const std::map<Key, BigInt>& terms() const { return t_; }
  BigInt coeff(int i, int j) const;
  bool is_zero() const { return t_.empty(); }
  void add_term(int i, int j, const BigInt& c);

  BiPoly& operator+=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  /// Multiply by x^i * p(q).
  BiPoly shift_mul(int i, const Poly& p) const;

  /// Substitute an integer value for x, leaving a polynomial in q.
  Poly specialize_x(const BigInt& x) const;

  int max_x_degree() const;
  int max_q_degree() const;
  std::string to_string(std::string_view xvar = "x",
                        std::string_view qvar = "q") const;

 private:
  std::map<Key, BigInt> t_;
};

}  // namespace invpoly
