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

#include <vector>

#include "invpoly/perm.hpp"

namespace invpoly {

/// Standard Young tableau on [1, n]: left-justified rows of weakly
/// decreasing length, strictly increasing along rows and down columns,
/// containing each of 1..n exactly once.
class StandardYoungTableau {
 public:
  StandardYoungTableau() = default;
  static StandardYoungTableau from_rows(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const;  // number of entries
  StandardYoungTableau transposed() const;

  friend bool operator==(const StandardYoungTableau& a,
                         const StandardYoungTableau& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::vector<std::vector<int>> rows_;
};

/// Row-insertion tableau of an involution. For involutions the insertion
/// and recording tableaux coincide, so the single tableau determines the
/// permutation. Throws NotAnInvolution otherwise.
StandardYoungTableau rsk_tableau(const Permutation& sigma);

/// Inverse of rsk_tableau.
Permutation inverse_rsk(const StandardYoungTableau& t);

/// The reflection conjugate: inverse_rsk(transpose(rsk(sigma))). Des(sigma)
/// and Des(perp(sigma)) partition [1, n-1].
Permutation perp(const Permutation& sigma);

/// Reverse-complement: evac(sigma)_i = n+1 - sigma_{n+1-i}. Maps involutions
/// to involutions and swaps excedances with weak-excedance complements.
Permutation evac(const Permutation& sigma);

/// Entries i whose successor i+1 sits strictly below and weakly left;
/// equals Des(inverse_rsk(t)).
std::vector<int> tableau_descent_set(const StandardYoungTableau& t);

}  // namespace invpoly
