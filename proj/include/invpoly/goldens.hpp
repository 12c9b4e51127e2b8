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

#include <string>
#include <vector>

#include "invpoly/poly.hpp"

namespace invpoly {

/// One embedded reference polynomial: the n = 10 distribution tables for
/// seven statistic/class pairs, transcribed verbatim from their original
/// publication. The unsigned four agree with enumeration; the three signed
/// ones are reproducible only through the legacy recurrence variants (see
/// formulas.hpp) and disagree with enumeration.
struct GoldenEntry {
  std::string family;  // e.g. "I_d", "IB_invB"
  std::string cls;     // involution class name
  std::string stat;    // statistic name
  int n = 0;
  std::vector<long long> coeffs;  // exponent order, index 0 upward

  Poly poly() const;
};

/// The seven n = 10 reference polynomials, in fixed order.
const std::vector<GoldenEntry>& golden_n10();

/// Golden CSV line: family,n,c0,c1,...  (decimal, exponent order).
std::string golden_csv_line(const GoldenEntry& e);

}  // namespace invpoly
