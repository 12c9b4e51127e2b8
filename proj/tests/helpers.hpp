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

#include <cstdint>
#include <vector>

#include "invpoly/poly.hpp"

namespace invpoly::testing {

// Deterministic splitmix64; keeps property tests reproducible.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline Poly random_poly(Rng& rng, int max_deg, int max_abs_coeff = 4) {
  const int deg = rng.range(0, max_deg);
  std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = rng.range(-max_abs_coeff, max_abs_coeff);
  return Poly::from_coeffs(std::move(c));
}

inline std::vector<BigInt> big_vec(std::initializer_list<long long> v) {
  return std::vector<BigInt>(v.begin(), v.end());
}

}  // namespace invpoly::testing
