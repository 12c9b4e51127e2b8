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

#include "invpoly/errors.hpp"

namespace invpoly {

/// Permutation of [1, n] in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> window);  // validates; InvalidWindow

  int size() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const { return w_; }
  /// Image of i, 1-based.
  int apply(int i) const { return w_[static_cast<std::size_t>(i - 1)]; }
  bool is_involution() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.w_ == b.w_;
  }

 private:
  std::vector<int> w_;
};

/// Signed permutation: window of n nonzero integers whose absolute values
/// form a permutation of [1, n]; the implied map on [-n, n] \ {0} satisfies
/// pi(-a) = -pi(a).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window);  // validates

  int size() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const { return w_; }
  /// Image of a for a in [-n, n] \ {0}.
  int apply(int a) const {
    return a > 0 ? w_[static_cast<std::size_t>(a - 1)]
                 : -w_[static_cast<std::size_t>(-a - 1)];
  }
  bool is_involution() const;

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.w_ == b.w_;
  }

 private:
  std::vector<int> w_;
};

struct ClassicalStats {
  std::vector<int> descent_set;     // positions i with w_i > w_{i+1}, 1-based
  int d = 0;                        // |Des|
  std::vector<int> partial_descents;  // d_i = |{j >= i : j in Des}|, i = 1..n-1
  int maj = 0;
  int inv = 0;
  int exc = 0;
  int wexc = 0;
  int fix = 0;
  int trans = 0;
};

struct SignedStats {
  int n1 = 0;     // negative window entries
  int n2 = 0;     // pairs i < j with w_i + w_j < 0
  int inv = 0;    // window inversions over integer order
  int inv_b = 0;  // inv + n1 + n2
  int inv_d = 0;  // inv + n2
};

ClassicalStats classical_stats(const Permutation& sigma);
SignedStats signed_stats(const SignedPermutation& pi);

/// Window-level helpers shared by the enumeration layer.
int window_inv(const std::vector<int>& w);
int window_n1(const std::vector<int>& w);
int window_n2(const std::vector<int>& w);
std::vector<int> window_descents(const std::vector<int>& w);

enum class FixedSign { Positive, Negative };

/// Append the fixed point +-(n+1), giving an involution of size n+1.
SignedPermutation extend_fixed(const SignedPermutation& pi, FixedSign sign);

/// Two-cycle extension to size n+2: the new element n+2 is paired with k,
/// k in [-(n+1), n+1] \ {0}; existing entries shift past |k|. Preserves the
/// involution property. Throws InvalidExtension when |k| is out of range.
SignedPermutation extend_two_cycle(const SignedPermutation& pi, int k);

}  // namespace invpoly
