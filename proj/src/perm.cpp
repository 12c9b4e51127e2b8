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

#include "invpoly/perm.hpp"

#include <cstdlib>

namespace invpoly {

namespace {
void check_window(const std::vector<int>& w, bool signed_ok) {
  const int n = static_cast<int>(w.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : w) {
    int a = std::abs(v);
    if (v == 0 || a > n || seen[static_cast<std::size_t>(a)])
      throw InvalidWindow("window is not a permutation of [1,n]");
    if (v < 0 && !signed_ok)
      throw InvalidWindow("negative entry in unsigned permutation");
    seen[static_cast<std::size_t>(a)] = 1;
  }
}
}  // namespace

Permutation::Permutation(std::vector<int> window) : w_(std::move(window)) {
  check_window(w_, false);
}

bool Permutation::is_involution() const {
  const int n = size();
  for (int i = 1; i <= n; ++i)
    if (apply(apply(i)) != i) return false;
  return true;
}

SignedPermutation::SignedPermutation(std::vector<int> window)
    : w_(std::move(window)) {
  check_window(w_, true);
}

bool SignedPermutation::is_involution() const {
  const int n = size();
  for (int i = 1; i <= n; ++i)
    if (apply(apply(i)) != i) return false;
  return true;
}

int window_inv(const std::vector<int>& w) {
  int r = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++r;
  return r;
}

int window_n1(const std::vector<int>& w) {
  int r = 0;
  for (int v : w)
    if (v < 0) ++r;
  return r;
}

int window_n2(const std::vector<int>& w) {
  int r = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] + w[j] < 0) ++r;
  return r;
}

std::vector<int> window_descents(const std::vector<int>& w) {
  std::vector<int> des;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) des.push_back(static_cast<int>(i) + 1);
  return des;
}

ClassicalStats classical_stats(const Permutation& sigma) {
  const auto& w = sigma.window();
  const int n = sigma.size();
  ClassicalStats s;
  s.descent_set = window_descents(w);
  s.d = static_cast<int>(s.descent_set.size());
  for (int pos : s.descent_set) s.maj += pos;
  s.inv = window_inv(w);
  if (n >= 1) {
    s.partial_descents.assign(static_cast<std::size_t>(n - 1), 0);
    for (int pos : s.descent_set)
      for (int i = 1; i <= pos; ++i) ++s.partial_descents[static_cast<std::size_t>(i - 1)];
  }
  for (int i = 1; i <= n; ++i) {
    int v = sigma.apply(i);
    if (v > i) ++s.exc;
    if (v >= i) ++s.wexc;
    if (v == i) ++s.fix;
    if (v != i && sigma.apply(v) == i && i < v) ++s.trans;
  }
  return s;
}

SignedStats signed_stats(const SignedPermutation& pi) {
  const auto& w = pi.window();
  SignedStats s;
  s.inv = window_inv(w);
  s.n1 = window_n1(w);
  s.n2 = window_n2(w);
  s.inv_b = s.inv + s.n1 + s.n2;
  s.inv_d = s.inv + s.n2;
  return s;
}

SignedPermutation extend_fixed(const SignedPermutation& pi, FixedSign sign) {
  std::vector<int> w = pi.window();
  int v = pi.size() + 1;
  w.push_back(sign == FixedSign::Positive ? v : -v);
  return SignedPermutation(std::move(w));
}

SignedPermutation extend_two_cycle(const SignedPermutation& pi, int k) {
  const int n = pi.size();
  const int ak = std::abs(k);
  if (k == 0 || ak > n + 1)
    throw InvalidExtension("extend_two_cycle: |k| must lie in [1, n+1]");
  const auto& w = pi.window();
  std::vector<int> out(static_cast<std::size_t>(n) + 2, 0);
  out[static_cast<std::size_t>(ak - 1)] = k > 0 ? n + 2 : -(n + 2);
  out[static_cast<std::size_t>(n + 1)] = k;
  for (int i = 1; i <= n; ++i) {
    int pos = i + (i >= ak ? 1 : 0);
    int v = w[static_cast<std::size_t>(i - 1)];
    if (std::abs(v) >= ak) v += v > 0 ? 1 : -1;
    out[static_cast<std::size_t>(pos - 1)] = v;
  }
  return SignedPermutation(std::move(out));
}

}  // namespace invpoly
