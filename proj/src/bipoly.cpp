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

#include "invpoly/bipoly.hpp"

#include <algorithm>
#include <sstream>

namespace invpoly {

BiPoly BiPoly::monomial(int i, int j, BigInt c) {
  BiPoly p;
  if (c != 0) p.t_.emplace(Key{i, j}, std::move(c));
  return p;
}

BigInt BiPoly::coeff(int i, int j) const {
  auto it = t_.find({i, j});
  return it == t_.end() ? BigInt(0) : it->second;
}

void BiPoly::add_term(int i, int j, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = t_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

BiPoly BiPoly::shift_mul(int i, const Poly& p) const {
  BiPoly r;
  for (const auto& [k, c] : t_) {
    for (std::size_t e = 0; e < p.coeffs().size(); ++e) {
      if (p.coeffs()[e] != 0)
        r.add_term(k.first + i, k.second + static_cast<int>(e), c * p.coeffs()[e]);
    }
  }
  return r;
}

Poly BiPoly::specialize_x(const BigInt& x) const {
  std::map<int, BigInt> byq;
  for (const auto& [k, c] : t_) {
    BigInt pw = 1;
    for (int i = 0; i < k.first; ++i) pw *= x;
    byq[k.second] += c * pw;
  }
  int deg = byq.empty() ? -1 : byq.rbegin()->first;
  std::vector<BigInt> cs(static_cast<std::size_t>(deg + 1), 0);
  for (const auto& [e, c] : byq) cs[static_cast<std::size_t>(e)] = c;
  return Poly::from_coeffs(std::move(cs));
}

int BiPoly::max_x_degree() const {
  int m = -1;
  for (const auto& [k, c] : t_) m = std::max(m, k.first);
  return m;
}

int BiPoly::max_q_degree() const {
  int m = -1;
  for (const auto& [k, c] : t_) m = std::max(m, k.second);
  return m;
}

std::string BiPoly::to_string(std::string_view xvar, std::string_view qvar) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    BigInt mag = abs(c);
    bool wrote = false;
    if (mag != 1 || (k.first == 0 && k.second == 0)) {
      os << mag.str();
      wrote = true;
    }
    auto emit = [&](std::string_view v, int e) {
      if (e == 0) return;
      if (wrote) os << "*";
      os << v;
      if (e > 1) os << "^" << e;
      wrote = true;
    };
    emit(xvar, k.first);
    emit(qvar, k.second);
  }
  return os.str();
}

}  // namespace invpoly
