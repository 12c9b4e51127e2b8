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

#include "invpoly/rsk.hpp"

#include <algorithm>

namespace invpoly {

StandardYoungTableau StandardYoungTableau::from_rows(
    std::vector<std::vector<int>> rows) {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.empty()) throw InvalidWindow("tableau: empty row");
    if (r > 0 && row.size() > rows[r - 1].size())
      throw InvalidWindow("tableau: row lengths must weakly decrease");
    for (std::size_t c = 0; c < row.size(); ++c) {
      int v = row[c];
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw InvalidWindow("tableau: entries must be exactly 1..n");
      seen[static_cast<std::size_t>(v)] = 1;
      if (c > 0 && row[c - 1] >= v)
        throw InvalidWindow("tableau: rows must strictly increase");
      if (r > 0 && rows[r - 1][c] >= v)
        throw InvalidWindow("tableau: columns must strictly increase");
    }
  }
  StandardYoungTableau t;
  t.rows_ = std::move(rows);
  return t;
}

int StandardYoungTableau::size() const {
  int n = 0;
  for (const auto& r : rows_) n += static_cast<int>(r.size());
  return n;
}

StandardYoungTableau StandardYoungTableau::transposed() const {
  StandardYoungTableau t;
  if (rows_.empty()) return t;
  t.rows_.resize(rows_[0].size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      t.rows_[c].push_back(rows_[r][c]);
  return t;
}

StandardYoungTableau rsk_tableau(const Permutation& sigma) {
  if (!sigma.is_involution())
    throw NotAnInvolution("rsk_tableau: input must be an involution");
  std::vector<std::vector<int>> rows;
  for (int x : sigma.window()) {
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({x});
        break;
      }
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        break;
      }
      std::swap(*it, x);  // bump and continue into the next row
    }
  }
  return StandardYoungTableau::from_rows(std::move(rows));
}

Permutation inverse_rsk(const StandardYoungTableau& t) {
  // Unwind row insertion with recording tableau equal to t. The recording
  // copy locates the cell removed at each step; the insertion copy is
  // reverse-bumped and diverges from it along the way.
  std::vector<std::vector<int>> p(t.rows());
  std::vector<std::vector<int>> q(t.rows());
  const int n = t.size();
  std::vector<int> window(static_cast<std::size_t>(n));
  for (int k = n; k >= 1; --k) {
    std::size_t row = q.size();
    for (std::size_t r = 0; r < q.size(); ++r) {
      if (!q[r].empty() && q[r].back() == k) {
        row = r;
        break;
      }
    }
    if (row == q.size()) throw InvalidWindow("inverse_rsk: malformed tableau");
    q[row].pop_back();
    if (q[row].empty()) q.erase(q.begin() + static_cast<std::ptrdiff_t>(row));
    int x = p[row].back();
    p[row].pop_back();
    if (p[row].empty()) p.erase(p.begin() + static_cast<std::ptrdiff_t>(row));
    for (std::size_t r = row; r-- > 0;) {
      // displace the rightmost entry smaller than x
      auto it = std::lower_bound(p[r].begin(), p[r].end(), x);
      --it;
      std::swap(*it, x);
    }
    window[static_cast<std::size_t>(k - 1)] = x;
  }
  return Permutation(std::move(window));
}

Permutation perp(const Permutation& sigma) {
  return inverse_rsk(rsk_tableau(sigma).transposed());
}

Permutation evac(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    w[static_cast<std::size_t>(i - 1)] = n + 1 - sigma.apply(n + 1 - i);
  return Permutation(std::move(w));
}

std::vector<int> tableau_descent_set(const StandardYoungTableau& t) {
  const int n = t.size();
  std::vector<std::pair<int, int>> cell(static_cast<std::size_t>(n) + 1);
  for (std::size_t r = 0; r < t.rows().size(); ++r)
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c)
      cell[static_cast<std::size_t>(t.rows()[r][c])] = {static_cast<int>(r),
                                                        static_cast<int>(c)};
  std::vector<int> des;
  for (int i = 1; i < n; ++i) {
    auto [r0, c0] = cell[static_cast<std::size_t>(i)];
    auto [r1, c1] = cell[static_cast<std::size_t>(i + 1)];
    if (r1 > r0 && c1 <= c0) des.push_back(i);
  }
  return des;
}

}  // namespace invpoly
