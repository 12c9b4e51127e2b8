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

#include <algorithm>

#include "invpoly/enumerate.hpp"
#include "invpoly/rsk.hpp"

using namespace invpoly;

TEST_CASE("tableau construction and validation") {
  CHECK_NOTHROW(StandardYoungTableau::from_rows({{1, 3}, {2, 4}}));
  CHECK_THROWS_AS(StandardYoungTableau::from_rows({{1, 2}, {3, 4, 5}}), InvalidWindow);
  CHECK_THROWS_AS(StandardYoungTableau::from_rows({{2, 1}}), InvalidWindow);
  CHECK_THROWS_AS(StandardYoungTableau::from_rows({{1, 2}, {2}}), InvalidWindow);
  CHECK_THROWS_AS(StandardYoungTableau::from_rows({{1, 4}, {2}}), InvalidWindow);

  const auto t = StandardYoungTableau::from_rows({{1, 3}, {2, 4}});
  CHECK(t.size() == 4);
  CHECK(t.transposed() == StandardYoungTableau::from_rows({{1, 2}, {3, 4}}));
  CHECK(t.transposed().transposed() == t);
}

TEST_CASE("rsk examples") {
  CHECK(rsk_tableau(Permutation({2, 1, 4, 3})) ==
        StandardYoungTableau::from_rows({{1, 3}, {2, 4}}));
  CHECK(rsk_tableau(Permutation({1, 2, 3})) ==
        StandardYoungTableau::from_rows({{1, 2, 3}}));
  CHECK(rsk_tableau(Permutation({3, 2, 1})) ==
        StandardYoungTableau::from_rows({{1}, {2}, {3}}));
  CHECK_THROWS_AS(rsk_tableau(Permutation({2, 3, 1})), NotAnInvolution);
}

TEST_CASE("perp examples") {
  CHECK(perp(Permutation({2, 1, 4, 3})) == Permutation({3, 4, 1, 2}));
  CHECK(perp(Permutation({1, 2, 3, 4})) == Permutation({4, 3, 2, 1}));
  CHECK(perp(perp(Permutation({2, 1, 4, 3}))) == Permutation({2, 1, 4, 3}));
}

TEST_CASE("evac examples") {
  CHECK(evac(Permutation({1, 3, 2})) == Permutation({2, 1, 3}));
  CHECK(evac(Permutation({2, 1, 4, 3})) == Permutation({2, 1, 4, 3}));
  CHECK(evac(Permutation({1, 2, 3, 4, 5})) == Permutation({1, 2, 3, 4, 5}));
}

TEST_CASE("tableau descent set examples") {
  CHECK(tableau_descent_set(StandardYoungTableau::from_rows({{1, 3}, {2, 4}})) ==
        std::vector<int>{1, 3});
  CHECK(tableau_descent_set(StandardYoungTableau::from_rows({{1, 2, 3, 4}})).empty());
  CHECK(tableau_descent_set(StandardYoungTableau::from_rows({{1}, {2}, {3}})) ==
        std::vector<int>{1, 2});
}

TEST_CASE("bijection invariants over all involutions up to size 8") {
  for (int n = 0; n <= 8; ++n) {
    enumerate_class(InvolutionClass::I, n, [&](const std::vector<int>& w) {
      const Permutation sigma(w);
      const StandardYoungTableau t = rsk_tableau(sigma);
      CHECK(inverse_rsk(t) == sigma);

      const ClassicalStats s = classical_stats(sigma);
      CHECK(tableau_descent_set(t) == s.descent_set);

      const Permutation p = perp(sigma);
      CHECK(p.is_involution());
      CHECK(perp(p) == sigma);
      const ClassicalStats sp = classical_stats(p);

      // Des(sigma) and Des(perp) partition [1, n-1]
      std::vector<int> merged = s.descent_set;
      merged.insert(merged.end(), sp.descent_set.begin(), sp.descent_set.end());
      std::sort(merged.begin(), merged.end());
      std::vector<int> full;
      for (int i = 1; i < n; ++i) full.push_back(i);
      CHECK(merged == full);

      // partial-descent complement identity
      for (int i = 1; i < n; ++i)
        CHECK(sp.partial_descents[static_cast<std::size_t>(i - 1)] ==
              n - i - s.partial_descents[static_cast<std::size_t>(i - 1)]);

      const Permutation ev = evac(sigma);
      CHECK(ev.is_involution());
      CHECK(evac(ev) == sigma);
      CHECK(classical_stats(ev).wexc == n - s.exc);
    });
  }
}

TEST_CASE("descent and maj distributions are symmetric") {
  for (int n = 1; n <= 10; ++n) {
    const Poly d = distribution(InvolutionClass::I, n, Statistic::Descents);
    const Poly m = distribution(InvolutionClass::I, n, Statistic::Maj);
    CHECK(d == d.reversed());
    CHECK(m == m.reversed());
  }
}
