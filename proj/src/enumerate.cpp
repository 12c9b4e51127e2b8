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

#include "invpoly/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <thread>

#include "invpoly/perm.hpp"

namespace invpoly {

namespace {

constexpr int kMaxSize = 32;
constexpr int kSplitSize = 8;  // frontier depth for parallel runs

struct ClassSpec {
  bool fixed_pos = false, fixed_neg = false, tc_pos = false, tc_neg = false;
  int parity = -1;  // required parity of N1 at the leaf; -1 = any
  bool fpf = false; // keep only windows with pi(i) != +-i
};

ClassSpec spec_for(InvolutionClass cls) {
  switch (cls) {
    case InvolutionClass::I:
      return {true, false, true, false, -1, false};
    case InvolutionClass::J:
      return {true, false, true, false, -1, true};
    case InvolutionClass::IB:
      return {true, true, true, true, -1, false};
    case InvolutionClass::ID:
      return {true, true, true, true, 0, false};
    case InvolutionClass::IO:
      return {true, true, true, true, 1, false};
    case InvolutionClass::JD:
      return {true, true, true, true, 0, true};
  }
  return {};
}

bool leaf_accepted(const ClassSpec& cs, const std::vector<int>& w) {
  if (cs.parity >= 0 && (window_n1(w) & 1) != cs.parity) return false;
  if (cs.fpf) {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (std::abs(w[i]) == static_cast<int>(i) + 1) return false;
  }
  return true;
}

void fill_two_cycle(const std::vector<int>& w, int k, std::vector<int>& out) {
  const int m = static_cast<int>(w.size());
  const int ak = k > 0 ? k : -k;
  out.resize(static_cast<std::size_t>(m) + 2);
  out[static_cast<std::size_t>(ak - 1)] = k > 0 ? m + 2 : -(m + 2);
  out[static_cast<std::size_t>(m + 1)] = k;
  for (int i = 1; i <= m; ++i) {
    int pos = i + (i >= ak ? 1 : 0);
    int v = w[static_cast<std::size_t>(i - 1)];
    if (v >= ak || -v >= ak) v += v > 0 ? 1 : -1;
    out[static_cast<std::size_t>(pos - 1)] = v;
  }
}

// Scratch buffers per recursion level; avoids per-node allocation.
struct DfsScratch {
  std::array<std::vector<int>, kMaxSize + 2> buf;
};

template <typename Leaf>
void dfs(const ClassSpec& cs, int n, std::vector<int>& w, DfsScratch& scratch,
         Leaf&& leaf) {
  const int m = static_cast<int>(w.size());
  if (m == n) {
    if (leaf_accepted(cs, w)) leaf(w);
    return;
  }
  if (m + 1 <= n) {
    if (cs.fixed_pos) {
      w.push_back(m + 1);
      dfs(cs, n, w, scratch, leaf);
      w.pop_back();
    }
    if (cs.fixed_neg) {
      w.push_back(-(m + 1));
      dfs(cs, n, w, scratch, leaf);
      w.pop_back();
    }
  }
  if (m + 2 <= n && (cs.tc_pos || cs.tc_neg)) {
    std::vector<int>& child = scratch.buf[static_cast<std::size_t>(m)];
    for (int k = 1; k <= m + 1; ++k) {
      if (cs.tc_pos) {
        fill_two_cycle(w, k, child);
        dfs(cs, n, child, scratch, leaf);
      }
      if (cs.tc_neg) {
        fill_two_cycle(w, -k, child);
        dfs(cs, n, child, scratch, leaf);
      }
    }
  }
}

// Frontier prefixes at size >= kSplitSize; each is the root of an
// independent subtree, in construction order.
void collect_tasks(const ClassSpec& cs, int n, std::vector<int>& w,
                   DfsScratch& scratch, std::vector<std::vector<int>>& tasks) {
  const int m = static_cast<int>(w.size());
  if (m >= kSplitSize || m == n) {
    tasks.push_back(w);
    return;
  }
  if (m + 1 <= n) {
    if (cs.fixed_pos) {
      w.push_back(m + 1);
      collect_tasks(cs, n, w, scratch, tasks);
      w.pop_back();
    }
    if (cs.fixed_neg) {
      w.push_back(-(m + 1));
      collect_tasks(cs, n, w, scratch, tasks);
      w.pop_back();
    }
  }
  if (m + 2 <= n && (cs.tc_pos || cs.tc_neg)) {
    std::vector<int>& child = scratch.buf[static_cast<std::size_t>(m)];
    for (int k = 1; k <= m + 1; ++k) {
      if (cs.tc_pos) {
        fill_two_cycle(w, k, child);
        collect_tasks(cs, n, child, scratch, tasks);
      }
      if (cs.tc_neg) {
        fill_two_cycle(w, -k, child);
        collect_tasks(cs, n, child, scratch, tasks);
      }
    }
  }
}

// Runs leaf() over the class; Local is worker-local state, merged
// associatively at the end so results are schedule-independent.
template <typename Local, typename LeafFn>
void run_class(InvolutionClass cls, int n, int jobs,
               const std::function<Local()>& make_local,
               const LeafFn& leaf, const std::function<void(Local&&)>& merge) {
  if (n < 0 || n > kMaxSize) throw Error("enumeration size out of range");
  const ClassSpec cs = spec_for(cls);
  if (jobs <= 1 || n <= kSplitSize) {
    Local local = make_local();
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    DfsScratch scratch;
    dfs(cs, n, w, scratch, [&](const std::vector<int>& win) { leaf(local, win); });
    merge(std::move(local));
    return;
  }
  std::vector<std::vector<int>> tasks;
  {
    std::vector<int> w;
    DfsScratch scratch;
    collect_tasks(cs, n, w, scratch, tasks);
  }
  std::atomic<std::size_t> next{0};
  const int workers = std::min<int>(jobs, static_cast<int>(tasks.size()));
  std::vector<Local> locals;
  locals.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) locals.push_back(make_local());
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      DfsScratch scratch;
      for (;;) {
        std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= tasks.size()) break;
        std::vector<int> w = tasks[i];
        dfs(cs, n, w, scratch,
            [&](const std::vector<int>& win) { leaf(locals[static_cast<std::size_t>(t)], win); });
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& l : locals) merge(std::move(l));
}

int eval_stat(Statistic stat, const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  switch (stat) {
    case Statistic::Descents:
      return static_cast<int>(window_descents(w).size());
    case Statistic::Maj: {
      int s = 0;
      for (int i = 0; i + 1 < n; ++i)
        if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i + 1)]) s += i + 1;
      return s;
    }
    case Statistic::Inv:
      return window_inv(w);
    case Statistic::Exc: {
      int s = 0;
      for (int i = 0; i < n; ++i)
        if (w[static_cast<std::size_t>(i)] > i + 1) ++s;
      return s;
    }
    case Statistic::Wexc: {
      int s = 0;
      for (int i = 0; i < n; ++i)
        if (w[static_cast<std::size_t>(i)] >= i + 1) ++s;
      return s;
    }
    case Statistic::Fix: {
      int s = 0;
      for (int i = 0; i < n; ++i)
        if (w[static_cast<std::size_t>(i)] == i + 1) ++s;
      return s;
    }
    case Statistic::Trans: {
      int s = 0;
      for (int i = 0; i < n; ++i) {
        int v = w[static_cast<std::size_t>(i)];
        if (v > i + 1 && v <= n && w[static_cast<std::size_t>(v - 1)] == i + 1) ++s;
      }
      return s;
    }
    case Statistic::N1:
      return window_n1(w);
    case Statistic::N2:
      return window_n2(w);
    case Statistic::InvB:
      return window_inv(w) + window_n1(w) + window_n2(w);
    case Statistic::InvD:
      return window_inv(w) + window_n2(w);
  }
  return 0;
}

int max_stat_value(Statistic, int n) {
  // inv_B <= n^2 dominates every statistic here.
  return n * n + 1;
}

}  // namespace

bool is_signed_class(InvolutionClass cls) {
  return cls != InvolutionClass::I && cls != InvolutionClass::J;
}

bool statistic_applies(InvolutionClass cls, Statistic stat) {
  switch (stat) {
    case Statistic::Descents:
    case Statistic::Maj:
    case Statistic::Exc:
    case Statistic::Wexc:
    case Statistic::Fix:
    case Statistic::Trans:
      return !is_signed_class(cls);
    case Statistic::Inv:
      return true;  // window inversions are defined for both
    case Statistic::InvB:
    case Statistic::InvD:
    case Statistic::N1:
    case Statistic::N2:
      return is_signed_class(cls);
  }
  return false;
}

std::string_view class_name(InvolutionClass cls) {
  switch (cls) {
    case InvolutionClass::I: return "I";
    case InvolutionClass::J: return "J";
    case InvolutionClass::IB: return "IB";
    case InvolutionClass::ID: return "ID";
    case InvolutionClass::IO: return "IO";
    case InvolutionClass::JD: return "JD";
  }
  return "?";
}

std::string_view statistic_name(Statistic stat) {
  switch (stat) {
    case Statistic::Descents: return "d";
    case Statistic::Maj: return "maj";
    case Statistic::Inv: return "inv";
    case Statistic::Exc: return "exc";
    case Statistic::Wexc: return "wexc";
    case Statistic::Fix: return "fix";
    case Statistic::Trans: return "trans";
    case Statistic::InvB: return "inv_B";
    case Statistic::InvD: return "inv_D";
    case Statistic::N1: return "N1";
    case Statistic::N2: return "N2";
  }
  return "?";
}

std::optional<InvolutionClass> parse_class(std::string_view s) {
  for (InvolutionClass c : {InvolutionClass::I, InvolutionClass::J,
                            InvolutionClass::IB, InvolutionClass::ID,
                            InvolutionClass::IO, InvolutionClass::JD})
    if (s == class_name(c)) return c;
  return std::nullopt;
}

std::optional<Statistic> parse_statistic(std::string_view s) {
  for (Statistic st : {Statistic::Descents, Statistic::Maj, Statistic::Inv,
                       Statistic::Exc, Statistic::Wexc, Statistic::Fix,
                       Statistic::Trans, Statistic::InvB, Statistic::InvD,
                       Statistic::N1, Statistic::N2})
    if (s == statistic_name(st)) return st;
  return std::nullopt;
}

void enumerate_class(InvolutionClass cls, int n,
                     const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 0 || n > kMaxSize) throw Error("enumeration size out of range");
  const ClassSpec cs = spec_for(cls);
  std::vector<int> w;
  DfsScratch scratch;
  dfs(cs, n, w, scratch, [&](const std::vector<int>& win) { visit(win); });
}

void enumerate_pair_construction(
    int n, bool signed_steps,
    const std::function<void(const std::vector<int>&)>& visit) {
  if (n < 0 || n > kMaxSize) throw Error("enumeration size out of range");
  ClassSpec cs;
  cs.tc_pos = true;
  cs.tc_neg = signed_steps;
  std::vector<int> w;
  DfsScratch scratch;
  dfs(cs, n, w, scratch, [&](const std::vector<int>& win) { visit(win); });
}

BigInt class_count(InvolutionClass cls, int n, int jobs) {
  std::int64_t total = 0;
  run_class<std::int64_t>(
      cls, n, jobs, [] { return std::int64_t{0}; },
      [](std::int64_t& c, const std::vector<int>&) { ++c; },
      [&](std::int64_t&& c) { total += c; });
  return BigInt(total);
}

Poly distribution(InvolutionClass cls, int n, Statistic stat, int jobs) {
  if (!statistic_applies(cls, stat))
    throw IncompatibleStatistic(std::string("statistic ") +
                                std::string(statistic_name(stat)) +
                                " is not defined on class " +
                                std::string(class_name(cls)));
  using Hist = std::vector<std::int64_t>;
  const std::size_t width = static_cast<std::size_t>(max_stat_value(stat, n)) + 1;
  Hist total(width, 0);
  run_class<Hist>(
      cls, n, jobs, [&] { return Hist(width, 0); },
      [stat](Hist& h, const std::vector<int>& w) {
        ++h[static_cast<std::size_t>(eval_stat(stat, w))];
      },
      [&](Hist&& h) {
        for (std::size_t i = 0; i < width; ++i) total[i] += h[i];
      });
  std::vector<BigInt> coeffs(total.begin(), total.end());
  return Poly::from_coeffs(std::move(coeffs));
}

BiPoly joint_distribution(InvolutionClass cls, int n, Statistic s1,
                          Statistic s2, int jobs) {
  if (!statistic_applies(cls, s1) || !statistic_applies(cls, s2))
    throw IncompatibleStatistic("statistic pair not defined on class");
  const std::size_t w2 = static_cast<std::size_t>(max_stat_value(s2, n)) + 1;
  const std::size_t w1 = static_cast<std::size_t>(max_stat_value(s1, n)) + 1;
  using Grid = std::vector<std::int64_t>;
  Grid total(w1 * w2, 0);
  run_class<Grid>(
      cls, n, jobs, [&] { return Grid(w1 * w2, 0); },
      [&, s1, s2](Grid& g, const std::vector<int>& w) {
        ++g[static_cast<std::size_t>(eval_stat(s1, w)) * w2 +
            static_cast<std::size_t>(eval_stat(s2, w))];
      },
      [&](Grid&& g) {
        for (std::size_t i = 0; i < total.size(); ++i) total[i] += g[i];
      });
  BiPoly r;
  for (std::size_t i = 0; i < w1; ++i)
    for (std::size_t j = 0; j < w2; ++j)
      if (total[i * w2 + j] != 0)
        r.add_term(static_cast<int>(i), static_cast<int>(j),
                   BigInt(total[i * w2 + j]));
  return r;
}

Poly full_group_distribution(char group, int n) {
  if (group != 'B' && group != 'D') throw Error("full_group_distribution: group must be B or D");
  if (n < 1 || n > 8) throw Error("full_group_distribution: n out of range [1,8]");
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::int64_t> hist(static_cast<std::size_t>(n * n) + 2, 0);
  std::vector<int> w(static_cast<std::size_t>(n));
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      for (int i = 0; i < n; ++i)
        w[static_cast<std::size_t>(i)] =
            (mask >> i) & 1u ? -perm[static_cast<std::size_t>(i)]
                             : perm[static_cast<std::size_t>(i)];
      const int n1 = window_n1(w);
      if (group == 'D') {
        if (n1 & 1) continue;
        ++hist[static_cast<std::size_t>(window_inv(w) + window_n2(w))];
      } else {
        ++hist[static_cast<std::size_t>(window_inv(w) + n1 + window_n2(w))];
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<BigInt> coeffs(hist.begin(), hist.end());
  return Poly::from_coeffs(std::move(coeffs));
}

}  // namespace invpoly
