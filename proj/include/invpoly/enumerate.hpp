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

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "invpoly/bipoly.hpp"
#include "invpoly/poly.hpp"

namespace invpoly {

/// The six involution classes. I and J are unsigned; the rest live in the
/// signed group. ID/IO partition IB by the parity of negative entries;
/// J and JD are the fixed-point-free members of I and ID.
enum class InvolutionClass { I, J, IB, ID, IO, JD };

enum class Statistic {
  Descents,  // d
  Maj,
  Inv,
  Exc,
  Wexc,
  Fix,
  Trans,
  InvB,
  InvD,
  N1,
  N2,
};

bool is_signed_class(InvolutionClass cls);
bool statistic_applies(InvolutionClass cls, Statistic stat);

std::string_view class_name(InvolutionClass cls);
std::string_view statistic_name(Statistic stat);
std::optional<InvolutionClass> parse_class(std::string_view s);
std::optional<Statistic> parse_statistic(std::string_view s);

/// Visit every member of the class exactly once, in the canonical
/// construction order: fixed(+) before fixed(-) before two-cycles in
/// increasing |k|, positive sign first. The order is a pure function of
/// (cls, n); parallel callers see the same aggregate results.
void enumerate_class(InvolutionClass cls, int n,
                     const std::function<void(const std::vector<int>&)>& visit);

/// Construction restricted to two-cycle steps only; yields exactly the
/// fixed-point-free involutions. Used to cross-check the filter route that
/// produces J and JD.
void enumerate_pair_construction(
    int n, bool signed_steps,
    const std::function<void(const std::vector<int>&)>& visit);

BigInt class_count(InvolutionClass cls, int n, int jobs = 1);

/// Distribution polynomial: coefficient of q^k counts class members whose
/// statistic equals k. Throws IncompatibleStatistic when the statistic is
/// not defined on the class.
Poly distribution(InvolutionClass cls, int n, Statistic stat, int jobs = 1);

/// Joint distribution over a pair of statistics; exponent pair = (s1, s2).
BiPoly joint_distribution(InvolutionClass cls, int n, Statistic s1,
                          Statistic s2, int jobs = 1);

/// Inversion generating function summed over the whole group (not just
/// involutions): type 'B' uses inv_B over all signed permutations, type 'D'
/// uses inv_D over the even-sign subgroup. Exhaustive; intended for n <= 8.
Poly full_group_distribution(char group, int n);

}  // namespace invpoly
