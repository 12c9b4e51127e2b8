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

#include <boost/multiprecision/cpp_int.hpp>

namespace invpoly {

/// All coefficients are exact arbitrary-precision integers. No floating
/// point is used anywhere in the algebraic layer.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);

/// Binomial coefficient C(n, k) for n >= 0, with C(n, k) = 0 when k < 0
/// or k > n.
BigInt binomial(long long n, long long k);

}  // namespace invpoly
