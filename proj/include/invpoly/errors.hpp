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

#include <stdexcept>
#include <string>

namespace invpoly {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Polynomial division left a nonzero remainder; signals a misapplied
/// identity upstream, never a recoverable condition.
struct NonExactDivision : Error {
  using Error::Error;
};

/// Statistic requested on a class it is not defined for
/// (e.g. inv_B on an unsigned class).
struct IncompatibleStatistic : Error {
  using Error::Error;
};

/// extend_two_cycle called with |k| out of range.
struct InvalidExtension : Error {
  using Error::Error;
};

/// An operation defined only on involutions was given a non-involution.
struct NotAnInvolution : Error {
  using Error::Error;
};

/// Window fails validation (not a (signed) permutation of [1,n]).
struct InvalidWindow : Error {
  using Error::Error;
};

/// Fixed-point-free type-D polynomial requested for odd n.
struct OddSize : Error {
  using Error::Error;
};

/// Sequence predicate requires nonnegative coefficients.
struct NegativeCoefficient : Error {
  using Error::Error;
};

/// Coefficient index outside the meaningful range of a formula.
struct IndexError : Error {
  using Error::Error;
};

/// Truncated series has no reciprocal (constant term not a unit).
struct NotInvertible : Error {
  using Error::Error;
};

}  // namespace invpoly
