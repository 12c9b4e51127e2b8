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

#include <optional>
#include <string>
#include <vector>

#include "invpoly/enumerate.hpp"
#include "invpoly/poly.hpp"

namespace invpoly {

/// Per-sequence property verdicts. A first_violation index is present
/// exactly when the corresponding flag is false.
struct SequenceReport {
  bool symmetric = true;
  bool unimodal = true;
  bool log_concave = true;
  bool stride2_log_concave = true;
  bool internal_zeros = false;
  std::optional<std::size_t> symmetric_violation;
  std::optional<std::size_t> unimodal_violation;
  std::optional<std::size_t> log_concave_violation;
  std::optional<std::size_t> stride2_violation;
  std::vector<BigInt> even_part;
  std::vector<BigInt> odd_part;
};

/// Property report over a nonnegative coefficient sequence. The
/// log-concavity predicate is the raw inequality c_i^2 >= c_{i-1} c_{i+1};
/// the internal_zeros flag lets callers apply the no-internal-zeros side
/// condition separately. Throws NegativeCoefficient.
SequenceReport sequence_report(const std::vector<BigInt>& coeffs);

struct PartialUnimodality {
  bool ok = true;
  int limit = 0;  // floor of the theorem bound; empty range passes trivially
  std::optional<int> first_violation;  // failing index within [1, limit]
};

/// Strict rise of the descent distribution on the prefix dictated by the
/// theorem bound (0.175 n^0.931 for class I, n^0.925/10 for class J) and
/// the mirrored strict fall on the suffix, on the brute-force polynomial.
PartialUnimodality partial_unimodality(int n, InvolutionClass cls, int jobs = 1);

/// Exact joint (d, maj) symmetry [t^i q^j] == [t^{n-1-i} q^{C(n,2)-j}].
bool joint_symmetry(int n, int jobs = 1);

struct ConjectureFinding {
  int n = 0;
  std::string item;  // "brenti", "i", "ii", "iii", "iv", "v"
  bool pass = true;
  std::optional<std::size_t> first_violation;  // exponent index
  bool violation_involves_zero = false;
};

struct ConjectureReport {
  int n_max = 0;
  std::vector<ConjectureFinding> rows;
  bool all_pass = true;
};

/// Tests, for 4 <= n <= n_max, the literal statements:
///   brenti: descent distribution of I_n is log-concave;
///   i:   maj distribution of I_n is log-concave;
///   ii:  ([q^i] I^inv_n)^2 >= [q^{i-2}][q^{i+2}] for 2 <= i <= C(n,2)-2;
///   iii/iv/v: even- and odd-indexed coefficient subsequences of the
///   type-B / type-D / odd-complement inversion distributions are unimodal.
/// maj and descent polynomials come from enumeration; the others from the
/// cross-validated recurrences.
ConjectureReport conjecture_suite(int n_max, int jobs = 1);

struct CrossValidateRow {
  std::string family;
  int n = 0;
  bool pass = true;
  std::optional<std::size_t> first_diff;  // exponent of first disagreement
  std::string methods;
};

struct CrossValidateReport {
  std::vector<CrossValidateRow> rows;
  std::vector<std::string> notes;
  bool all_pass = true;
};

/// Cross-method equality sweep: for every family with at least two
/// implemented routes, asserts exact polynomial equality up to the
/// per-family bounds (each capped by n_max).
CrossValidateReport cross_validate(int n_max, int jobs = 1);

}  // namespace invpoly
