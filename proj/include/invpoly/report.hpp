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

#include "invpoly/goldens.hpp"

namespace invpoly {

/// One (family, route) comparison against the embedded n = 10 tables.
/// Required routes gate the overall verdict; informational rows document
/// provenance (the legacy recurrences reproduce the signed tables).
struct PaperReportRow {
  std::string family;
  std::string method;
  bool required = true;
  bool match = false;
  std::optional<std::size_t> first_diff;
  std::string got_at_diff;
  std::string want_at_diff;
  Poly computed;
};

struct PaperReport {
  std::vector<PaperReportRow> rows;
  bool pass = true;  // every required row matches its golden
};

/// Recomputes the seven reference polynomials by every implemented route
/// and diffs them against the embedded tables.
PaperReport paper_n10_report(int jobs = 1);

}  // namespace invpoly
