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

#include "invpoly/report.hpp"

#include "invpoly/analysis.hpp"
#include "invpoly/formulas.hpp"

namespace invpoly {

namespace {

void add_row(PaperReport& rep, const GoldenEntry& g, const std::string& method,
             bool required, Poly computed) {
  PaperReportRow row;
  row.family = g.family;
  row.method = method;
  row.required = required;
  const Poly want = g.poly();
  row.match = computed == want;
  if (!row.match) {
    const std::size_t top =
        std::max(computed.coeffs().size(), want.coeffs().size());
    for (std::size_t i = 0; i < top; ++i) {
      if (computed.coeff(i) != want.coeff(i)) {
        row.first_diff = i;
        row.got_at_diff = computed.coeff(i).str();
        row.want_at_diff = want.coeff(i).str();
        break;
      }
    }
  }
  row.computed = std::move(computed);
  if (required) rep.pass = rep.pass && row.match;
  rep.rows.push_back(std::move(row));
}

const GoldenEntry& entry(const std::string& family) {
  for (const auto& g : golden_n10())
    if (g.family == family) return g;
  throw Error("unknown golden family: " + family);
}

}  // namespace

PaperReport paper_n10_report(int jobs) {
  PaperReport rep;
  const int n = 10;

  {
    const auto& g = entry("I_d");
    add_row(rep, g, "brute", true,
            distribution(InvolutionClass::I, n, Statistic::Descents, jobs));
    add_row(rep, g, "formula", true, descent_poly_formula(n));
  }
  {
    const auto& g = entry("I_exc");
    add_row(rep, g, "brute", true,
            distribution(InvolutionClass::I, n, Statistic::Exc, jobs));
    add_row(rep, g, "closed", true, exc_poly(n));
  }
  {
    const auto& g = entry("I_maj");
    add_row(rep, g, "brute", true,
            distribution(InvolutionClass::I, n, Statistic::Maj, jobs));
  }
  {
    const auto& g = entry("I_inv");
    add_row(rep, g, "brute", true,
            distribution(InvolutionClass::I, n, Statistic::Inv, jobs));
    add_row(rep, g, "recurrence", true, inv_poly(n, Method::Recurrence));
    add_row(rep, g, "matrix", true, inv_poly(n, Method::Matrix));
  }
  {
    const auto& g = entry("IB_invB");
    add_row(rep, g, "brute", true,
            distribution(InvolutionClass::IB, n, Statistic::InvB, jobs));
    add_row(rep, g, "recurrence", true, inv_b_poly(n, Method::Recurrence));
    add_row(rep, g, "matrix", true, inv_b_poly(n, Method::Matrix));
    add_row(rep, g, "legacy-recurrence", false, inv_b_poly_legacy(n));
  }
  {
    const auto& g = entry("ID_invD");
    add_row(rep, g, "brute", true,
            distribution(InvolutionClass::ID, n, Statistic::InvD, jobs));
    add_row(rep, g, "recurrence", true, inv_do_polys(n).first);
    add_row(rep, g, "legacy-recurrence", false, inv_do_polys_legacy(n).first);
  }
  {
    const auto& g = entry("IO_invD");
    add_row(rep, g, "brute", true,
            distribution(InvolutionClass::IO, n, Statistic::InvD, jobs));
    add_row(rep, g, "recurrence", true, inv_do_polys(n).second);
    add_row(rep, g, "legacy-recurrence", false, inv_do_polys_legacy(n).second);
  }
  return rep;
}

}  // namespace invpoly
