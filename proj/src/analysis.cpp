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

#include "invpoly/analysis.hpp"

#include <cmath>

#include "invpoly/bigint.hpp"
#include "invpoly/formulas.hpp"

namespace invpoly {

SequenceReport sequence_report(const std::vector<BigInt>& coeffs) {
  for (const auto& c : coeffs)
    if (c < 0) throw NegativeCoefficient("sequence_report: negative coefficient");
  SequenceReport r;
  const std::size_t len = coeffs.size();
  for (std::size_t i = 0; i < len; ++i)
    (i % 2 == 0 ? r.even_part : r.odd_part).push_back(coeffs[i]);

  for (std::size_t i = 0; i < len; ++i) {
    if (coeffs[i] != coeffs[len - 1 - i]) {
      r.symmetric = false;
      r.symmetric_violation = i;
      break;
    }
  }

  std::size_t i = 0;
  while (i + 1 < len && coeffs[i] <= coeffs[i + 1]) ++i;
  while (i + 1 < len && coeffs[i] >= coeffs[i + 1]) ++i;
  if (i + 1 < len) {
    r.unimodal = false;
    r.unimodal_violation = i + 1;
  }

  for (std::size_t j = 1; j + 1 < len; ++j) {
    if (coeffs[j] * coeffs[j] < coeffs[j - 1] * coeffs[j + 1]) {
      r.log_concave = false;
      r.log_concave_violation = j;
      break;
    }
  }

  for (std::size_t j = 2; j + 2 < len; ++j) {
    if (coeffs[j] * coeffs[j] < coeffs[j - 2] * coeffs[j + 2]) {
      r.stride2_log_concave = false;
      r.stride2_violation = j;
      break;
    }
  }

  std::size_t first_nz = len, last_nz = 0;
  for (std::size_t j = 0; j < len; ++j) {
    if (coeffs[j] != 0) {
      if (first_nz == len) first_nz = j;
      last_nz = j;
    }
  }
  for (std::size_t j = first_nz; first_nz < len && j < last_nz; ++j) {
    if (coeffs[j] == 0) {
      r.internal_zeros = true;
      break;
    }
  }

  // Nonnegative + log-concave + no internal zeros forces unimodality.
  if (r.log_concave && !r.internal_zeros && !r.unimodal)
    throw Error("sequence_report: unimodality invariant violated");
  return r;
}

PartialUnimodality partial_unimodality(int n, InvolutionClass cls, int jobs) {
  if (cls != InvolutionClass::I && cls != InvolutionClass::J)
    throw IncompatibleStatistic("partial_unimodality: class must be I or J");
  if (n < 2) throw IndexError("partial_unimodality: n >= 2");
  if (cls == InvolutionClass::J && n % 2 != 0)
    throw OddSize("partial_unimodality: class J requires even n");

  PartialUnimodality r;
  const Poly p = distribution(cls, n, Statistic::Descents, jobs);
  auto c = [&](int e) { return e >= 0 ? p.coeff(static_cast<std::size_t>(e)) : BigInt(0); };
  if (cls == InvolutionClass::I) {
    r.limit = static_cast<int>(0.175 * std::pow(n, 0.931));
    for (int k = 1; k <= r.limit; ++k) {
      // strict rise at (k-1, k); mirrored strict fall at (n-1-k, n-k)
      if (!(c(k - 1) < c(k) && c(n - 1 - k) > c(n - k))) {
        r.ok = false;
        r.first_violation = k;
        break;
      }
    }
  } else {
    r.limit = static_cast<int>(std::pow(n, 0.925) / 10.0);
    for (int i = 1; i <= r.limit; ++i) {
      // strict rise at (i, i+1); mirrored strict fall at (n-i-1, n-i)
      if (!(c(i) < c(i + 1) && c(n - i - 1) > c(n - i))) {
        r.ok = false;
        r.first_violation = i;
        break;
      }
    }
  }
  return r;
}

bool joint_symmetry(int n, int jobs) {
  if (n < 1) throw IndexError("joint_symmetry: n >= 1");
  const BiPoly j =
      joint_distribution(InvolutionClass::I, n, Statistic::Descents, Statistic::Maj, jobs);
  const int qc = static_cast<int>(binomial(n, 2).convert_to<long long>());
  for (const auto& [k, c] : j.terms())
    if (j.coeff(n - 1 - k.first, qc - k.second) != c) return false;
  return true;
}

namespace {

ConjectureFinding log_concavity_finding(int n, const char* item, const Poly& p) {
  ConjectureFinding f;
  f.n = n;
  f.item = item;
  const auto& c = p.coeffs();
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    if (c[i] * c[i] < c[i - 1] * c[i + 1]) {
      f.pass = false;
      f.first_violation = i;
      f.violation_involves_zero = c[i - 1] == 0 || c[i] == 0 || c[i + 1] == 0;
      break;
    }
  }
  return f;
}

ConjectureFinding stride2_finding(int n, const Poly& p) {
  ConjectureFinding f;
  f.n = n;
  f.item = "ii";
  const long long top = binomial(n, 2).convert_to<long long>();
  auto c = [&](long long e) { return p.coeff(static_cast<std::size_t>(e)); };
  for (long long i = 2; i <= top - 2; ++i) {
    if (c(i) * c(i) < c(i - 2) * c(i + 2)) {
      f.pass = false;
      f.first_violation = static_cast<std::size_t>(i);
      f.violation_involves_zero = c(i - 2) == 0 || c(i) == 0 || c(i + 2) == 0;
      break;
    }
  }
  return f;
}

ConjectureFinding parity_unimodal_finding(int n, const char* item, const Poly& p) {
  ConjectureFinding f;
  f.n = n;
  f.item = item;
  for (int parity : {0, 1}) {
    std::vector<BigInt> part;
    for (std::size_t i = static_cast<std::size_t>(parity); i < p.coeffs().size(); i += 2)
      part.push_back(p.coeffs()[i]);
    std::size_t i = 0;
    while (i + 1 < part.size() && part[i] <= part[i + 1]) ++i;
    while (i + 1 < part.size() && part[i] >= part[i + 1]) ++i;
    if (i + 1 < part.size()) {
      f.pass = false;
      f.first_violation = 2 * (i + 1) + static_cast<std::size_t>(parity);
      break;
    }
  }
  return f;
}

}  // namespace

ConjectureReport conjecture_suite(int n_max, int jobs) {
  if (n_max < 4) throw IndexError("conjecture_suite: n_max >= 4");
  ConjectureReport rep;
  rep.n_max = n_max;
  for (int n = 4; n <= n_max; ++n) {
    rep.rows.push_back(log_concavity_finding(
        n, "brenti", distribution(InvolutionClass::I, n, Statistic::Descents, jobs)));
    rep.rows.push_back(log_concavity_finding(
        n, "i", distribution(InvolutionClass::I, n, Statistic::Maj, jobs)));
    rep.rows.push_back(stride2_finding(n, inv_poly(n)));
    rep.rows.push_back(parity_unimodal_finding(n, "iii", inv_b_poly(n)));
    auto [dn, on] = inv_do_polys(n);
    rep.rows.push_back(parity_unimodal_finding(n, "iv", dn));
    rep.rows.push_back(parity_unimodal_finding(n, "v", on));
  }
  for (const auto& f : rep.rows) rep.all_pass = rep.all_pass && f.pass;
  return rep;
}

namespace {

std::optional<std::size_t> first_poly_diff(const Poly& a, const Poly& b) {
  const std::size_t top =
      std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t i = 0; i < top; ++i)
    if (a.coeff(i) != b.coeff(i)) return i;
  return std::nullopt;
}

void compare_row(CrossValidateReport& rep, const std::string& family, int n,
                 const std::string& methods, const Poly& ref, const Poly& other) {
  CrossValidateRow row;
  row.family = family;
  row.n = n;
  row.methods = methods;
  row.first_diff = first_poly_diff(ref, other);
  row.pass = !row.first_diff.has_value();
  rep.all_pass = rep.all_pass && row.pass;
  rep.rows.push_back(std::move(row));
}

}  // namespace

CrossValidateReport cross_validate(int n_max, int jobs) {
  if (n_max < 2) throw IndexError("cross_validate: n_max >= 2");
  CrossValidateReport rep;
  const auto cap = [n_max](int bound) { return std::min(bound, n_max); };

  for (int n = 0; n <= cap(12); ++n) {
    const Poly brute = distribution(InvolutionClass::I, n, Statistic::Inv, jobs);
    compare_row(rep, "I_inv", n, "brute=recurrence", brute, inv_poly(n, Method::Recurrence));
    if (n >= 2)
      compare_row(rep, "I_inv", n, "brute=matrix", brute, inv_poly(n, Method::Matrix));
  }
  for (int n = 0; n <= cap(12); ++n) {
    const Poly brute = distribution(InvolutionClass::J, n, Statistic::Inv, jobs);
    if (n % 2 != 0) {
      compare_row(rep, "J_inv", n, "odd=zero", brute, Poly::zero());
      continue;
    }
    compare_row(rep, "J_inv", n, "brute=closed", brute, fpf_inv_poly(n / 2, Method::Closed));
    compare_row(rep, "J_inv", n, "brute=recurrence", brute,
                fpf_inv_poly(n / 2, Method::Recurrence));
  }
  for (int n = 0; n <= cap(12); ++n)
    compare_row(rep, "I_exc", n, "brute=closed",
                distribution(InvolutionClass::I, n, Statistic::Exc, jobs), exc_poly(n));
  for (int n = 0; n <= cap(10); ++n) {
    const BiPoly brute =
        joint_distribution(InvolutionClass::I, n, Statistic::Fix, Statistic::Inv, jobs);
    const BiPoly z = z_poly(n);
    CrossValidateRow row;
    row.family = "Z";
    row.n = n;
    row.methods = "joint-brute=recurrence";
    if (z != brute) {
      row.pass = false;
      row.first_diff = 0;
    }
    rep.all_pass = rep.all_pass && row.pass;
    rep.rows.push_back(std::move(row));
    // specializations: Z_n(1,q) = I^inv_n and Z_n(0,q) = J^inv_n
    compare_row(rep, "Z", n, "x=1=I_inv", z.specialize_x(1), inv_poly(n));
    compare_row(rep, "Z", n, "x=0=J_inv", z.specialize_x(0),
                n % 2 == 0 ? fpf_inv_poly(n / 2) : Poly::zero());
  }
  for (int n = 2; n <= cap(9); ++n) {
    const Poly brute = distribution(InvolutionClass::IB, n, Statistic::InvB, jobs);
    compare_row(rep, "IB_invB", n, "brute=recurrence", brute,
                inv_b_poly(n, Method::Recurrence));
    compare_row(rep, "IB_invB", n, "brute=matrix", brute, inv_b_poly(n, Method::Matrix));
  }
  for (int n = 2; n <= cap(9); ++n) {
    auto [dn, on] = inv_do_polys(n);
    compare_row(rep, "ID_invD", n, "brute=recurrence",
                distribution(InvolutionClass::ID, n, Statistic::InvD, jobs), dn);
    compare_row(rep, "IO_invD", n, "brute=recurrence",
                distribution(InvolutionClass::IO, n, Statistic::InvD, jobs), on);
  }
  for (int n = 2; n <= cap(10); n += 2) {
    const Poly brute = distribution(InvolutionClass::JD, n, Statistic::InvD, jobs);
    compare_row(rep, "JD_invD", n, "brute=closed", brute, jd_poly(n, Method::Closed));
    compare_row(rep, "JD_invD", n, "brute=recurrence", brute,
                jd_poly(n, Method::Recurrence));
  }
  for (int n = 1; n <= cap(12); ++n)
    compare_row(rep, "I_d", n, "brute=formula",
                distribution(InvolutionClass::I, n, Statistic::Descents, jobs),
                descent_poly_formula(n));
  for (int n = 2; n <= cap(12); n += 2)
    compare_row(rep, "J_d", n, "brute=formula",
                distribution(InvolutionClass::J, n, Statistic::Descents, jobs),
                fpf_descent_poly_formula(n));

  // hermite coefficient correspondence
  {
    CrossValidateRow row;
    row.family = "hermite";
    row.n = 20;
    row.methods = "three-term=exc-coefficients";
    for (int n = 0; n <= 20; ++n) {
      const HermiteCheck hc = hermite_check(n);
      if (!hc.ok) {
        row.pass = false;
        row.first_diff = static_cast<std::size_t>(hc.offending_k);
        row.n = n;
        break;
      }
    }
    rep.all_pass = rep.all_pass && row.pass;
    rep.rows.push_back(std::move(row));
  }

  // inversion identities tying f/gamma to the assembled coefficients
  {
    CrossValidateRow row;
    row.family = "identities";
    row.n = cap(12);
    row.methods = "f-alpha, gamma-beta, gamma-series";
    bool ok = true;
    for (int n = 2; ok && n <= cap(12); n += 2) {
      for (int p = 1; ok && p <= n; ++p) {
        BigInt s = 0;
        for (int i = 0; i < p; ++i) s += binomial(n + i, n) * alpha_coeff(n, p - i);
        ok = s == f_coeff(n, p);
      }
    }
    for (int n = 1; ok && n <= cap(12); ++n) {
      for (int k = 0; ok && k <= n - 1; ++k) {
        BigInt s = 0;
        for (int i = 0; i <= k; ++i) s += binomial(n + i, i) * beta_coeff(n, k - i);
        ok = s == gamma_direct(n, k);
      }
    }
    for (int n = 0; ok && n <= cap(12); ++n)
      for (int r = 0; ok && r <= 12; ++r) ok = gamma_direct(n, r) == gamma_series(n, r);
    row.pass = ok;
    if (!ok) row.first_diff = 0;
    rep.all_pass = rep.all_pass && row.pass;
    rep.rows.push_back(std::move(row));
  }

  rep.notes.push_back(
      "hermite: the substitution form E_n(x) = (-x)^n h_n(-1/(2x)) fails at n=2 "
      "under either reading of the inner argument; the coefficient "
      "correspondence [x^{n-2k}] h_n = (-1)^k [x^k] E_n is the identity verified here.");
  rep.notes.push_back(
      "inv_b matrix route uses coupling q(1-q^{4(i-1)})/(1-q^2); the circulated "
      "variant (1+q^2)(1-q^{2(i-1)})/(1-q^2) with the product started at i=3 and "
      "weighted by the size-2 polynomial fails against enumeration already at n=3.");
  rep.notes.push_back(
      "signed-family recurrences here regenerate the standard size-2/3 seed "
      "polynomials from scratch and match enumeration; the legacy variants "
      "(inv_b_poly_legacy, inv_do_polys_legacy) reproduce the widely tabulated "
      "n=10 values instead and first diverge from enumeration at size 4.");
  return rep;
}

}  // namespace invpoly
