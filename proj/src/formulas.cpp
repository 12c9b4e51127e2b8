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

#include "invpoly/formulas.hpp"

namespace invpoly {

namespace {
void require(bool cond, const char* msg) {
  if (!cond) throw IndexError(msg);
}
}  // namespace

Poly exc_poly(int n) {
  require(n >= 0, "exc_poly: n >= 0");
  std::vector<BigInt> c(static_cast<std::size_t>(n / 2) + 1, 0);
  const BigInt nf = factorial(static_cast<unsigned>(n));
  for (int k = 0; 2 * k <= n; ++k) {
    BigInt den = factorial(static_cast<unsigned>(k)) *
                 factorial(static_cast<unsigned>(n - 2 * k));
    den <<= k;  // times 2^k
    c[static_cast<std::size_t>(k)] = nf / den;
  }
  return Poly::from_coeffs(std::move(c));
}

Poly hermite_poly(int n) {
  require(n >= 0, "hermite_poly: n >= 0");
  Poly prev = Poly::one();
  if (n == 0) return prev;
  Poly cur = Poly::monomial(1);
  for (int m = 1; m < n; ++m) {
    Poly next = cur.shifted(1) - BigInt(m) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

HermiteCheck hermite_check(int n) {
  HermiteCheck r;
  r.h = hermite_poly(n);
  const Poly e = exc_poly(n);
  r.ok = true;
  for (int k = 0; 2 * k <= n; ++k) {
    BigInt want = e.coeff(static_cast<std::size_t>(k));
    if (k % 2 == 1) want = -want;
    if (r.h.coeff(static_cast<std::size_t>(n - 2 * k)) != want) {
      r.ok = false;
      r.offending_k = k;
      break;
    }
  }
  return r;
}

Poly inv_poly(int n, Method method) {
  require(n >= 0, "inv_poly: n >= 0");
  switch (method) {
    case Method::Recurrence: {
      Poly prev = Poly::one();  // I_0
      if (n == 0) return prev;
      Poly cur = Poly::one();  // I_1
      for (int m = 2; m <= n; ++m) {
        Poly next = cur + g_seq(m) * prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      return cur;
    }
    case Method::Matrix: {
      require(n >= 2, "inv_poly: matrix method requires n >= 2");
      PolyMat2 a = PolyMat2::identity();
      for (int i = 2; i <= n; ++i)
        a = a * PolyMat2{Poly::one(), Poly::one(), g_seq(i), Poly()};
      return a.a11 + a.a21;
    }
    default:
      throw Error("inv_poly: method must be recurrence or matrix");
  }
}

Poly fpf_inv_poly(int m, Method method) {
  require(m >= 0, "fpf_inv_poly: m >= 0");
  switch (method) {
    case Method::Closed: {
      Poly r = Poly::monomial(static_cast<std::size_t>(m));
      for (int i = 1; i < m; ++i) {
        // (1 - q^{2(2i+1)}) / (1 - q^2) = 1 + q^2 + ... + q^{4i}
        r *= geometric_q2(2 * i + 1);
      }
      return r;
    }
    case Method::Recurrence: {
      Poly cur = Poly::one();  // J_0
      for (int j = 0; j < m; ++j) {
        // J_{2j+2} = q (1-q^{2(2j+1)})/(1-q^2) J_{2j}
        cur *= geometric_q2(2 * j + 1).shifted(1);
      }
      return cur;
    }
    default:
      throw Error("fpf_inv_poly: method must be closed or recurrence");
  }
}

BiPoly z_poly(int n) {
  require(n >= 0, "z_poly: n >= 0");
  BiPoly prev = BiPoly::monomial(0, 0);  // Z_0 = 1
  if (n == 0) return prev;
  BiPoly cur = BiPoly::monomial(1, 0);  // Z_1 = x
  for (int m = 1; m < n; ++m) {
    // Z_{m+1} = x Z_m + q (1-q^{2m})/(1-q^2) Z_{m-1}
    BiPoly next = cur.shift_mul(1, Poly::one()) +
                  prev.shift_mul(0, geometric_q2(m).shifted(1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

namespace {
// q (1 - q^{4m}) / (1 - q^2) = q + q^3 + ... + q^{4m-1}
Poly b_coupling(int m) { return geometric_q2(2 * m).shifted(1); }
}  // namespace

Poly inv_b_poly(int n, Method method) {
  require(n >= 0, "inv_b_poly: n >= 0");
  switch (method) {
    case Method::Recurrence: {
      Poly prev = Poly::one();   // B_0
      if (n == 0) return prev;
      Poly cur = Poly{1, 1};     // B_1
      for (int m = 2; m <= n; ++m) {
        // B_m = (1+q^{2m-1}) B_{m-1} + q (1-q^{4(m-1)})/(1-q^2) B_{m-2}
        Poly next = (Poly::one() + Poly::monomial(static_cast<std::size_t>(2 * m - 1))) * cur +
                    b_coupling(m - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      return cur;
    }
    case Method::Matrix: {
      require(n >= 1, "inv_b_poly: matrix method requires n >= 1");
      PolyMat2 w = PolyMat2::identity();
      for (int i = 2; i <= n; ++i) {
        Poly u = Poly::one() + Poly::monomial(static_cast<std::size_t>(2 * i - 1));
        w = w * PolyMat2{u, Poly::one(), b_coupling(i - 1), Poly()};
      }
      return Poly{1, 1} * w.a11 + w.a21;
    }
    default:
      throw Error("inv_b_poly: method must be recurrence or matrix");
  }
}

std::pair<Poly, Poly> inv_do_polys(int n) {
  require(n >= 0, "inv_do_polys: n >= 0");
  Poly dprev = Poly::one(), oprev = Poly();  // size 0
  if (n == 0) return {dprev, oprev};
  Poly dcur = Poly::one(), ocur = Poly::one();  // size 1
  for (int m = 2; m <= n; ++m) {
    // coupling at target size m: q (1+q^{2(m-2)})(1-q^{2(m-1)})/(1-q^2)
    Poly coup = ((Poly::one() + Poly::monomial(static_cast<std::size_t>(2 * (m - 2)))) *
                 geometric_q2(m - 1))
                    .shifted(1);
    Poly dnext = dcur + ocur.shifted(static_cast<std::size_t>(2 * (m - 1))) + coup * dprev;
    Poly onext = ocur + dcur.shifted(static_cast<std::size_t>(2 * (m - 1))) + coup * oprev;
    dprev = std::move(dcur);
    oprev = std::move(ocur);
    dcur = std::move(dnext);
    ocur = std::move(onext);
  }
  return {dcur, ocur};
}

Poly jd_poly(int n, Method method) {
  if (n < 0 || n % 2 != 0) throw OddSize("jd_poly: n must be even and >= 0");
  switch (method) {
    case Method::Closed: {
      if (n == 0) return Poly::one();
      Poly r = Poly::monomial(static_cast<std::size_t>(n / 2), 2);
      for (int i = 1; i < n / 2; ++i) {
        // (1+q^{4i}) (1-q^{4i+2})/(1-q^2)
        r *= (Poly::one() + Poly::monomial(static_cast<std::size_t>(4 * i))) *
             geometric_q2(2 * i + 1);
      }
      return r;
    }
    case Method::Recurrence: {
      Poly prev = Poly::one();       // JD_0
      if (n == 0) return prev;
      Poly cur = Poly::monomial(1, 2);  // JD_2
      for (int m = 0; m + 4 <= n; m += 2) {
        // JD_{m+4} = (q + q^{4m+9}) JD_{m+2}
        //          + q^4 (q^{4(m+1)}-1)(q^{2m+4}-1)(q^{2m}+1)/(q^2-1)^2 JD_m
        Poly t1 = (Poly::monomial(1) + Poly::monomial(static_cast<std::size_t>(4 * m + 9))) * cur;
        Poly t2 = geometric_q2(2 * (m + 1)) * geometric_q2(m + 2) *
                  (Poly::one() + Poly::monomial(static_cast<std::size_t>(2 * m)));
        Poly next = t1 + t2.shifted(4) * prev;
        prev = std::move(cur);
        cur = std::move(next);
      }
      return cur;
    }
    default:
      throw Error("jd_poly: method must be closed or recurrence");
  }
}

Poly inv_b_poly_legacy(int n) {
  require(n >= 2, "inv_b_poly_legacy: n >= 2");
  Poly prev = Poly{1, 2, 0, 2, 1};                       // B_2 seed
  if (n == 2) return prev;
  Poly cur = Poly{1, 3, 1, 3, 2, 2, 3, 1, 3, 1};         // B_3 seed
  for (int m = 2; m + 2 <= n; ++m) {
    // as circulated: (1+q^{2m+3}) B_{m+1} + q(1+q^2)(1-q^{2(m+1)})/(1-q^2) B_m
    Poly coup = (Poly{1, 0, 1} * geometric_q2(m + 1)).shifted(1);
    Poly next = (Poly::one() + Poly::monomial(static_cast<std::size_t>(2 * m + 3))) * cur +
                coup * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::pair<Poly, Poly> inv_do_polys_legacy(int n) {
  require(n >= 2, "inv_do_polys_legacy: n >= 2");
  Poly dprev = Poly{1, 1, 1}, oprev = Poly{1, 1, 1};  // formal size-2 seeds
  if (n == 2) return {dprev, oprev};
  Poly dcur = Poly{1, 3, 1, 2, 1, 1, 1};
  Poly ocur = Poly{1, 1, 1, 2, 1, 3, 1};
  for (int m = 3; m < n; ++m) {
    // as circulated: D_{m+1} = D_m + q^{2m} O_m
    //                + (q^{2(m-1)} + q(1-q^{2m})/(1-q^2)) D_{m-1}
    Poly coup = Poly::monomial(static_cast<std::size_t>(2 * (m - 1))) +
                geometric_q2(m).shifted(1);
    Poly dnext = dcur + ocur.shifted(static_cast<std::size_t>(2 * m)) + coup * dprev;
    Poly onext = ocur + dcur.shifted(static_cast<std::size_t>(2 * m)) + coup * oprev;
    dprev = std::move(dcur);
    oprev = std::move(ocur);
    dcur = std::move(dnext);
    ocur = std::move(onext);
  }
  return {dcur, ocur};
}

Poly inv_b_vproduct_legacy(int n) {
  require(n >= 3, "inv_b_vproduct_legacy: n >= 3");
  PolyMat2 v = PolyMat2::identity();
  for (int i = 3; i <= n; ++i) {
    Poly u = Poly::one() + Poly::monomial(static_cast<std::size_t>(2 * i - 1));
    Poly vi = Poly{1, 0, 1} * geometric_q2(i - 1);
    v = v * PolyMat2{u, Poly::one(), vi, Poly()};
  }
  return (v.a11 + v.a21) * Poly{1, 2, 0, 2, 1};
}

Poly full_group_inv_gf(char group, int n) {
  require(n >= 1, "full_group_inv_gf: n >= 1");
  Poly r = Poly::one();
  if (group == 'B') {
    for (int i = 1; i <= n; ++i) r *= q_bracket(2 * i);
  } else if (group == 'D') {
    for (int i = 1; i < n; ++i) r *= q_bracket(2 * i);
    r *= q_bracket(n);
  } else {
    throw Error("full_group_inv_gf: group must be B or D");
  }
  return r;
}

BigInt alpha_coeff(int n, int p) {
  require(n >= 2 && n % 2 == 0, "alpha_coeff: n must be even and >= 2");
  require(p >= 1 && p <= n, "alpha_coeff: p out of range [1, n]");
  BigInt s = 0;
  for (int k = 0; k <= p - 1; ++k) {
    BigInt term = binomial(n + 1, k) *
                  binomial(binomial(p - k + 1, 2).convert_to<long long>() + n / 2 - 1, n / 2);
    s += (k % 2 == 0) ? term : -term;
  }
  return s;
}

BigInt gamma_direct(int n, int r) {
  require(n >= 0 && r >= 0, "gamma_direct: nonnegative arguments");
  if (r == 0) return 1;
  BigInt s = 0;
  const long long half = binomial(r + 1, 2).convert_to<long long>();
  for (int i = 0; 2 * i <= n; ++i)
    s += binomial(n - 2 * i + r, r) * binomial(i + half - 1, i);
  return s;
}

BigInt gamma_series(int n, int r) {
  require(n >= 0 && r >= 0, "gamma_series: nonnegative arguments");
  return series_coeff(r + 1, binomial(r + 2, 2).convert_to<long long>(), n);
}

BigInt beta_coeff(int n, int k) {
  require(n >= 1, "beta_coeff: n >= 1");
  require(k >= 0 && k <= n - 1, "beta_coeff: k out of range [0, n-1]");
  BigInt s = 0;
  for (int j = 0; j <= k; ++j) {
    BigInt term = binomial(n + 1, j) * gamma_direct(n, k - j);
    s += (j % 2 == 0) ? term : -term;
  }
  return s;
}

BigInt f_coeff(int n, int p) {
  require(n >= 2 && n % 2 == 0, "f_coeff: n must be even and >= 2");
  require(p >= 0, "f_coeff: p >= 0");
  return binomial(binomial(p + 1, 2).convert_to<long long>() + n / 2 - 1, n / 2);
}

Poly fpf_descent_poly_formula(int n) {
  require(n >= 2 && n % 2 == 0, "fpf_descent_poly_formula: n must be even and >= 2");
  std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
  for (int p = 1; p <= n; ++p) c[static_cast<std::size_t>(p)] = alpha_coeff(n, p);
  return Poly::from_coeffs(std::move(c));
}

Poly descent_poly_formula(int n) {
  require(n >= 1, "descent_poly_formula: n >= 1");
  std::vector<BigInt> c(static_cast<std::size_t>(n), 0);
  for (int k = 0; k <= n - 1; ++k) c[static_cast<std::size_t>(k)] = beta_coeff(n, k);
  return Poly::from_coeffs(std::move(c));
}

}  // namespace invpoly
