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

#include <utility>

#include "invpoly/bipoly.hpp"
#include "invpoly/poly.hpp"

namespace invpoly {

/// How a polynomial was produced; every multi-route family is
/// cross-validated against brute-force enumeration.
enum class Method { Brute, Recurrence, Matrix, Closed, CoeffFormula };

/// Excedance distribution over involutions:
/// sum_k n! / (k! (n-2k)! 2^k) x^k. Coefficient k counts involutions with
/// exactly k two-cycles.
Poly exc_poly(int n);

/// Probabilists' Hermite polynomial by the three-term recurrence
/// h_{n+1} = x h_n - n h_{n-1}, h_0 = 1, h_1 = x.
Poly hermite_poly(int n);

struct HermiteCheck {
  Poly h;           // h_n
  bool ok = false;  // coefficient correspondence with exc_poly(n)
  int offending_k = -1;
};

/// Verifies [x^{n-2k}] h_n == (-1)^k [x^k] exc_poly(n) for all k.
/// Note: the popular substitution form E_n(x) = (-x)^n h_n(-1/(2x)) fails
/// already at n = 2; the coefficient correspondence is the identity that
/// holds and is what this check asserts.
HermiteCheck hermite_check(int n);

/// Inversion distribution over involutions of the symmetric group.
/// Recurrence: I_{m} = I_{m-1} + g_m I_{m-2} with I_0 = I_1 = 1.
/// Matrix: row sums of the first column of prod_{i=2}^n [[1,1],[g_i,0]].
Poly inv_poly(int n, Method method = Method::Recurrence);

/// Inversion distribution over fixed-point-free involutions of size 2m.
/// Closed: q^m prod_{i=1}^{m-1} (1-q^{2(2i+1)})/(1-q^2).
Poly fpf_inv_poly(int m, Method method = Method::Closed);

/// Joint (fixed points, inversions) distribution Z_n(x, q):
/// Z_{n+1} = x Z_n + q (1-q^{2n})/(1-q^2) Z_{n-1}, Z_0 = 1, Z_1 = x.
BiPoly z_poly(int n);

/// Type-B involution inversion distribution.
/// Recurrence: B_{m+2} = (1+q^{2m+3}) B_{m+1}
///                       + q (1-q^{4(m+1)})/(1-q^2) B_m,  B_0 = 1, B_1 = 1+q.
/// Matrix: B_n = (1+q) W_{11} + W_{21},
///   W = prod_{i=2}^n [[1+q^{2i-1}, 1], [q (1-q^{4(i-1)})/(1-q^2), 0]].
/// The coupling q(1+q^2)(1-q^{2(m+1)})/(1-q^2) that appears in circulation
/// fails against enumeration from size 4 on (see inv_b_poly_legacy); the
/// form above regenerates the standard size-2 and size-3 seeds from
/// scratch and matches enumeration at every size.
Poly inv_b_poly(int n, Method method = Method::Recurrence);

/// Type-D / odd-complement involution inversion distributions (D first).
/// Coupled recurrence with coupling q (1+q^{2m})(1-q^{2(m+1)})/(1-q^2),
/// seeds D_0 = 1, O_0 = 0, D_1 = O_1 = 1; matches enumeration at every
/// size, including the size-2/3 seeds usually quoted.
std::pair<Poly, Poly> inv_do_polys(int n);

/// Fixed-point-free type-D inversion distribution, even n only.
/// Closed: 2 q^{n/2} prod_{i=1}^{n/2-1} (1+q^{4i})(1-q^{4i+2})/(1-q^2).
/// Recurrence from JD_0 = 1, JD_2 = 2q. Throws OddSize for odd n.
Poly jd_poly(int n, Method method = Method::Closed);

/// Legacy variants that reproduce the widely tabulated n=10 values for the
/// signed families. They disagree with exhaustive enumeration (first at
/// size 4) and are kept only so the provenance of those tables stays
/// machine-checkable.
Poly inv_b_poly_legacy(int n);
std::pair<Poly, Poly> inv_do_polys_legacy(int n);
/// Legacy matrix form (V_{11}+V_{21}) * B_2 with
/// V = prod_{i=3}^n [[1+q^{2i-1}, 1], [(1+q^2)(1-q^{2(i-1)})/(1-q^2), 0]];
/// fails against enumeration already at n = 3.
Poly inv_b_vproduct_legacy(int n);

/// Full-group inversion generating functions:
/// type B: [2]_q [4]_q ... [2n]_q; type D: [2]_q ... [2n-2]_q [n]_q.
Poly full_group_inv_gf(char group, int n);

/// Coefficient formulas for the descent distributions.
/// alpha(n, p): [t^p] of the fixed-point-free descent polynomial (n even).
BigInt alpha_coeff(int n, int p);
/// gamma(n, 0) = 1; gamma(n, r) = sum_i C(n-2i+r, r) C(i + C(r+1,2) - 1, i).
BigInt gamma_direct(int n, int r);
/// Same value as [u^n] (1+u)^{r+1} (1-u^2)^{-C(r+2,2)}.
BigInt gamma_series(int n, int r);
/// beta(n, k) = sum_j (-1)^j C(n+1, j) gamma(n, k-j): [t^k] of the
/// involution descent polynomial.
BigInt beta_coeff(int n, int k);
/// f(n, p) = C(C(p+1,2) + n/2 - 1, n/2); satisfies
/// f(n, p) = sum_{i<p} C(n+i, n) alpha(n, p-i).
BigInt f_coeff(int n, int p);

/// Assembled descent polynomials from the coefficient formulas.
Poly fpf_descent_poly_formula(int n);  // sum_p alpha(n,p) t^p, n even
Poly descent_poly_formula(int n);      // sum_k beta(n,k) t^k

}  // namespace invpoly
