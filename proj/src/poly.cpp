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

#include "invpoly/poly.hpp"

#include <algorithm>
#include <sstream>

namespace invpoly {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(long long n, long long k) {
  if (n < 0) throw IndexError("binomial: negative upper argument");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly::Poly(std::initializer_list<long long> coeffs) {
  c_.assign(coeffs.begin(), coeffs.end());
  normalize();
}

Poly Poly::constant(BigInt c) {
  Poly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

Poly Poly::monomial(std::size_t exp, BigInt c) {
  Poly p;
  if (c != 0) {
    p.c_.assign(exp + 1, 0);
    p.c_[exp] = std::move(c);
  }
  return p;
}

Poly Poly::from_coeffs(std::vector<BigInt> coeffs) {
  Poly p;
  p.c_ = std::move(coeffs);
  p.normalize();
  return p;
}

const BigInt& Poly::coeff(std::size_t i) const {
  static const BigInt kZero = 0;
  return i < c_.size() ? c_[i] : kZero;
}

BigInt Poly::sum_coeffs() const {
  BigInt s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

BigInt Poly::evaluate(const BigInt& x) const {
  BigInt r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::shifted(std::size_t k) const {
  if (is_zero()) return Poly();
  Poly p;
  p.c_.assign(k, 0);
  p.c_.insert(p.c_.end(), c_.begin(), c_.end());
  return p;
}

Poly Poly::reversed() const {
  Poly p = *this;
  std::reverse(p.c_.begin(), p.c_.end());
  p.normalize();
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const BigInt& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    BigInt a = c_[i];
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    BigInt mag = abs(a);
    if (mag != 1 || i == 0) os << mag.str();
    if (i >= 1) {
      if (mag != 1) os << "*";
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("exact_div: division by zero polynomial");
  if (a.is_zero()) return Poly();
  if (a.degree() < b.degree())
    throw NonExactDivision("exact_div: degree of dividend below divisor");
  std::vector<BigInt> rem(a.coeffs());
  const auto& d = b.coeffs();
  const BigInt& lead = d.back();
  std::vector<BigInt> q(rem.size() - d.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt top = rem[i + d.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0)
      throw NonExactDivision("exact_div: leading coefficient does not divide");
    BigInt f = top / lead;
    q[i] = f;
    for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] -= f * d[j];
  }
  for (const auto& c : rem)
    if (c != 0) throw NonExactDivision("exact_div: nonzero remainder");
  return Poly::from_coeffs(std::move(q));
}

Poly q_bracket(int i) {
  if (i < 0) throw IndexError("q_bracket: negative index");
  std::vector<BigInt> c(static_cast<std::size_t>(i), 1);
  return Poly::from_coeffs(std::move(c));
}

Poly g_seq(int i) {
  if (i < 2) throw IndexError("g_seq: requires i >= 2");
  return odd_run(1, 2 * i - 3);
}

Poly odd_run(int lo, int hi) {
  if (lo % 2 == 0) ++lo;
  if (hi < lo) return Poly();
  std::vector<BigInt> c(static_cast<std::size_t>(hi) + 1, 0);
  for (int e = lo; e <= hi; e += 2) c[static_cast<std::size_t>(e)] = 1;
  return Poly::from_coeffs(std::move(c));
}

Poly geometric_q2(int m) {
  if (m <= 0) return Poly();
  std::vector<BigInt> c(static_cast<std::size_t>(2 * (m - 1)) + 1, 0);
  for (int e = 0; e <= 2 * (m - 1); e += 2) c[static_cast<std::size_t>(e)] = 1;
  return Poly::from_coeffs(std::move(c));
}

namespace {
Poly truncate(const Poly& p, int deg) {
  if (p.degree() <= deg) return p;
  std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().begin() + deg + 1);
  return Poly::from_coeffs(std::move(c));
}
}  // namespace

Poly pochhammer_trunc(const Poly& a, int n, int trunc) {
  if (n < 0 || trunc < 0) throw IndexError("pochhammer_trunc: negative argument");
  Poly r = Poly::one();
  for (int k = 0; k < n; ++k) {
    Poly factor = Poly::one() - a.shifted(static_cast<std::size_t>(k));
    r = truncate(r * factor, trunc);
  }
  return r;
}

BigInt series_coeff(long long a, long long b, long long n) {
  if (a < 0 || b < 0 || n < 0) throw IndexError("series_coeff: negative argument");
  BigInt s = 0;
  for (long long m = 0; 2 * m <= n; ++m) {
    long long r = n - 2 * m;
    if (r > a) continue;
    s += binomial(a, r) * binomial(b - 1 + m, m);
  }
  return s;
}

PolyMat2 PolyMat2::identity() {
  return PolyMat2{Poly::one(), Poly(), Poly(), Poly::one()};
}

PolyMat2 operator*(const PolyMat2& l, const PolyMat2& r) {
  return PolyMat2{l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
                  l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
}

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw IndexError("TruncatedSeries: negative order");
  c_.assign(static_cast<std::size_t>(order) + 1, 0);
}

TruncatedSeries::TruncatedSeries(const Poly& p, int order) : TruncatedSeries(order) {
  std::size_t upto = std::min(c_.size(), p.coeffs().size());
  for (std::size_t i = 0; i < upto; ++i) c_[i] = p.coeffs()[i];
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& o) {
  if (o.c_.size() != c_.size())
    throw Error("TruncatedSeries: mismatched truncation orders");
  std::vector<BigInt> r(c_.size(), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < c_.size(); ++j) {
      if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  return *this;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
  TruncatedSeries r(Poly::one(), order());
  TruncatedSeries base = *this;
  while (e > 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  const BigInt& c0 = c_[0];
  if (c0 != 1 && c0 != -1)
    throw NotInvertible("TruncatedSeries: constant term must be a unit");
  TruncatedSeries r(order());
  r.c_[0] = c0;  // 1/c0 == c0 for units
  for (std::size_t k = 1; k < c_.size(); ++k) {
    BigInt acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -c0 * acc;
  }
  return r;
}

}  // namespace invpoly
