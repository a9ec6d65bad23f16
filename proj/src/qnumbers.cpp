// Copyright 2026 The rbraid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rbraid/qnumbers.hpp"

#include <algorithm>

namespace rbraid {

FieldElement q_integer(long n, int d, int root_order) {
  if (d <= 0) throw DomainError("q-integer base exponent must be positive");
  if (n == 0) return FieldElement(0, root_order);
  if (n < 0) return -q_integer(-n, d, root_order);
  // Sum q^{d(n-1-2j)}, j = 0..n-1: the exact quotient of the defining ratio.
  std::int64_t step = static_cast<std::int64_t>(d) * root_order;
  LaurentPoly p;
  for (long j = 0; j < n; ++j) p += LaurentPoly::monomial(1, step * (n - 1 - 2 * j));
  return FieldElement::fraction(std::move(p), LaurentPoly(Rational(1)), root_order);
}

FieldElement q_factorial(long n, int d, int root_order) {
  if (n < 0) throw DomainError("q-factorial of a negative integer");
  FieldElement r(1, root_order);
  for (long k = 2; k <= n; ++k) r *= q_integer(k, d, root_order);
  return r;
}

FieldElement q_binomial(long n, long k, int d, int root_order) {
  if (k < 0 || k > n)
    throw DomainError("q-binomial index k = " + std::to_string(k) + " out of range for n = " +
                      std::to_string(n));
  return q_factorial(n, d, root_order) /
         (q_factorial(k, d, root_order) * q_factorial(n - k, d, root_order));
}

TruncatedSeries::TruncatedSeries(int order) {
  if (order < kMinSeriesOrder)
    throw DomainError("series truncation order must be at least " +
                      std::to_string(kMinSeriesOrder));
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < kMinSeriesOrder + 1)
    throw DomainError("series truncation order must be at least " +
                      std::to_string(kMinSeriesOrder));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order() != order()) throw DomainError("series order mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw DomainError("series order mismatch");
  TruncatedSeries r(a.order());
  for (int i = 0; i <= a.order(); ++i)
    for (int j = 0; i + j <= a.order(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0] == 0) throw DomainError("series with zero constant term is not invertible");
  TruncatedSeries r(order());
  r[0] = Rational(1) / coeffs_[0];
  for (int n = 1; n <= order(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += coeffs_[static_cast<std::size_t>(k)] * r[n - k];
    r[n] = -acc * r[0];
  }
  return r;
}

namespace {

// s^k = e^{k h / D} = sum_n (k/D)^n h^n / n!
TruncatedSeries expand_poly(const LaurentPoly& p, int root_order, int order) {
  TruncatedSeries r(order);
  for (std::int64_t k = p.low(); !p.is_zero() && k <= p.high(); ++k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    Rational rate = make_rational(static_cast<long>(k), root_order);
    Rational term = c;
    for (int n = 0; n <= order; ++n) {
      r[n] += term;
      term *= rate;
      term /= n + 1;
    }
  }
  return r;
}

}  // namespace

TruncatedSeries expand_at_q_eq_exp_h(const FieldElement& x, int order) {
  TruncatedSeries den = expand_poly(x.denominator(), x.root_order(), order);
  if (den[0] == 0)
    throw DomainError("pole at q = 1: denominator " +
                      FieldElement::fraction(x.denominator(), LaurentPoly(Rational(1)),
                                             x.root_order())
                          .to_string() +
                      " vanishes there");
  TruncatedSeries num = expand_poly(x.numerator(), x.root_order(), order);
  return num * den.inverse();
}

Rational evaluate_at_q1(const FieldElement& x) { return x.at_q1(); }

}  // namespace rbraid
