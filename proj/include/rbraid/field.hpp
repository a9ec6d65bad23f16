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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "rbraid/laurent.hpp"

namespace rbraid {

/// Exact element of Q(s), where s = q^(1/root_order).
///
/// Always stored in lowest terms: the denominator is a monic polynomial with
/// nonzero constant term, and the numerator carries any power of s. Elements
/// with different root orders are lifted to the lcm before combining.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(Rational constant, int root_order = 1);  // NOLINT(runtime/explicit)
  FieldElement(long constant, int root_order = 1)        // NOLINT(runtime/explicit)
      : FieldElement(Rational(constant), root_order) {}
  FieldElement(int constant, int root_order = 1)         // NOLINT(runtime/explicit)
      : FieldElement(Rational(constant), root_order) {}

  /// c * s^k.
  static FieldElement s_power(std::int64_t k, int root_order, Rational coeff = 1);
  /// c * q^e; throws DomainError unless e * root_order is an integer.
  static FieldElement q_power(const Rational& e, int root_order, Rational coeff = 1);
  /// num / den, normalized. Throws DomainError if den is zero.
  static FieldElement fraction(LaurentPoly num, LaurentPoly den, int root_order);

  int root_order() const { return root_order_; }
  const LaurentPoly& numerator() const { return num_; }
  const LaurentPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// Denominator is 1, i.e. a Laurent polynomial in s.
  bool is_laurent() const { return den_.is_one(); }
  /// A single term c * s^k.
  bool is_monomial() const { return den_.is_one() && num_.is_monomial(); }
  /// For a monomial c * q^e returns e (in units of q, reduced).
  Rational monomial_exponent() const;
  Rational monomial_coefficient() const;

  /// Same value expressed over s' with s = s'^(new_order / root_order).
  FieldElement lifted(int new_order) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  FieldElement pow(std::int64_t n) const;
  /// The involution s -> 1/s.
  FieldElement bar() const;

  /// Value at q = 1; throws DomainError on a pole.
  Rational at_q1() const;
  /// Order of vanishing at q = 1 (negative for a pole); undefined for zero.
  int order_at_q1() const;
  /// x / (s - 1)^k.
  FieldElement divided_by_s_minus_one_power(int k) const;

  /// Canonical text, e.g. "q^(-1) + q", "(2*q^(1/2))/(q + 1)", "0".
  std::string to_string() const;
  /// Parses canonical text. root_order 0 infers the smallest root order
  /// compatible with the exponents; otherwise exponents must fit it.
  static FieldElement parse(std::string_view text, int root_order = 0);

 private:
  void normalize();
  static int common_order(int a, int b);

  int root_order_ = 1;
  LaurentPoly num_;
  LaurentPoly den_{Rational(1)};
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace rbraid
