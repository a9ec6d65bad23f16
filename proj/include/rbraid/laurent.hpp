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

#include <cstdint>
#include <utility>
#include <vector>

#include "rbraid/rational.hpp"

namespace rbraid {

/// Laurent polynomial in one variable s with rational coefficients.
///
/// Stored densely: coefficient of s^(low + k) is coeffs[k]. The zero
/// polynomial has no coefficients; otherwise the first and last stored
/// coefficients are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Rational constant);
  static LaurentPoly monomial(Rational coeff, std::int64_t exponent);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return is_zero() || (coeffs_.size() == 1 && low_ == 0); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  bool is_one() const;

  std::int64_t low() const { return low_; }
  std::int64_t high() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
  /// Number of stored slots, high() - low() + 1 (0 for the zero polynomial).
  std::size_t span() const { return coeffs_.size(); }

  Rational coeff(std::int64_t exponent) const;
  const Rational& leading() const { return coeffs_.back(); }
  const Rational& trailing() const { return coeffs_.front(); }
  const std::vector<Rational>& raw() const { return coeffs_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiplies by s^k.
  LaurentPoly shifted(std::int64_t k) const;
  /// Substitutes s -> s^factor (factor may be negative).
  LaurentPoly substitute_power(std::int64_t factor) const;
  /// Gcd of all exponents present after shifting the lowest one to 0; 0 for
  /// constants and the zero polynomial.
  std::int64_t exponent_stride() const;
  /// Inverse of substitute_power(stride) for a polynomial whose exponents are
  /// multiples of stride.
  LaurentPoly compress(std::int64_t stride) const;

  /// Value at s = 1.
  Rational at_one() const;
  /// Multiplicity of s = 1 as a root (0 for the zero polynomial).
  int order_at_one() const;
  /// Exact division by (s - 1)^k; the caller guarantees divisibility.
  LaurentPoly divide_by_s_minus_one(int k) const;

  /// Polynomial long division for polynomials with low() == 0.
  /// Returns (quotient, remainder). divisor must be nonzero.
  static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& dividend,
                                                    const LaurentPoly& divisor);
  /// Monic gcd of two polynomials with low() == 0 (not both zero).
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void trim();

  std::int64_t low_ = 0;
  std::vector<Rational> coeffs_;
};

}  // namespace rbraid
