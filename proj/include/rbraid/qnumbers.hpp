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

#include <vector>

#include "rbraid/field.hpp"

namespace rbraid {

// q-numbers in q_i = q^d, expressed over s = q^(1/root_order).

/// [n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d}); [-n] = -[n].
FieldElement q_integer(long n, int d, int root_order);
/// [n]! = [n][n-1]...[1]; [0]! = 1. Requires n >= 0.
FieldElement q_factorial(long n, int d, int root_order);
/// [n choose k]_{q^d}; requires 0 <= k <= n.
FieldElement q_binomial(long n, long k, int d, int root_order);

inline constexpr int kMinSeriesOrder = 2;

/// Truncated power series c_0 + c_1 h + ... + c_K h^K (mod h^(K+1)), K >= 2.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(std::vector<Rational> coeffs);  // NOLINT(runtime/explicit)

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  Rational& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }
  /// Requires a nonzero constant term.
  TruncatedSeries inverse() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Taylor expansion in h of x(q = e^h) through h^order. Throws DomainError
/// if x has a pole at q = 1.
TruncatedSeries expand_at_q_eq_exp_h(const FieldElement& x, int order);

/// x(q = 1); throws DomainError on a pole.
Rational evaluate_at_q1(const FieldElement& x);

}  // namespace rbraid
