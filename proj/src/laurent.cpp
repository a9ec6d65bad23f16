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

#include "rbraid/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace rbraid {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') pos = 1;
  bool seen_digit = false;
  bool seen_slash = false;
  bool digit_after_slash = false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (c == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

LaurentPoly::LaurentPoly(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

LaurentPoly LaurentPoly::monomial(Rational coeff, std::int64_t exponent) {
  LaurentPoly p(std::move(coeff));
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1;
}

Rational LaurentPoly::coeff(std::int64_t exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<std::int64_t>(first);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  std::int64_t lo = std::min(low_, o.low_);
  std::int64_t hi = std::max(high(), o.high());
  if (lo < low_ || hi > high()) {
    std::vector<Rational> grown(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      grown[static_cast<std::size_t>(low_ - lo) + k] = std::move(coeffs_[k]);
    coeffs_ = std::move(grown);
    low_ = lo;
  }
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    coeffs_[static_cast<std::size_t>(o.low_ - low_) + k] += o.coeffs_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  Rational tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      tmp = a.coeffs_[i] * b.coeffs_[j];
      r.coeffs_[i + j] += tmp;
    }
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::substitute_power(std::int64_t factor) const {
  assert(factor != 0);
  if (is_zero() || factor == 1) return *this;
  LaurentPoly r;
  std::int64_t step = factor < 0 ? -factor : factor;
  r.coeffs_.assign((coeffs_.size() - 1) * static_cast<std::size_t>(step) + 1, Rational(0));
  if (factor > 0) {
    r.low_ = low_ * factor;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      r.coeffs_[k * static_cast<std::size_t>(step)] = coeffs_[k];
  } else {
    r.low_ = high() * factor;
    std::size_t n = coeffs_.size();
    for (std::size_t k = 0; k < n; ++k)
      r.coeffs_[(n - 1 - k) * static_cast<std::size_t>(step)] = coeffs_[k];
  }
  return r;
}

std::int64_t LaurentPoly::exponent_stride() const {
  std::int64_t g = 0;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) g = std::gcd(g, static_cast<std::int64_t>(k));
  return g;
}

LaurentPoly LaurentPoly::compress(std::int64_t stride) const {
  assert(stride > 0);
  if (is_zero() || stride == 1) return *this;
  assert(low_ % stride == 0);
  LaurentPoly r;
  r.low_ = low_ / stride;
  r.coeffs_.resize((coeffs_.size() - 1) / static_cast<std::size_t>(stride) + 1);
  for (std::size_t k = 0; k < r.coeffs_.size(); ++k)
    r.coeffs_[k] = coeffs_[k * static_cast<std::size_t>(stride)];
  return r;
}

Rational LaurentPoly::at_one() const {
  Rational sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

int LaurentPoly::order_at_one() const {
  if (is_zero()) return 0;
  int order = 0;
  LaurentPoly p = *this;
  while (p.at_one() == 0) {
    p = p.divide_by_s_minus_one(1);
    ++order;
  }
  return order;
}

LaurentPoly LaurentPoly::divide_by_s_minus_one(int k) const {
  LaurentPoly p = *this;
  for (int step = 0; step < k && !p.is_zero(); ++step) {
    // Synthetic division by (s - 1) from the top coefficient down.
    std::size_t n = p.coeffs_.size();
    assert(n >= 2);
    std::vector<Rational> q(n - 1);
    Rational carry = 0;
    for (std::size_t i = n; i-- > 1;) {
      carry += p.coeffs_[i];
      q[i - 1] = carry;
    }
    assert(carry + p.coeffs_[0] == 0);
    p.coeffs_ = std::move(q);
    p.trim();
  }
  return p;
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(const LaurentPoly& dividend,
                                                        const LaurentPoly& divisor) {
  assert(!divisor.is_zero());
  assert(dividend.is_zero() || dividend.low_ >= 0);
  assert(divisor.low_ >= 0);
  LaurentPoly rem = dividend;
  LaurentPoly quo;
  std::int64_t dd = divisor.high();
  if (rem.is_zero() || rem.high() < dd) return {quo, rem};
  std::vector<Rational> q(static_cast<std::size_t>(rem.high() - dd + 1));
  // Work in dense form indexed from exponent 0.
  std::vector<Rational> r(static_cast<std::size_t>(rem.high() + 1));
  for (std::size_t k = 0; k < rem.coeffs_.size(); ++k)
    r[static_cast<std::size_t>(rem.low_) + k] = rem.coeffs_[k];
  std::vector<Rational> d(static_cast<std::size_t>(dd + 1));
  for (std::size_t k = 0; k < divisor.coeffs_.size(); ++k)
    d[static_cast<std::size_t>(divisor.low_) + k] = divisor.coeffs_[k];
  const Rational& lead = d.back();
  Rational factor, tmp;
  for (std::int64_t top = static_cast<std::int64_t>(r.size()) - 1; top >= dd; --top) {
    auto t = static_cast<std::size_t>(top);
    if (r[t] == 0) continue;
    factor = r[t] / lead;
    std::size_t shift = t - static_cast<std::size_t>(dd);
    q[shift] = factor;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k] == 0) continue;
      tmp = factor * d[k];
      r[shift + k] -= tmp;
    }
  }
  quo.coeffs_ = std::move(q);
  quo.trim();
  r.resize(static_cast<std::size_t>(dd));
  rem.coeffs_ = std::move(r);
  rem.low_ = 0;
  rem.trim();
  return {quo, rem};
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a, y = b;
  if (x.is_zero()) std::swap(x, y);
  assert(!x.is_zero());
  while (!y.is_zero()) {
    auto rem = divmod(x, y).second;
    x = std::move(y);
    y = std::move(rem);
    if (!y.is_zero()) y *= Rational(1) / y.leading();
  }
  x *= Rational(1) / x.leading();
  return x;
}

}  // namespace rbraid
