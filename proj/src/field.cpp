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

#include "rbraid/field.hpp"

#include <cassert>
#include <numeric>
#include <ostream>
#include <vector>

namespace rbraid {

FieldElement::FieldElement(Rational constant, int root_order)
    : root_order_(root_order), num_(std::move(constant)) {
  if (root_order <= 0) throw DomainError("root order must be positive");
}

FieldElement FieldElement::s_power(std::int64_t k, int root_order, Rational coeff) {
  FieldElement x(0, root_order);
  x.num_ = LaurentPoly::monomial(std::move(coeff), k);
  return x;
}

FieldElement FieldElement::q_power(const Rational& e, int root_order, Rational coeff) {
  Rational k = e * root_order;
  if (k.get_den() != 1)
    throw DomainError("q^(" + e.get_str() + ") is not a power of q^(1/" +
                      std::to_string(root_order) + ")");
  return s_power(k.get_num().get_si(), root_order, std::move(coeff));
}

FieldElement FieldElement::fraction(LaurentPoly num, LaurentPoly den, int root_order) {
  if (den.is_zero()) throw DomainError("division by zero");
  FieldElement x(0, root_order);
  x.num_ = std::move(num);
  x.den_ = std::move(den);
  x.normalize();
  return x;
}

void FieldElement::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(Rational(1));
    return;
  }
  std::int64_t shift = num_.low() - den_.low();
  LaurentPoly n = num_.shifted(-num_.low());
  LaurentPoly d = den_.shifted(-den_.low());
  if (!d.is_constant() && !n.is_constant()) {
    std::int64_t stride = std::gcd(n.exponent_stride(), d.exponent_stride());
    LaurentPoly g = stride > 1
                        ? LaurentPoly::gcd(n.compress(stride), d.compress(stride))
                              .substitute_power(stride)
                        : LaurentPoly::gcd(n, d);
    if (!g.is_one()) {
      n = LaurentPoly::divmod(n, g).first;
      d = LaurentPoly::divmod(d, g).first;
    }
  }
  if (d.leading() != 1) {
    Rational inv = Rational(1) / d.leading();
    n *= inv;
    d *= inv;
  }
  num_ = n.shifted(shift);
  den_ = std::move(d);
}

int FieldElement::common_order(int a, int b) { return a == b ? a : std::lcm(a, b); }

FieldElement FieldElement::lifted(int new_order) const {
  if (new_order == root_order_) return *this;
  if (new_order % root_order_ != 0)
    throw DomainError("cannot lift root order " + std::to_string(root_order_) + " to " +
                      std::to_string(new_order));
  int factor = new_order / root_order_;
  FieldElement x;
  x.root_order_ = new_order;
  x.num_ = num_.substitute_power(factor);
  x.den_ = den_.substitute_power(factor);
  return x;
}

Rational FieldElement::monomial_exponent() const {
  assert(is_monomial());
  return make_rational(static_cast<long>(num_.low()), root_order_);
}

Rational FieldElement::monomial_coefficient() const {
  assert(is_monomial());
  return num_.leading();
}

FieldElement FieldElement::operator-() const {
  FieldElement x = *this;
  x.num_ = -x.num_;
  return x;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (o.is_zero()) {
    if (o.root_order_ != root_order_ && root_order_ % o.root_order_ != 0)
      *this = lifted(common_order(root_order_, o.root_order_));
    return *this;
  }
  if (is_zero()) {
    int order = common_order(root_order_, o.root_order_);
    return *this = o.lifted(order);
  }
  if (o.root_order_ != root_order_) {
    int order = common_order(root_order_, o.root_order_);
    FieldElement rhs = o.lifted(order);
    *this = lifted(order);
    return *this += rhs;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = LaurentPoly(Rational(1));
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): (a*(d/g) + c*(b/g)) / (b*(d/g))
  LaurentPoly g = LaurentPoly::gcd(den_, o.den_);
  LaurentPoly b_red = g.is_one() ? den_ : LaurentPoly::divmod(den_, g).first;
  LaurentPoly d_red = g.is_one() ? o.den_ : LaurentPoly::divmod(o.den_, g).first;
  num_ = num_ * d_red + o.num_ * b_red;
  den_ = den_ * d_red;
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (o.root_order_ != root_order_) {
    int order = common_order(root_order_, o.root_order_);
    FieldElement rhs = o.lifted(order);
    *this = lifted(order);
    return *this *= rhs;
  }
  if (is_zero()) return *this;
  if (o.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(Rational(1));
    return *this;
  }
  if (o.is_one()) return *this;
  if (is_one()) return *this = o;
  num_ = num_ * o.num_;
  if (den_.is_one() && o.den_.is_one()) return *this;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.root_order_ == b.root_order_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  int order = FieldElement::common_order(a.root_order_, b.root_order_);
  return a.lifted(order) == b.lifted(order);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  FieldElement x;
  x.root_order_ = root_order_;
  x.num_ = den_;
  x.den_ = num_;
  if (x.den_.is_monomial()) {
    // Fast path: 1 / (c s^k) keeps the old denominator as numerator.
    Rational c = x.den_.leading();
    std::int64_t k = x.den_.low();
    x.num_ = x.num_.shifted(-k);
    x.num_ *= Rational(1) / c;
    x.den_ = LaurentPoly(Rational(1));
    return x;
  }
  x.normalize();
  return x;
}

FieldElement FieldElement::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  FieldElement result(1, root_order_);
  FieldElement base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

FieldElement FieldElement::bar() const {
  return fraction(num_.substitute_power(-1), den_.substitute_power(-1), root_order_);
}

Rational FieldElement::at_q1() const {
  Rational d = den_.at_one();
  if (d == 0) throw DomainError("pole at q = 1 in " + to_string());
  return num_.at_one() / d;
}

int FieldElement::order_at_q1() const {
  return num_.order_at_one() - den_.order_at_one();
}

FieldElement FieldElement::divided_by_s_minus_one_power(int k) const {
  if (k == 0 || is_zero()) return *this;
  LaurentPoly sm1 = LaurentPoly::monomial(1, 1) - LaurentPoly(Rational(1));
  LaurentPoly factor(Rational(1));
  for (int i = 0; i < (k > 0 ? k : -k); ++i) factor = factor * sm1;
  if (k > 0) return fraction(num_, den_ * factor, root_order_);
  return fraction(num_ * factor, den_, root_order_);
}

namespace {

std::string render_poly(const LaurentPoly& p, int root_order) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::int64_t k = p.low(); k <= p.high(); ++k) {
    Rational c = p.coeff(k);
    if (c == 0) continue;
    Rational e = make_rational(static_cast<long>(k), root_order);
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    std::string term;
    if (e == 0) {
      term = mag.get_str();
    } else {
      if (mag != 1) term = mag.get_str() + "*";
      term += "q";
      if (e != 1) term += "^(" + e.get_str() + ")";
    }
    if (first) {
      out = negative ? "-" + term : term;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

struct Term {
  Rational coeff;
  Rational exponent;
};

std::string strip_spaces(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  return s;
}

Term parse_term(const std::string& t, bool negative) {
  if (t.empty()) throw ParseError("empty term");
  Term term;
  auto qpos = t.find('q');
  if (qpos == std::string::npos) {
    term.coeff = parse_rational(t);
    term.exponent = 0;
  } else {
    std::string prefix = t.substr(0, qpos);
    std::string suffix = t.substr(qpos + 1);
    if (prefix.empty()) {
      term.coeff = 1;
    } else {
      if (prefix.back() != '*') throw ParseError("expected '*' before q in '" + t + "'");
      term.coeff = parse_rational(prefix.substr(0, prefix.size() - 1));
    }
    if (suffix.empty()) {
      term.exponent = 1;
    } else {
      if (suffix.size() < 4 || suffix.substr(0, 2) != "^(" || suffix.back() != ')')
        throw ParseError("malformed exponent in '" + t + "'");
      term.exponent = parse_rational(suffix.substr(2, suffix.size() - 3));
    }
  }
  if (negative) term.coeff = -term.coeff;
  return term;
}

std::vector<Term> parse_poly_terms(const std::string& s) {
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<Term> terms;
  std::size_t i = 0;
  int depth = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    i = 1;
  }
  std::size_t start = i;
  for (; i <= s.size(); ++i) {
    char c = i < s.size() ? s[i] : '\0';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced parentheses in '" + s + "'");
    bool boundary = c == '\0' || (depth == 0 && (c == '+' || c == '-') && i > start &&
                                  s[i - 1] != '/' && s[i - 1] != '(');
    if (!boundary) continue;
    terms.push_back(parse_term(s.substr(start, i - start), negative));
    if (c == '\0') break;
    negative = c == '-';
    start = i + 1;
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + s + "'");
  return terms;
}

}  // namespace

std::string FieldElement::to_string() const {
  if (den_.is_one()) return render_poly(num_, root_order_);
  return "(" + render_poly(num_, root_order_) + ")/(" + render_poly(den_, root_order_) + ")";
}

FieldElement FieldElement::parse(std::string_view text, int root_order) {
  std::string s = strip_spaces(text);
  std::string num_text = s;
  std::string den_text;
  if (!s.empty() && s.front() == '(') {
    auto split = s.find(")/(");
    if (split == std::string::npos || s.back() != ')')
      throw ParseError("malformed fraction '" + std::string(text) + "'");
    num_text = s.substr(1, split - 1);
    den_text = s.substr(split + 3, s.size() - split - 4);
  }
  std::vector<Term> num_terms = parse_poly_terms(num_text);
  std::vector<Term> den_terms;
  if (!den_text.empty()) den_terms = parse_poly_terms(den_text);

  int order = root_order;
  if (order == 0) {
    order = 1;
    for (const auto* list : {&num_terms, &den_terms})
      for (const auto& t : *list)
        order = std::lcm(order, static_cast<int>(t.exponent.get_den().get_si()));
  }
  auto build = [order](const std::vector<Term>& terms) {
    LaurentPoly p;
    for (const auto& t : terms) {
      Rational k = t.exponent * order;
      if (k.get_den() != 1)
        throw ParseError("exponent " + t.exponent.get_str() + " incompatible with root order " +
                         std::to_string(order));
      p += LaurentPoly::monomial(t.coeff, k.get_num().get_si());
    }
    return p;
  };
  LaurentPoly num = build(num_terms);
  LaurentPoly den = den_terms.empty() ? LaurentPoly(Rational(1)) : build(den_terms);
  if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return fraction(std::move(num), std::move(den), order);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace rbraid
