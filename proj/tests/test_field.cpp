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

#include <random>

#include "doctest.h"
#include "rbraid/field.hpp"
#include "rbraid/qnumbers.hpp"

using namespace rbraid;

namespace {

FieldElement q(const char* text, int root_order = 0) { return FieldElement::parse(text, root_order); }

// Random element of Q(s) with s = q^(1/4): a ratio of short Laurent polynomials.
struct RandomElements {
  std::mt19937 rng{20261016};

  LaurentPoly poly(bool nonzero) {
    std::uniform_int_distribution<int> coeff(-3, 3), len(1, 4), shift(-4, 4);
    for (;;) {
      LaurentPoly p;
      int n = len(rng), k = shift(rng);
      for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(Rational(coeff(rng)), k + i);
      if (!nonzero || !p.is_zero()) return p;
    }
  }
  FieldElement element() { return FieldElement::fraction(poly(false), poly(true), 4); }
  FieldElement nonzero() { return FieldElement::fraction(poly(true), poly(true), 4); }
};

}  // namespace

TEST_SUITE("field") {
  TEST_CASE("canonical text") {
    CHECK(q("q^(-1) + q").to_string() == "q^(-1) + q");
    CHECK(FieldElement::q_power(make_rational(3, 2), 4, 2).to_string() == "2*q^(3/2)");
    CHECK((-FieldElement::q_power(1, 4)).to_string() == "-q");
    CHECK(FieldElement(0).to_string() == "0");
    CHECK(FieldElement(make_rational(-7, 3)).to_string() == "-7/3");
    CHECK(q("q + q^(-1)") == q("q^(-1) + q"));
    CHECK(q(" 2 * q ^ (1/2) ").to_string() == "2*q^(1/2)");
  }

  TEST_CASE("fractions print and parse back") {
    FieldElement x = FieldElement::q_power(1, 4) / (FieldElement::q_power(1, 4) + 1);
    const std::string text = x.to_string();
    CHECK(text.find(")/(") != std::string::npos);
    CHECK(q(text.c_str(), 4) == x);
    CHECK(q(text.c_str(), 4).to_string() == text);
  }

  TEST_CASE("malformed text is rejected") {
    CHECK_THROWS_AS(q("q^("), ParseError);
    CHECK_THROWS_AS(q("2**q"), ParseError);
    CHECK_THROWS_AS(q("x"), ParseError);
    CHECK_THROWS(q("q^(1/3)", 4));
    CHECK_THROWS_AS(FieldElement::q_power(make_rational(1, 3), 4), DomainError);
  }

  TEST_CASE("root orders are lifted to the lcm") {
    FieldElement a = FieldElement::q_power(make_rational(1, 2), 4);
    FieldElement b = FieldElement::q_power(make_rational(1, 3), 6);
    FieldElement p = a * b;
    CHECK(p.root_order() % 12 == 0);
    CHECK(p == FieldElement::q_power(make_rational(5, 6), 12));
    CHECK(FieldElement::q_power(1, 4) == FieldElement::q_power(1, 6));
  }

  TEST_CASE("field axioms on random elements") {
    RandomElements gen;
    for (int trial = 0; trial < 60; ++trial) {
      FieldElement a = gen.element(), b = gen.element(), c = gen.element(), n = gen.nonzero();
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a + b == b + a);
      CHECK(a - a == FieldElement(0));
      CHECK(n * n.inverse() == FieldElement(1));
      CHECK((a / n) * n == a);
      CHECK(FieldElement::parse(a.to_string(), 4) == a);
      CHECK(FieldElement::parse(a.to_string(), 4).to_string() == a.to_string());
      CHECK(a.bar().bar() == a);
      CHECK((a * b).bar() == a.bar() * b.bar());
      CHECK(n.pow(3) * n.pow(-3) == FieldElement(1));
    }
  }

  TEST_CASE("division by zero") { CHECK_THROWS_AS(FieldElement(1) / FieldElement(0), DomainError); }
}

TEST_SUITE("qnumbers") {
  TEST_CASE("q-integers agree with polynomial division") {
    // [n] = (q^{2n} - 1) / (q^2 - 1) * q^{1-n}, divided exactly in Q[q].
    const int D = 4;
    for (long n = 1; n <= 9; ++n) {
      LaurentPoly top = LaurentPoly::monomial(1, 2 * n * D) - LaurentPoly(Rational(1));
      LaurentPoly bottom = LaurentPoly::monomial(1, 2 * D) - LaurentPoly(Rational(1));
      auto [quot, rem] = LaurentPoly::divmod(top, bottom);
      CHECK(rem.is_zero());
      FieldElement expected = FieldElement::fraction(quot.shifted((1 - n) * D), LaurentPoly(Rational(1)), D);
      CHECK(q_integer(n, 1, D) == expected);
      CHECK(q_integer(-n, 1, D) == -expected);
      CHECK(q_integer(n, 1, D).bar() == q_integer(n, 1, D));
      CHECK(q_integer(n, 1, D).at_q1() == n);
    }
    CHECK(q_integer(0, 1, 4).is_zero());
    CHECK(q_integer(2, 1, 4).to_string() == "q^(-1) + q");
    CHECK(q_integer(2, 2, 4).to_string() == "q^(-2) + q^(2)");
  }

  TEST_CASE("q-binomials satisfy the q-Pascal rule") {
    const int D = 2;
    const FieldElement qq = FieldElement::q_power(1, D);
    for (long n = 1; n <= 7; ++n)
      for (long k = 1; k < n; ++k)
        CHECK(q_binomial(n, k, 1, D) ==
              qq.pow(k) * q_binomial(n - 1, k, 1, D) + qq.pow(k - n) * q_binomial(n - 1, k - 1, 1, D));
    CHECK(q_binomial(5, 0, 1, D).is_one());
    CHECK_THROWS_AS(q_binomial(3, 4, 1, D), DomainError);
    CHECK(q_factorial(3, 1, D) == q_integer(3, 1, D) * q_integer(2, 1, D));
  }

  TEST_CASE("series expansion at q = e^h") {
    // q^(3/2) = 1 + (3/2) h + (9/8) h^2 + (9/16) h^3.
    auto s = expand_at_q_eq_exp_h(FieldElement::q_power(make_rational(3, 2), 4), 3);
    CHECK(s.coeffs() == std::vector<Rational>{1, make_rational(3, 2), make_rational(9, 8), make_rational(9, 16)});
    // [2] = 2 cosh h.
    auto t = expand_at_q_eq_exp_h(q_integer(2, 1, 4), 4);
    CHECK(t.coeffs() == std::vector<Rational>{2, 0, 1, 0, make_rational(1, 12)});
    CHECK_THROWS_AS(expand_at_q_eq_exp_h(FieldElement(1) / (FieldElement::q_power(1, 4) - 1), 2), DomainError);
    CHECK_THROWS_AS(TruncatedSeries(1), DomainError);
  }

  TEST_CASE("series expansion is multiplicative") {
    RandomElements gen;
    int tested = 0;
    for (int trial = 0; trial < 80 && tested < 30; ++trial) {
      FieldElement a = gen.element(), b = gen.element();
      try {
        auto sa = expand_at_q_eq_exp_h(a, 3), sb = expand_at_q_eq_exp_h(b, 3);
        CHECK(expand_at_q_eq_exp_h(a * b, 3) == sa * sb);
        CHECK(expand_at_q_eq_exp_h(a + b, 3) == sa + sb);
        ++tested;
      } catch (const DomainError&) {
        // pole at q = 1; skip
      }
    }
    CHECK(tested >= 10);
  }

  TEST_CASE("evaluation at q = 1") {
    CHECK(evaluate_at_q1(q_factorial(4, 1, 4)) == 24);
    CHECK_THROWS_AS(evaluate_at_q1(FieldElement(1) / (FieldElement::q_power(1, 4) - 1)), DomainError);
  }
}
