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

#include "doctest.h"
#include "rbraid/ribbon.hpp"

using namespace rbraid;

TEST_SUITE("braidrep") {
  TEST_CASE("braid words") {
    auto w = BraidWord::parse("1 2 -1", 3);
    CHECK(w.letters == std::vector<int>{1, 2, -1});
    CHECK(w.to_string() == "1 2 -1");
    CHECK(BraidWord::parse("", 3).letters.empty());
    CHECK(BraidWord::parse("  2\t-1 ", 3).letters == std::vector<int>{2, -1});
    CHECK_THROWS_AS(BraidWord::parse("0", 3), DomainError);
    CHECK_THROWS_AS(BraidWord::parse("3", 3), DomainError);
    CHECK_THROWS_AS(BraidWord::parse("-3", 3), DomainError);
    CHECK_THROWS_AS(BraidWord::parse("1x", 3), ParseError);
    CHECK_THROWS_AS(BraidWord::parse("1", 1), DomainError);
    CHECK((BraidWord::parse("1", 3) * BraidWord::parse("2", 3)).letters == std::vector<int>{1, 2});
    CHECK_THROWS(BraidWord::parse("1", 3) * BraidWord::parse("1", 4));
  }

  TEST_CASE("flip matrices exchange tensor factors") {
    FieldMatrix a(2, 2), b(3, 3);
    a(0, 1) = FieldElement(5);
    a(1, 1) = FieldElement(2);
    b(2, 0) = FieldElement(7);
    b(1, 1) = FieldElement::q_power(1, 4);
    CHECK(flip_matrix(2, 3) * kron(a, b) == kron(b, a) * flip_matrix(2, 3));
    CHECK(flip_matrix(3, 2) * flip_matrix(2, 3) == FieldMatrix::identity(6));
  }

  TEST_CASE("placement") {
    auto r = FieldMatrix::identity(4);
    CHECK(place_generator(r, 4, 2, 2).rows() == 16);
    CHECK_THROWS_AS(place_generator(r, 3, 3, 2), DomainError);
    CHECK_THROWS_AS(place_generator(r, 3, 1, 3), DomainError);
  }

  TEST_CASE("certified representations of V(1)") {
    auto b = build_braiding(sl2_simple_module(1));
    for (int m : {3, 4}) {
      auto rep = build_representation(b.r, b.r_inv, m, 2);
      CHECK(rep.certificate().all_passed());
      CHECK(rep.dimension() == (m == 3 ? 8u : 16u));
      const FieldMatrix id = FieldMatrix::identity(rep.dimension());
      CHECK(evaluate(BraidWord::parse("1 2 1", m), rep) == evaluate(BraidWord::parse("2 1 2", m), rep));
      CHECK(evaluate(BraidWord::parse("1 -1", m), rep) == id);
      CHECK(evaluate(BraidWord::parse("", m), rep) == id);
      CHECK(evaluate(BraidWord::parse("-2 1 2", m), rep) == evaluate(BraidWord::parse("1 2 -1", m), rep));
    }
    auto rep4 = build_representation(b.r, b.r_inv, 4, 2);
    CHECK(evaluate(BraidWord::parse("1 3", 4), rep4) == evaluate(BraidWord::parse("3 1", 4), rep4));
    CHECK_THROWS_AS(evaluate(BraidWord::parse("1", 3), rep4), DomainError);
  }

  TEST_CASE("Yang-Baxter for V(1) and V(2)") {
    for (long m : {1, 2}) {
      auto b = build_braiding(sl2_simple_module(m));
      CHECK(verify_yang_baxter(b.r, m + 1).all_passed());
    }
  }

  TEST_CASE("non-braidings are refused") {
    // An elementary matrix is invertible but fails the braid relation.
    FieldMatrix r = FieldMatrix::identity(4), r_inv = FieldMatrix::identity(4);
    r(0, 1) = FieldElement(1);
    r_inv(0, 1) = FieldElement(-1);
    CHECK_FALSE(verify_yang_baxter(r, 2).all_passed());
    CHECK_THROWS_AS(build_representation(r, r_inv, 3, 2), CertificationError);
    auto b = build_braiding(sl2_simple_module(1));
    CHECK_THROWS_AS(build_representation(b.r, b.r, 3, 2), CertificationError);
  }

  TEST_CASE("one-dimensional and trivial cases") {
    auto b = build_braiding(sl2_simple_module(0));
    CHECK(b.r == FieldMatrix::identity(1));
    auto rep = build_representation(b.r, b.r_inv, 5, 1);
    CHECK(evaluate(BraidWord::parse("1 2 3 4 -2", 5), rep) == FieldMatrix::identity(1));
  }
}
