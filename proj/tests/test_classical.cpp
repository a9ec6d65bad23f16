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
#include "rbraid/classical.hpp"
#include "rbraid/ribbon.hpp"

using namespace rbraid;

namespace {

RationalMatrix flip(std::size_t a, std::size_t b) {
  RationalMatrix t(a * b, a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) t(j * a + i, i * b + j) = 1;
  return t;
}

}  // namespace

TEST_SUITE("classical") {
  TEST_CASE("classical modules") {
    for (long m = 0; m <= 8; ++m) CHECK(verify_classical_relations(classical_sl2_module(m)).all_passed());
    auto v2 = classical_sl2_module(2);
    CHECK(v2.H == RationalMatrix::diagonal({2, 0, -2}));
    CHECK(classical_sl2_module(0).E.is_zero());
    CHECK(verify_classical_relations(classical_tensor(v2, classical_sl2_module(3))).all_passed());
  }

  TEST_CASE("Casimir scalar matches <lambda, lambda + 2 rho>") {
    auto a1 = cartan_data(LieType::A, 1);
    for (long m = 0; m <= 8; ++m) {
      const Rational expected = casimir_eigenvalue(Weight{{m}}, a1);
      CHECK(expected == make_rational(m * (m + 2), 2));
      CHECK(casimir_operator(classical_sl2_module(m)) == expected * RationalMatrix::identity(m + 1));
    }
  }

  TEST_CASE("Casimir 2-tensor") {
    auto v1 = classical_sl2_module(1), v2 = classical_sl2_module(2), v0 = classical_sl2_module(0);
    auto t = casimir_two_tensor(v1, v1);
    // Eigenvalue 1/2 on the triplet and -3/2 on the singlet.
    const RationalMatrix id = RationalMatrix::identity(4);
    CHECK((t - make_rational(1, 2) * id) * (t + make_rational(3, 2) * id) == RationalMatrix(4, 4));
    CHECK(t.col(0) == std::vector<Rational>{make_rational(1, 2), 0, 0, 0});
    RationalMatrix singlet(4, 1);
    singlet(1, 0) = 1;
    singlet(2, 0) = -1;
    CHECK(t * singlet == make_rational(-3, 2) * singlet);
    CHECK(casimir_two_tensor(v2, v0).is_zero());
    CHECK(flip(2, 3) * casimir_two_tensor(v1, v2) * flip(3, 2) == casimir_two_tensor(v2, v1));
  }

  TEST_CASE("infinitesimal braid relations") {
    for (long m : {0, 1, 2}) {
      auto v = classical_sl2_module(m);
      CHECK(verify_infinitesimal_braid_relations(casimir_two_tensor(v, v), m + 1, 3).all_passed());
    }
    auto v1 = classical_sl2_module(1);
    auto rep4 = verify_infinitesimal_braid_relations(casimir_two_tensor(v1, v1), 2, 4);
    CHECK(rep4.all_passed());
    bool far = false;
    for (const auto& e : rep4.entries) far = far || e.name == "[t12,t34] = 0";
    CHECK(far);
    CHECK_THROWS_AS(verify_infinitesimal_braid_relations(casimir_two_tensor(v1, v1), 2, 2), DomainError);
  }

  TEST_CASE("a non-invariant tensor fails the mixed commutator") {
    auto v1 = classical_sl2_module(1);
    auto rep = verify_infinitesimal_braid_relations(kron(v1.E, v1.F), 2, 3);
    bool mixed = false;
    for (const auto& f : rep.failures()) mixed = mixed || f.name.find(" + ") != std::string::npos;
    CHECK(mixed);
  }

  TEST_CASE("placement of 2-tensors") {
    auto v1 = classical_sl2_module(1);
    auto t = casimir_two_tensor(v1, v1);
    CHECK(place_two_tensor(t, 2, 3, 0, 1) == kron(t, RationalMatrix::identity(2)));
    CHECK(place_two_tensor(t, 2, 3, 1, 2) == kron(RationalMatrix::identity(2), t));
    auto ef = kron(v1.E, v1.F);
    CHECK(place_two_tensor(ef, 2, 2, 1, 0) == kron(v1.F, v1.E));
  }

  TEST_CASE("first-order expansion of R^2") {
    for (long m : {0, 1, 2}) {
      auto v = sl2_simple_module(m);
      auto b = build_braiding(v);
      auto cl = classical_limit(v);
      CHECK(cl.E == classical_sl2_module(m).E);
      auto t = casimir_two_tensor(cl, cl);
      CHECK(verify_first_order_expansion(b.r, t, 2).all_passed());
      CHECK(verify_first_order_expansion(b.r, t, 4).all_passed());
      if (m > 0) CHECK_FALSE(verify_first_order_expansion(b.r, Rational(2) * t, 2).all_passed());
    }
    CHECK_THROWS_AS(verify_first_order_expansion(FieldMatrix::identity(4), RationalMatrix::identity(9), 2),
                    DomainError);
  }

  TEST_CASE("coherence and centrality") {
    auto v1 = classical_sl2_module(1), v2 = classical_sl2_module(2);
    CHECK(verify_two_tensor_coherence(v1, v1, v2).all_passed());
    CHECK(verify_two_tensor_coherence(v2, v1, v1).all_passed());
    CHECK(verify_casimir_centrality(v1, v2).all_passed());
    CHECK(verify_casimir_centrality(v2, v2).all_passed());
  }

  TEST_CASE("classical limit needs rank one") {
    auto a2 = load_module(std::string(RBRAID_TEST_DATA) + "/a2_vector.module");
    CHECK_THROWS_AS(classical_limit(a2), DomainError);
  }
}
