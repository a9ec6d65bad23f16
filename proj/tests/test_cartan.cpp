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
#include "rbraid/cartan.hpp"
#include "rbraid/matrix.hpp"

using namespace rbraid;

namespace {

// Simple roots in an orthogonal realization, with the scalar product scaled
// so short roots have square length 2.
struct Realization {
  std::vector<std::vector<Rational>> roots;
  Rational scale = 1;

  Rational dot(std::size_t i, std::size_t j) const {
    Rational s = 0;
    for (std::size_t k = 0; k < roots[i].size(); ++k) s += roots[i][k] * roots[j][k];
    return scale * s;
  }
};

Realization realize(LieType t, int n) {
  Realization r;
  const std::size_t dim = t == LieType::A ? n + 1 : n;
  auto e = [&](std::size_t i) {
    std::vector<Rational> v(dim, 0);
    v[i] = 1;
    return v;
  };
  auto diff = [&](std::size_t i, std::size_t j, int sign) {
    auto v = e(i);
    v[j] += sign;
    return v;
  };
  for (int i = 0; i + 1 < n; ++i) r.roots.push_back(diff(i, i + 1, -1));
  switch (t) {
    case LieType::A: r.roots.push_back(diff(n - 1, n, -1)); break;
    case LieType::B: r.roots.push_back(e(n - 1)); r.scale = 2; break;
    case LieType::D: r.roots.push_back(diff(n - 2, n - 1, +1)); break;
  }
  return r;
}

Weight fundamental(int i, int rank) {
  std::vector<long> c(static_cast<std::size_t>(rank), 0);
  c[static_cast<std::size_t>(i)] = 1;
  return Weight{c};
}

std::vector<std::pair<LieType, int>> all_types(int max_rank) {
  std::vector<std::pair<LieType, int>> out;
  for (int n = 1; n <= max_rank; ++n) out.emplace_back(LieType::A, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(LieType::B, n);
  for (int n = 3; n <= max_rank; ++n) out.emplace_back(LieType::D, n);
  return out;
}

}  // namespace

TEST_SUITE("cartan") {
  TEST_CASE("matrices and symmetrizers") {
    auto a1 = cartan_data(LieType::A, 1);
    CHECK(a1.a(0, 0) == 2);
    CHECK(a1.d(0) == 1);
    auto a2 = cartan_data(LieType::A, 2);
    CHECK((a2.a(0, 1) == -1 && a2.a(1, 0) == -1));
    auto b2 = cartan_data(LieType::B, 2);
    CHECK((b2.a(0, 0) == 2 && b2.a(0, 1) == -1 && b2.a(1, 0) == -2 && b2.a(1, 1) == 2));
    CHECK((b2.d(0) == 2 && b2.d(1) == 1));
    auto d4 = cartan_data(LieType::D, 4);
    CHECK(d4.a(3, 1) == -1);
    CHECK(d4.a(3, 2) == 0);
    CHECK(d4.a(2, 1) == -1);
  }

  TEST_CASE("unsupported configurations") {
    CHECK_THROWS_AS(cartan_data(LieType::A, 0), DomainError);
    CHECK_THROWS_AS(cartan_data(LieType::B, 1), DomainError);
    CHECK_THROWS_AS(cartan_data(LieType::D, 2), DomainError);
    CHECK_THROWS(parse_lie_type("C"));
    CHECK_THROWS(parse_lie_type("E"));
    CHECK(parse_lie_type("B") == LieType::B);
  }

  TEST_CASE("structural invariants for every type up to rank 6") {
    for (auto [t, n] : all_types(6)) {
      CAPTURE(to_string(t));
      CAPTURE(n);
      auto cd = cartan_data(t, n);
      const Realization real = realize(t, n);
      for (int i = 0; i < n; ++i) {
        CHECK(cd.a(i, i) == 2);
        const Weight ai = simple_root_in_weight_basis(i, cd);
        // <alpha_i^vee, rho> = 1
        CHECK(weight_inner_product(ai, weyl_vector(cd), cd) / cd.d(i) == 1);
        for (int j = 0; j < n; ++j) {
          if (i != j) CHECK(cd.a(i, j) <= 0);
          CHECK(cd.d(i) * cd.a(i, j) == cd.d(j) * cd.a(j, i));
          const Weight aj = simple_root_in_weight_basis(j, cd);
          // Scalar products of simple roots agree with the orthogonal model.
          CHECK(weight_inner_product(ai, aj, cd) == real.dot(i, j));
          // Cartan integers from scalar products.
          CHECK(2 * weight_inner_product(ai, aj, cd) / weight_inner_product(ai, ai, cd) == cd.a(i, j));
          // Fundamental weights: <omega_i, omega_j> = d_i (A^-1)_ij and <omega_i, alpha_j^vee> = delta_ij.
          const Weight wi = fundamental(i, n), wj = fundamental(j, n);
          CHECK(weight_inner_product(wi, wj, cd) == cd.d(i) * cd.cartan_inverse()(i, j));
          CHECK(weight_inner_product(wi, aj, cd) / cd.d(j) == (i == j ? 1 : 0));
        }
      }
      CHECK(cd.cartan_matrix() * cd.cartan_inverse() == RationalMatrix::identity(n));
    }
  }

  TEST_CASE("spot values") {
    auto a1 = cartan_data(LieType::A, 1);
    CHECK(weight_inner_product(Weight{{1}}, Weight{{1}}, a1) == make_rational(1, 2));
    CHECK(simple_root_in_weight_basis(0, a1) == Weight{{2}});
    auto a2 = cartan_data(LieType::A, 2);
    CHECK(weight_inner_product(Weight{{1, 0}}, Weight{{0, 1}}, a2) == make_rational(1, 3));
    CHECK(simple_root_in_weight_basis(0, a2) == Weight{{2, -1}});
    auto b2 = cartan_data(LieType::B, 2);
    const Weight a2_short = simple_root_in_weight_basis(1, b2);
    CHECK(a2_short == Weight{{-1, 2}});
    CHECK(weight_inner_product(a2_short, a2_short, b2) == 2);
    CHECK(weyl_vector(b2) == Weight{{1, 1}});
    CHECK(weyl_vector_coroot_coords(b2) == std::vector<Rational>{3, 2});
    CHECK(weyl_vector_coroot_coords(a2) == std::vector<Rational>{1, 1});
    CHECK(a1.root_order() == 4);
    CHECK(a2.root_order() == 6);
  }

  TEST_CASE("rho equals half the sum of positive roots") {
    for (auto [t, n] : all_types(5)) {
      auto cd = cartan_data(t, n);
      Weight sum{std::vector<long>(static_cast<std::size_t>(n), 0)};
      for (const auto& beta : positive_roots(cd)) sum += beta;
      CHECK(sum == 2 * weyl_vector(cd));
    }
    CHECK(positive_roots(cartan_data(LieType::A, 3)).size() == 6);
    CHECK(positive_roots(cartan_data(LieType::B, 3)).size() == 9);
    CHECK(positive_roots(cartan_data(LieType::D, 4)).size() == 12);
  }

  TEST_CASE("inner product symmetry and Casimir positivity") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> c(-3, 3), p(0, 3);
    for (auto [t, n] : all_types(4)) {
      auto cd = cartan_data(t, n);
      for (int trial = 0; trial < 10; ++trial) {
        Weight x{std::vector<long>(n)}, y{std::vector<long>(n)}, dom{std::vector<long>(n)};
        for (int i = 0; i < n; ++i) {
          x.coords[i] = c(rng);
          y.coords[i] = c(rng);
          dom.coords[i] = p(rng);
        }
        CHECK(weight_inner_product(x, y, cd) == weight_inner_product(y, x, cd));
        if (dom != Weight{std::vector<long>(n, 0)}) CHECK(casimir_eigenvalue(dom, cd) > 0);
      }
      CHECK(casimir_eigenvalue(Weight{std::vector<long>(n, 0)}, cd) == 0);
    }
  }

  TEST_CASE("weight validation") {
    auto a2 = cartan_data(LieType::A, 2);
    CHECK_THROWS_AS(check_weight(Weight{{1}}, a2), DomainError);
    CHECK_THROWS_AS(casimir_eigenvalue(Weight{{-1, 0}}, a2), DomainError);
    CHECK(Weight::parse("1,0") == Weight{{1, 0}});
    CHECK(Weight{{1, -2}}.to_string() == "(1,-2)");
    CHECK_THROWS(Weight::parse("1,,0"));
    CHECK(casimir_eigenvalue(Weight{{1, 0}}, a2) == make_rational(8, 3));
  }
}
