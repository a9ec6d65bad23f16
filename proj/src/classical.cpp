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

#include "rbraid/classical.hpp"

#include "rbraid/qnumbers.hpp"

namespace rbraid {

namespace {

RationalMatrix id(std::size_t n) { return RationalMatrix::identity(n); }

RationalMatrix flip(std::size_t dim_a, std::size_t dim_b) {
  RationalMatrix t(dim_a * dim_b, dim_a * dim_b);
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t b = 0; b < dim_b; ++b) t(b * dim_a + a, a * dim_b + b) = 1;
  return t;
}

std::string pair_name(int i, int j) { return "t" + std::to_string(i + 1) + std::to_string(j + 1); }

}  // namespace

ClassicalModule classical_sl2_module(long m) {
  if (m < 0) throw DomainError("sl2 highest weight must be non-negative");
  const std::size_t n = static_cast<std::size_t>(m) + 1;
  ClassicalModule out{RationalMatrix(n, n), RationalMatrix(n, n), RationalMatrix(n, n)};
  for (long k = 0; k <= m; ++k) {
    const std::size_t i = static_cast<std::size_t>(k);
    out.H(i, i) = m - 2 * k;
    if (k < m) out.F(i + 1, i) = 1;
    if (k > 0) out.E(i - 1, i) = k * (m - k + 1);
  }
  return out;
}

ClassicalModule classical_limit(const QModule& m) {
  if (m.cartan().lie_type() != LieType::A || m.rank() != 1)
    throw DomainError("classical limit is implemented for A1 modules only");
  const std::size_t n = m.dimension();
  ClassicalModule out{RationalMatrix(n, n), RationalMatrix(n, n), RationalMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.H(i, i) = m.weight(i).coords[0];
    for (std::size_t j = 0; j < n; ++j) {
      if (!m.E(0)(i, j).is_zero()) out.E(i, j) = evaluate_at_q1(m.E(0)(i, j));
      if (!m.F(0)(i, j).is_zero()) out.F(i, j) = evaluate_at_q1(m.F(0)(i, j));
    }
  }
  return out;
}

CheckReport verify_classical_relations(const ClassicalModule& m) {
  CheckReport r;
  check_equal(r, "[H,E] = 2E", commutator(m.H, m.E), Rational(2) * m.E);
  check_equal(r, "[H,F] = -2F", commutator(m.H, m.F), Rational(-2) * m.F);
  check_equal(r, "[E,F] = H", commutator(m.E, m.F), m.H);
  return r;
}

ClassicalModule classical_tensor(const ClassicalModule& m, const ClassicalModule& n) {
  auto delta = [&](const RationalMatrix& a, const RationalMatrix& b) {
    return kron(a, id(n.dimension())) + kron(id(m.dimension()), b);
  };
  return {delta(m.E, n.E), delta(m.F, n.F), delta(m.H, n.H)};
}

RationalMatrix casimir_operator(const ClassicalModule& m) {
  return m.E * m.F + m.F * m.E + Rational(1, 2) * (m.H * m.H);
}

RationalMatrix dual_basis_two_tensor(const ClassicalModule& m, const ClassicalModule& n) {
  return kron(m.E, n.F) + kron(m.F, n.E) + Rational(1, 2) * kron(m.H, n.H);
}

RationalMatrix casimir_two_tensor(const ClassicalModule& m, const ClassicalModule& n) {
  const RationalMatrix c_total = casimir_operator(classical_tensor(m, n));
  const RationalMatrix t = Rational(1, 2) * (c_total - kron(casimir_operator(m), id(n.dimension())) -
                                            kron(id(m.dimension()), casimir_operator(n)));
  const RationalMatrix dual = dual_basis_two_tensor(m, n);
  if (!(t == dual)) throw Error("internal: coproduct and dual-basis forms of the Casimir 2-tensor differ");
  return t;
}

RationalMatrix place_two_tensor(const RationalMatrix& t, std::size_t dim_m, int n, int i, int j) {
  if (n < 2 || i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw DomainError("tensor factors " + std::to_string(i + 1) + "," + std::to_string(j + 1) + " invalid for " +
                      std::to_string(n) + " factors");
  if (t.rows() != dim_m * dim_m || !t.is_square()) throw DomainError("2-tensor has shape " + t.shape());
  std::size_t total = 1;
  for (int k = 0; k < n; ++k) total *= dim_m;
  // Stride of factor k in the row-major multi-index.
  auto stride = [&](int k) {
    std::size_t s = 1;
    for (int l = k + 1; l < n; ++l) s *= dim_m;
    return s;
  };
  const std::size_t si = stride(i), sj = stride(j);
  RationalMatrix out(total, total);
  for (std::size_t col = 0; col < total; ++col) {
    const std::size_t ai = (col / si) % dim_m, aj = (col / sj) % dim_m;
    const std::size_t base = col - ai * si - aj * sj;
    const std::size_t tc = ai * dim_m + aj;
    for (std::size_t bi = 0; bi < dim_m; ++bi)
      for (std::size_t bj = 0; bj < dim_m; ++bj) {
        const Rational& x = t(bi * dim_m + bj, tc);
        if (x != 0) out(base + bi * si + bj * sj, col) = x;
      }
  }
  return out;
}

CheckReport verify_infinitesimal_braid_relations(const RationalMatrix& t, std::size_t dim_m, int n) {
  if (n < 3) throw DomainError("infinitesimal braid relations need at least 3 factors");
  CheckReport r;
  std::vector<std::vector<RationalMatrix>> p(static_cast<std::size_t>(n), std::vector<RationalMatrix>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) p[i][j] = place_two_tensor(t, dim_m, n, i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) check_equal(r, pair_name(i, j) + " = " + pair_name(j, i), p[i][j], p[j][i]);
  const RationalMatrix zero(p[0][1].rows(), p[0][1].cols());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (k == i || k == j || l == i || l == j || std::pair{k, l} < std::pair{i, j}) continue;
          check_equal(r, "[" + pair_name(i, j) + "," + pair_name(k, l) + "] = 0", commutator(p[i][j], p[k][l]), zero);
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        check_equal(r, "[" + pair_name(i, j) + "," + pair_name(i, k) + " + " + pair_name(j, k) + "] = 0",
                    commutator(p[i][j], p[i][k] + p[j][k]), zero);
      }
  return r;
}

CheckReport verify_first_order_expansion(const FieldMatrix& r, const RationalMatrix& t, int order) {
  if (r.rows() != t.rows() || r.cols() != t.cols())
    throw DomainError("braiding " + r.shape() + " and 2-tensor " + t.shape() + " act on different spaces");
  const std::size_t n = r.rows();
  const FieldMatrix r2 = r * r;
  RationalMatrix c0(n, n), c1(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (r2(i, j).is_zero()) continue;
      TruncatedSeries s = expand_at_q_eq_exp_h(r2(i, j), order);
      c0(i, j) = s[0];
      c1(i, j) = s[1];
    }
  CheckReport report;
  check_equal(report, "R^2 at h^0 = 1", c0, id(n));
  check_equal(report, "R^2 at h^1 = 2t", c1, Rational(2) * t);
  return report;
}

CheckReport verify_two_tensor_coherence(const ClassicalModule& u, const ClassicalModule& v,
                                        const ClassicalModule& w) {
  const std::size_t du = u.dimension(), dv = v.dimension(), dw = w.dimension();
  const RationalMatrix lhs = casimir_two_tensor(u, classical_tensor(v, w));
  const RationalMatrix s = kron(flip(du, dv), id(dw));
  const RationalMatrix s_inv = kron(flip(dv, du), id(dw));
  const RationalMatrix rhs =
      kron(casimir_two_tensor(u, v), id(dw)) + s_inv * kron(id(dv), casimir_two_tensor(u, w)) * s;
  CheckReport report;
  check_equal(report, "t_{U,V(x)W} = t_{U,V} (x) 1 + s^-1 (1 (x) t_{U,W}) s", lhs, rhs);
  return report;
}

CheckReport verify_casimir_centrality(const ClassicalModule& m, const ClassicalModule& n) {
  const ClassicalModule mn = classical_tensor(m, n);
  const RationalMatrix c = casimir_operator(mn);
  const RationalMatrix t = casimir_two_tensor(m, n);
  const RationalMatrix zero(c.rows(), c.cols());
  CheckReport r;
  const std::pair<const char*, const RationalMatrix*> gens[] = {{"E", &mn.E}, {"F", &mn.F}, {"H", &mn.H}};
  for (const auto& [name, g] : gens) {
    check_equal(r, std::string("[Delta(C),Delta(") + name + ")] = 0", commutator(c, *g), zero);
    check_equal(r, std::string("[t,Delta(") + name + ")] = 0", commutator(t, *g), zero);
  }
  return r;
}

}  // namespace rbraid
