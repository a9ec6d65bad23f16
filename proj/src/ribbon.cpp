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

#include "rbraid/ribbon.hpp"

#include <numeric>

#include "rbraid/qnumbers.hpp"

namespace rbraid {

FieldElement twist_scalar(const Weight& lambda, const CartanData& cd, int root_order) {
  return FieldElement::q_power(casimir_eigenvalue(lambda, cd), root_order);
}

FieldElement monomial_sqrt(const FieldElement& x) {
  if (!x.is_monomial()) throw DomainError("square root of non-monomial " + x.to_string());
  const Rational c = x.monomial_coefficient();
  const std::int64_t k = x.numerator().low();
  if (c <= 0) throw DomainError("square root of non-positive coefficient in " + x.to_string());
  if (k % 2 != 0)
    throw DomainError("odd power of s in " + x.to_string() + "; root order " + std::to_string(x.root_order()) +
                      " too small");
  if (!mpz_perfect_square_p(c.get_num().get_mpz_t()) || !mpz_perfect_square_p(c.get_den().get_mpz_t()))
    throw DomainError("coefficient of " + x.to_string() + " is not a rational square");
  Integer num = sqrt(Integer(c.get_num()));
  Integer den = sqrt(Integer(c.get_den()));
  return FieldElement::s_power(k / 2, x.root_order(), Rational(num, den));
}

FieldElement braiding_eigenvalue_magnitude(const Weight& lambda_v, const Weight& lambda_x, const CartanData& cd,
                                           int root_order) {
  FieldElement ratio = twist_scalar(lambda_x, cd, root_order) * twist_scalar(lambda_v, cd, root_order).pow(-2);
  try {
    return monomial_sqrt(ratio);
  } catch (const DomainError& e) {
    throw Error(std::string("internal: braiding eigenvalue square root failed: ") + e.what());
  }
}

std::map<Weight, int> determine_signs(const std::vector<IsotypicComponent>& comps, std::size_t dim_v) {
  std::map<Weight, int> signs;
  for (const auto& comp : comps) {
    const auto& v = comp.highest.coeffs;
    if (v.size() != dim_v * dim_v) throw DomainError("component vector does not live on V (x) V");
    // Rescale by (s - 1)^{-m}, m the least order at q = 1, so the limit is
    // finite and nonzero.
    int least = 0;
    bool any = false;
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      int o = x.order_at_q1();
      if (!any || o < least) least = o;
      any = true;
    }
    if (!any) throw DomainError("zero highest-weight vector for " + comp.weight.to_string());
    std::vector<Rational> limit(v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) limit[j] = v[j].divided_by_s_minus_one_power(least).at_q1();
    bool sym = true, anti = true, nonzero = false;
    for (std::size_t a = 0; a < dim_v; ++a)
      for (std::size_t b = 0; b < dim_v; ++b) {
        const Rational& x = limit[a * dim_v + b];
        const Rational& y = limit[b * dim_v + a];
        if (x != 0) nonzero = true;
        if (x != y) sym = false;
        if (x != -y) anti = false;
      }
    if (!nonzero) throw DomainError("q = 1 limit of the highest-weight vector of " + comp.weight.to_string() + " vanishes");
    if (sym == anti) throw DomainError("classical flip does not act by a sign on the component " + comp.weight.to_string());
    signs[comp.weight] = sym ? 1 : -1;
  }
  return signs;
}

namespace {

Weight single_highest_weight(const QModule& v) {
  auto hw = highest_weight_vectors(v);
  if (hw.size() != 1)
    throw DomainError("module is not simple: it has " + std::to_string(hw.size()) + " highest-weight vectors");
  return hw.front().weight;
}

}  // namespace

BraidingSpectrum braiding_spectrum(const QModule& v) {
  const auto& cd = v.cartan();
  BraidingSpectrum spec;
  spec.root_order = std::lcm(cd.root_order(), v.root_order());
  spec.base = single_highest_weight(v);
  spec.base_twist = twist_scalar(spec.base, cd, spec.root_order);
  QModule square = tensor_module(v, v);
  auto comps = isotypic_decomposition(square);
  auto signs = determine_signs(comps, v.dimension());
  for (auto& c : comps) {
    SpectrumEntry e;
    e.weight = c.weight;
    e.dimension = c.basis.size();
    e.twist = twist_scalar(c.weight, cd, spec.root_order);
    e.magnitude = braiding_eigenvalue_magnitude(spec.base, c.weight, cd, spec.root_order);
    e.sign = signs.at(c.weight);
    e.projector = std::move(c.projector);
    spec.entries.push_back(std::move(e));
  }
  return spec;
}

TwistTable twist_table(const BraidingSpectrum& spectrum) {
  TwistTable t{{spectrum.base, spectrum.base_twist}};
  for (const auto& e : spectrum.entries) t.emplace(e.weight, e.twist);
  return t;
}

FieldMatrix assemble_braiding(const BraidingSpectrum& spectrum) {
  if (spectrum.entries.empty()) throw DomainError("empty braiding spectrum");
  const std::size_t n = spectrum.entries.front().projector.rows();
  FieldMatrix r(n, n);
  for (const auto& e : spectrum.entries) r += e.eigenvalue() * e.projector;
  return r;
}

FieldMatrix assemble_inverse_braiding(const BraidingSpectrum& spectrum) {
  if (spectrum.entries.empty()) throw DomainError("empty braiding spectrum");
  const std::size_t n = spectrum.entries.front().projector.rows();
  FieldMatrix r(n, n);
  for (const auto& e : spectrum.entries) r += e.eigenvalue().inverse() * e.projector;
  return r;
}

FieldMatrix exponential_factor_action(const QModule& m, const QModule& n) {
  if (!(m.cartan() == n.cartan())) throw DomainError("modules over different root systems");
  const auto& cd = m.cartan();
  int D = std::lcm(cd.root_order(), std::lcm(m.root_order(), n.root_order()));
  std::vector<FieldElement> diag;
  diag.reserve(m.dimension() * n.dimension());
  for (const auto& a : m.weights())
    for (const auto& b : n.weights()) diag.push_back(FieldElement::q_power(weight_inner_product(a, b, cd), D));
  return FieldMatrix::diagonal(diag);
}

FieldMatrix k2rho_action(const QModule& m) {
  const auto& cd = m.cartan();
  const auto b = weyl_vector_coroot_coords(cd);
  FieldMatrix out = FieldMatrix::identity(m.dimension());
  for (int i = 0; i < cd.rank(); ++i) {
    Rational e = 2 * b[static_cast<std::size_t>(i)] / cd.d(i);
    if (e.get_den() != 1) throw Error("internal: K_{2rho} exponent is not an integer");
    long k = e.get_num().get_si();
    const FieldMatrix& g = k >= 0 ? m.K(i) : m.K_inv(i);
    for (long t = 0; t < (k >= 0 ? k : -k); ++t) out = out * g;
  }
  return out;
}

FieldMatrix k2rho_expected(const QModule& m) {
  const auto& cd = m.cartan();
  const Weight two_rho = 2 * weyl_vector(cd);
  int D = std::lcm(cd.root_order(), m.root_order());
  std::vector<FieldElement> diag;
  for (const auto& w : m.weights()) diag.push_back(FieldElement::q_power(weight_inner_product(w, two_rho, cd), D));
  return FieldMatrix::diagonal(diag);
}

CheckReport certify_braiding(const QModule& v, const QModule& square, const BraidingSpectrum& spectrum,
                             const FieldMatrix& r) {
  CheckReport report;
  const std::size_t n = square.dimension();
  const auto& cd = v.cartan();

  for (const auto& [name, g] : square.generators())
    check_equal(report, "R intertwines " + name, r * *g, *g * r);

  const FieldMatrix r2 = r * r;
  for (const auto& e : spectrum.entries) {
    FieldElement law = e.twist * spectrum.base_twist.pow(-2);
    const bool squared = e.eigenvalue() * e.eigenvalue() == law;
    report.add("(eps R_X)^2 = theta_X theta_V^-2 for " + e.weight.to_string(), squared,
               squared ? "" : e.eigenvalue().to_string() + " squared vs " + law.to_string());
    check_equal(report, "P" + e.weight.to_string() + " R^2 = theta_X theta_V^-2 P" + e.weight.to_string(),
                e.projector * r2, law * e.projector);
  }

  // Top vector v (x) v: eigenvalue q^{<mu,mu>}, matching the diagonal factor.
  const auto top = highest_weight_vectors(v).front();
  FieldMatrix top_col = kron(FieldMatrix::column(top.coeffs), FieldMatrix::column(top.coeffs));
  FieldElement expected = FieldElement::q_power(weight_inner_product(top.weight, top.weight, cd), spectrum.root_order);
  check_equal(report, "R(v (x) v) = q^<mu,mu> v (x) v", r * top_col, expected * top_col);
  FieldMatrix ediag = exponential_factor_action(v, v);
  FieldMatrix etop = ediag * top_col;
  check_equal(report, "top eigenvalue equals exponential factor", etop, expected * top_col);

  RationalMatrix limit(n, n);
  bool finite = true;
  for (std::size_t i = 0; i < n && finite; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (r(i, j).is_zero()) continue;
      try {
        limit(i, j) = r(i, j).at_q1();
      } catch (const DomainError&) {
        finite = false;
        break;
      }
    }
  if (!finite) {
    report.add("R at q = 1 is the flip", false, "pole at q = 1");
  } else {
    RationalMatrix flip(n, n);
    const std::size_t d = v.dimension();
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) flip(b * d + a, a * d + b) = 1;
    check_equal(report, "R at q = 1 is the flip", limit, flip);
  }

  report.append(verify_yang_baxter(r, v.dimension()));
  return report;
}

CertifiedBraiding build_braiding(const QModule& v) {
  BraidingSpectrum spec = braiding_spectrum(v);
  QModule square = tensor_module(v, v);
  FieldMatrix r = assemble_braiding(spec);
  FieldMatrix r_inv = assemble_inverse_braiding(spec);
  CheckReport cert = certify_braiding(v, square, spec, r);
  check_equal(cert, "R R^-1 = 1", r * r_inv, FieldMatrix::identity(square.dimension()));
  if (!cert.all_passed()) throw CertificationError("braiding failed certification:", cert);
  return CertifiedBraiding{v, std::move(square), std::move(spec), std::move(r), std::move(r_inv), std::move(cert)};
}

FieldMatrix sl2_universal_braiding(const QModule& m, const QModule& n) {
  if (m.cartan().lie_type() != LieType::A || m.rank() != 1 || !(m.cartan() == n.cartan()))
    throw DomainError("the sl2 universal R-matrix needs two A1 modules");
  const int D = std::lcm(m.cartan().root_order(), std::lcm(m.root_order(), n.root_order()));
  const FieldElement q = FieldElement::q_power(1, D);
  const FieldElement q_minus = q - q.inverse();
  FieldMatrix sum(m.dimension() * n.dimension(), m.dimension() * n.dimension());
  FieldMatrix e_pow = FieldMatrix::identity(m.dimension());
  FieldMatrix f_pow = FieldMatrix::identity(n.dimension());
  for (long k = 0; !e_pow.is_zero() && !f_pow.is_zero(); ++k) {
    FieldElement c = FieldElement::q_power(make_rational(k * (k - 1), 2), D) * q_minus.pow(k) /
                     q_factorial(k, 1, D);
    sum += c * kron(e_pow, f_pow);
    e_pow = e_pow * m.E(0);
    f_pow = f_pow * n.F(0);
  }
  return flip_matrix(m.dimension(), n.dimension()) * (exponential_factor_action(m, n) * sum);
}

bool is_trivial_module(const QModule& m) { return m.dimension() == 1 && m.weight(0).is_zero(); }

bool same_module(const QModule& a, const QModule& b) {
  if (!(a.cartan() == b.cartan()) || a.dimension() != b.dimension() || a.weights() != b.weights()) return false;
  for (int i = 0; i < a.rank(); ++i)
    if (!(a.E(i) == b.E(i)) || !(a.F(i) == b.F(i)) || !(a.K(i) == b.K(i)) || !(a.K_inv(i) == b.K_inv(i)))
      return false;
  return true;
}

BraidingProvider sl2_braiding_provider() {
  return [](const QModule& a, const QModule& b) -> std::optional<FieldMatrix> {
    return sl2_universal_braiding(a, b);
  };
}

BraidingProvider spectral_braiding_provider(const CertifiedBraiding& cb) {
  return [cb](const QModule& a, const QModule& b) -> std::optional<FieldMatrix> {
    if (is_trivial_module(a) || is_trivial_module(b)) return flip_matrix(a.dimension(), b.dimension());
    if (same_module(a, cb.module) && same_module(b, cb.module)) return cb.r;
    return std::nullopt;
  };
}

}  // namespace rbraid
