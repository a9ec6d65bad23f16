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

#include <map>
#include <vector>

#include "rbraid/braid.hpp"
#include "rbraid/fusion.hpp"

namespace rbraid {

/// Twist q^{<lambda, lambda + 2 rho>} of the simple module V(lambda).
FieldElement twist_scalar(const Weight& lambda, const CartanData& cd, int root_order);

/// Positive square root sqrt(theta_X / theta_V^2) = q^{(chi_X - 2 chi_V) / 2}.
FieldElement braiding_eigenvalue_magnitude(const Weight& lambda_v, const Weight& lambda_x,
                                           const CartanData& cd, int root_order);

/// Square root of c * s^k with c a positive rational square and k even.
/// Anything else is a DomainError.
FieldElement monomial_sqrt(const FieldElement& x);

struct SpectrumEntry {
  Weight weight;
  std::size_t dimension = 0;
  FieldElement twist;
  FieldElement magnitude;
  int sign = 1;
  FieldMatrix projector;

  FieldElement eigenvalue() const { return sign > 0 ? magnitude : -magnitude; }
};

/// Spectral data of the braiding on V (x) V, one entry per summand.
struct BraidingSpectrum {
  Weight base;
  FieldElement base_twist;
  int root_order = 1;
  std::vector<SpectrumEntry> entries;
};

/// Twist scalars of V and of every summand of V (x) V.
using TwistTable = std::map<Weight, FieldElement>;
TwistTable twist_table(const BraidingSpectrum& spectrum);

/// epsilon(X): eigenvalue of the classical flip on the q = 1 limit of the
/// highest-weight vector of X inside V (x) V.
std::map<Weight, int> determine_signs(const std::vector<IsotypicComponent>& comps, std::size_t dim_v);

/// Decomposes V (x) V and fills twists, magnitudes, signs and projectors.
/// Throws MultiplicityError if V (x) V is not multiplicity-free.
BraidingSpectrum braiding_spectrum(const QModule& v);

/// sum_X epsilon(X) R_X P[X]
FieldMatrix assemble_braiding(const BraidingSpectrum& spectrum);
/// sum_X epsilon(X) R_X^{-1} P[X]
FieldMatrix assemble_inverse_braiding(const BraidingSpectrum& spectrum);

/// Diagonal q^{<mu', nu'>} on the basis vectors of M (x) N.
FieldMatrix exponential_factor_action(const QModule& m, const QModule& n);

/// K_{2 rho} = prod_i K_i^{2 b_i / d_i} computed from the module's K matrices.
FieldMatrix k2rho_action(const QModule& m);
/// Diagonal q^{<mu, 2 rho>} read off the weights.
FieldMatrix k2rho_expected(const QModule& m);

/// The braiding on V (x) V together with its certificate.
struct CertifiedBraiding {
  QModule module;
  QModule square;
  BraidingSpectrum spectrum;
  FieldMatrix r;
  FieldMatrix r_inv;
  CheckReport certificate;
};

/// Assembles R from the spectrum and gates it on: intertwining with every
/// generator of V (x) V, the R^2 eigenvalue law, top-vector normalization
/// against the exponential factor, the q -> 1 flip limit and Yang-Baxter.
/// Throws CertificationError when any check fails.
CertifiedBraiding build_braiding(const QModule& v);

/// The gate used by build_braiding, exposed for perturbation tests.
CheckReport certify_braiding(const QModule& v, const QModule& square, const BraidingSpectrum& spectrum,
                             const FieldMatrix& r);

/// tau o q^{H(x)H/2} sum_n q^{n(n-1)/2} (q - q^-1)^n / [n]! E^n (x) F^n on
/// M (x) N for U_q(sl2)-modules.
FieldMatrix sl2_universal_braiding(const QModule& m, const QModule& n);

/// Braidings from the sl2 universal R-matrix, for any pair of A_1 modules.
BraidingProvider sl2_braiding_provider();
/// Braidings from a certified spectral braiding: c_{V,V} for the certified
/// module and unit constraints for one-dimensional trivial modules only.
BraidingProvider spectral_braiding_provider(const CertifiedBraiding& b);

bool is_trivial_module(const QModule& m);
bool same_module(const QModule& a, const QModule& b);

}  // namespace rbraid
