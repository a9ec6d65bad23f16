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

#include "rbraid/check.hpp"
#include "rbraid/matrix.hpp"
#include "rbraid/qmodule.hpp"

namespace rbraid {

/// A module over the classical sl2 on a rational weight basis.
struct ClassicalModule {
  RationalMatrix E, F, H;
  std::size_t dimension() const { return H.rows(); }
};

/// V(m) with H = diag(m, m-2, .., -m), F v_k = v_{k+1}, E v_k = k(m-k+1) v_{k-1}.
ClassicalModule classical_sl2_module(long m);

/// The q = 1 specialization of an A_1 module: E and F entrywise at q = 1 and H
/// the diagonal of weights. Throws DomainError on a pole at q = 1.
ClassicalModule classical_limit(const QModule& m);

/// [H,E] = 2E, [H,F] = -2F, [E,F] = H.
CheckReport verify_classical_relations(const ClassicalModule& m);

/// M (x) N with x acting as x (x) 1 + 1 (x) x.
ClassicalModule classical_tensor(const ClassicalModule& m, const ClassicalModule& n);

/// C = EF + FE + H^2/2.
RationalMatrix casimir_operator(const ClassicalModule& m);

/// E (x) F + F (x) E + H (x) H / 2 on M (x) N.
RationalMatrix dual_basis_two_tensor(const ClassicalModule& m, const ClassicalModule& n);

/// t = (Delta(C) - C (x) 1 - 1 (x) C) / 2, cross-checked against the
/// dual-basis form; a mismatch is an internal Error.
RationalMatrix casimir_two_tensor(const ClassicalModule& m, const ClassicalModule& n);

/// t acting on tensor factors i and j (0-based, i != j) of M^{(x)n}, where t
/// is an operator on M (x) M. t_ij and t_ji differ by the flip.
RationalMatrix place_two_tensor(const RationalMatrix& t, std::size_t dim_m, int n, int i, int j);

/// t_ij = t_ji, [t_ij, t_kl] = 0 for distinct indices and
/// [t_ij, t_ik + t_jk] = 0, one report entry per relation family and index tuple.
CheckReport verify_infinitesimal_braid_relations(const RationalMatrix& t, std::size_t dim_m, int n);

/// Expands R^2 at q = e^h through h^order and checks the constant term is the
/// identity and the h coefficient is 2t.
CheckReport verify_first_order_expansion(const FieldMatrix& r, const RationalMatrix& t, int order = 2);

/// t_{U,V(x)W} = t_{U,V} (x) 1 + (s (x) 1)^-1 (1 (x) t_{U,W}) (s (x) 1) with s the flip U (x) V -> V (x) U.
CheckReport verify_two_tensor_coherence(const ClassicalModule& u, const ClassicalModule& v,
                                        const ClassicalModule& w);

/// [Delta(C), Delta(x)] = 0 and [t, Delta(x)] = 0 on M (x) N for x = E, F, H.
CheckReport verify_casimir_centrality(const ClassicalModule& m, const ClassicalModule& n);

}  // namespace rbraid
