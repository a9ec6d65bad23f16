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
#include <string>
#include <string_view>
#include <vector>

#include "rbraid/cartan.hpp"
#include "rbraid/check.hpp"

namespace rbraid {

/// A finite-dimensional U_q(g)-module given by explicit generator matrices on
/// a weight basis. Immutable once built.
class QModule {
 public:
  QModule(CartanData cd, int root_order, std::vector<Weight> weights, std::vector<FieldMatrix> e,
          std::vector<FieldMatrix> f, std::vector<FieldMatrix> k, std::vector<FieldMatrix> k_inv);

  const CartanData& cartan() const { return cd_; }
  int root_order() const { return root_order_; }
  std::size_t dimension() const { return weights_.size(); }
  int rank() const { return cd_.rank(); }

  const FieldMatrix& E(int i) const { return e_.at(static_cast<std::size_t>(i)); }
  const FieldMatrix& F(int i) const { return f_.at(static_cast<std::size_t>(i)); }
  const FieldMatrix& K(int i) const { return k_.at(static_cast<std::size_t>(i)); }
  const FieldMatrix& K_inv(int i) const { return k_inv_.at(static_cast<std::size_t>(i)); }

  const std::vector<Weight>& weights() const { return weights_; }
  const Weight& weight(std::size_t basis_index) const { return weights_.at(basis_index); }
  /// Basis indices grouped by weight.
  std::map<Weight, std::vector<std::size_t>> weight_spaces() const;

  /// All generator matrices tagged with a display name ("E_1", "K_2^-1", ...).
  std::vector<std::pair<std::string, const FieldMatrix*>> generators() const;

 private:
  CartanData cd_;
  int root_order_;
  std::vector<Weight> weights_;
  std::vector<FieldMatrix> e_, f_, k_, k_inv_;
};

/// A vector annihilated by every E_i, homogeneous of one weight.
struct HighestWeightVector {
  FieldVector coeffs;
  Weight weight;
};

/// The simple U_q(sl2)-module V(m) on v_0..v_m with F v_k = v_{k+1},
/// E v_k = [k][m-k+1] v_{k-1}, K v_k = q^{m-2k} v_k. root_order 0 uses the
/// A_1 default.
QModule sl2_simple_module(long m, int root_order = 0);

/// The one-dimensional module of weight 0 with E_i = F_i = 0, K_i = 1.
QModule trivial_module(const CartanData& cd, int root_order = 0);

/// Checks every defining relation (and, for rank >= 2, the q-Serre
/// relations) as exact matrix identities, plus the weight-grading invariants.
CheckReport verify_relations(const QModule& m);

/// M (x) N through Delta(E) = E(x)K + 1(x)E, Delta(F) = F(x)1 + K^-1(x)F,
/// Delta(K) = K(x)K, basis index a * dim N + b.
QModule tensor_module(const QModule& m, const QModule& n);
QModule tensor_power(const QModule& m, int n);

/// Echelon basis of the joint kernel of the E_i, one weight space at a time.
std::vector<HighestWeightVector> highest_weight_vectors(const QModule& m);

/// Module file text (see README for the format).
std::string serialize_module(const QModule& m);
/// Parses module text without validating relations.
QModule parse_module(std::string_view text);
/// Parses and validates; throws RelationError naming the failed identities.
QModule load_module_text(std::string_view text);
QModule load_module(const std::string& path);
void save_module(const QModule& m, const std::string& path);

class RelationError : public Error {
 public:
  explicit RelationError(CheckReport report);
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

}  // namespace rbraid
