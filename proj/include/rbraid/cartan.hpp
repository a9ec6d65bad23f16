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

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "rbraid/matrix.hpp"

namespace rbraid {

enum class LieType { A, B, D };

std::string to_string(LieType t);
/// "A", "B", "D" (case-insensitive); anything else is a DomainError.
LieType parse_lie_type(std::string_view s);

/// Integer coordinates in the fundamental-weight basis: coords[i] = lambda(H_i).
struct Weight {
  std::vector<long> coords;

  std::size_t rank() const { return coords.size(); }
  bool is_dominant() const;
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(long k, Weight w) {
    for (auto& c : w.coords) c *= k;
    return w;
  }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// "(1,0,2)"
  std::string to_string() const;
  /// Parses "1,0,2" (optionally parenthesized).
  static Weight parse(std::string_view text);
};

/// Cartan matrix, symmetrizer and the symmetrized inverse D A^{-1} for one
/// of the supported root systems.
class CartanData {
 public:
  LieType lie_type() const { return type_; }
  int rank() const { return rank_; }
  /// a_ij
  long a(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
  /// d_i
  int d(int i) const { return symmetrizer_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& symmetrizer() const { return symmetrizer_; }
  RationalMatrix cartan_matrix() const;
  /// A^{-1}
  const RationalMatrix& cartan_inverse() const { return cartan_inverse_; }
  /// D A^{-1}; (D A^{-1})_ij = <omega_i, omega_j>.
  const RationalMatrix& da_inverse() const { return da_inverse_; }

  /// 2 * lcm of the denominators of D A^{-1}. Every inner product of weights
  /// and every square root taken by the braiding pipeline is an integer power
  /// of s = q^(1/root_order()).
  int root_order() const { return root_order_; }

  friend bool operator==(const CartanData& a, const CartanData& b) {
    return a.type_ == b.type_ && a.rank_ == b.rank_;
  }

  std::string name() const { return to_string(type_) + std::to_string(rank_); }

 private:
  friend CartanData cartan_data(LieType type, int rank);

  LieType type_ = LieType::A;
  int rank_ = 0;
  std::vector<long> cartan_;
  std::vector<int> symmetrizer_;
  RationalMatrix cartan_inverse_;
  RationalMatrix da_inverse_;
  int root_order_ = 1;
};

/// Throws DomainError for A_n with n < 1, B_n with n < 2, D_n with n < 3.
CartanData cartan_data(LieType type, int rank);

void check_weight(const Weight& w, const CartanData& cd);

/// sum_ij (D A^{-1})_ij lambda_i mu_j
Rational weight_inner_product(const Weight& lambda, const Weight& mu, const CartanData& cd);

/// alpha_i = sum_j a_ji omega_j (0-based index i).
Weight simple_root_in_weight_basis(int i, const CartanData& cd);

/// rho = sum_i omega_i.
Weight weyl_vector(const CartanData& cd);
/// b_i = sum_j (A^{-1})_ji d_j, so that rho = sum_i b_i alpha_i^vee.
std::vector<Rational> weyl_vector_coroot_coords(const CartanData& cd);

/// <lambda, lambda + 2 rho> for dominant lambda.
Rational casimir_eigenvalue(const Weight& lambda, const CartanData& cd);

/// Positive roots in the fundamental-weight basis, ordered by height. Simple
/// roots come in index order; higher roots by ascending simple-root coordinates.
std::vector<Weight> positive_roots(const CartanData& cd);

}  // namespace rbraid
