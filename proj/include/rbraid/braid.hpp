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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbraid/qmodule.hpp"

namespace rbraid {

/// A word in sigma_1^{+-1} .. sigma_{m-1}^{+-1}; letter -i is sigma_i^{-1}.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  /// Whitespace-separated signed integers, e.g. "1 2 -1". Empty text is the
  /// empty word.
  static BraidWord parse(std::string_view text, int strands);
  std::string to_string() const;
  BraidWord operator*(const BraidWord& o) const;
};

/// Raised when a braid representation or braiding fails its certificate.
class CertificationError : public Error {
 public:
  CertificationError(const std::string& what, CheckReport report);
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

/// Raised when a check needs braiding data that is not available.
class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

/// The flip a (x) b -> b (x) a from A (x) B to B (x) A.
FieldMatrix flip_matrix(std::size_t dim_a, std::size_t dim_b);

/// 1^{(i-1)} (x) R (x) 1^{(m-i-1)} on V^{(x)m}; i is 1-based.
FieldMatrix place_generator(const FieldMatrix& r, int m, int i, std::size_t dim_v);

/// Images of sigma_1..sigma_{m-1} on V^{(x)m}, certified at construction.
class BraidRep {
 public:
  int strands() const { return strands_; }
  std::size_t base_dimension() const { return dim_v_; }
  std::size_t dimension() const { return generators_.empty() ? dim_v_ : generators_[0].rows(); }
  const FieldMatrix& generator(int i) const { return generators_.at(static_cast<std::size_t>(i - 1)); }
  const FieldMatrix& generator_inverse(int i) const { return inverses_.at(static_cast<std::size_t>(i - 1)); }
  const CheckReport& certificate() const { return certificate_; }

 private:
  friend BraidRep build_representation(const FieldMatrix&, const FieldMatrix&, int, std::size_t);

  int strands_ = 2;
  std::size_t dim_v_ = 1;
  std::vector<FieldMatrix> generators_;
  std::vector<FieldMatrix> inverses_;
  CheckReport certificate_;
};

/// Places R and its inverse on every adjacent pair and certifies R R^-1 = 1,
/// the braid relation and far commutativity. Throws CertificationError.
BraidRep build_representation(const FieldMatrix& r, const FieldMatrix& r_inv, int m, std::size_t dim_v);

/// Ordered product of generator images; the empty word gives the identity.
FieldMatrix evaluate(const BraidWord& word, const BraidRep& rep);

/// (R(x)1)(1(x)R)(R(x)1) = (1(x)R)(R(x)1)(1(x)R) on V^{(x)3}.
CheckReport verify_yang_baxter(const FieldMatrix& r, std::size_t dim_v);

/// Returns c_{A,B}: A (x) B -> B (x) A, or nullopt when unavailable.
using BraidingProvider = std::function<std::optional<FieldMatrix>(const QModule&, const QModule&)>;

/// Both hexagon identities for a triple in their strict form:
///   c_{U,V(x)W} = (1_V (x) c_{U,W}) (c_{U,V} (x) 1_W)
///   c_{U(x)V,W} = (c_{U,W} (x) 1_V) (1_U (x) c_{V,W})
/// Throws UnsupportedConfiguration if the provider lacks a needed braiding.
CheckReport verify_hexagon_on_triple(const QModule& u, const QModule& v, const QModule& w,
                                     const BraidingProvider& braiding);

}  // namespace rbraid
