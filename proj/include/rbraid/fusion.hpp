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

#include "rbraid/qmodule.hpp"

namespace rbraid {

struct FusionSummand {
  Weight weight;
  long multiplicity = 0;
  long dimension = 0;
  Rational casimir;
};

/// V(base) (x) V(base) as a sum of simples, ordered by decreasing Casimir
/// eigenvalue, ties broken by ascending weight coordinates.
struct FusionDecomposition {
  Weight base;
  std::vector<FusionSummand> summands;
  bool multiplicity_free = true;
};

/// Raised when a tensor square has a repeated summand.
class MultiplicityError : public Error {
 public:
  using Error::Error;
};

/// Clebsch-Gordan: V(m)^2 = V(2m) + V(2m-2) + ... + V(0).
FusionDecomposition sl2_tensor_square_decomposition(long m);

inline constexpr std::size_t kDefaultDimensionCap = 1024;

/// Character route: Freudenthal multiplicities, product character, peeling
/// by highest weight. Requires rank <= 4 and dim(V)^2 <= cap.
FusionDecomposition decompose_general(const CartanData& cd, const Weight& lambda,
                                      std::size_t cap = kDefaultDimensionCap);

/// Weight multiplicities of the simple module V(lambda).
std::map<Weight, long> weight_multiplicities(const CartanData& cd, const Weight& lambda);
/// Weyl dimension formula.
long weyl_dimension(const CartanData& cd, const Weight& lambda);

/// The X-isotypic piece of a multiplicity-free module.
struct IsotypicComponent {
  Weight weight;
  HighestWeightVector highest;
  std::vector<FieldVector> basis;
  FieldMatrix projector;
};

/// Components generated from each highest-weight vector by the lowering
/// operators, with projectors read off the resulting direct-sum basis.
/// Throws MultiplicityError if two highest-weight vectors share a weight.
std::vector<IsotypicComponent> isotypic_decomposition(const QModule& m);

/// P_X P_Y = delta_XY P_X, sum P_X = 1, and [P_X, generator] = 0.
CheckReport verify_projector_algebra(const QModule& m, const std::vector<IsotypicComponent>& comps);

}  // namespace rbraid
