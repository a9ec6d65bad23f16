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

#include "rbraid/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace rbraid {

std::string to_string(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::D: return "D";
  }
  return "?";
}

LieType parse_lie_type(std::string_view s) {
  if (s.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'A': return LieType::A;
      case 'B': return LieType::B;
      case 'D': return LieType::D;
      default: break;
    }
  }
  throw DomainError("unsupported Lie type '" + std::string(s) +
                    "' (supported: A, B, D; type C and exceptional types are not provided)");
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](long c) { return c >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](long c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw DomainError("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank()) throw DomainError("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

std::string Weight::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords[i]);
  }
  return s + ")";
}

Weight Weight::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("malformed weight '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  Weight w;
  if (s.empty()) throw ParseError("empty weight");
  std::size_t start = 0;
  while (start <= s.size()) {
    auto comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (used != item.size()) throw ParseError("");
      w.coords.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("malformed weight coordinate '" + item + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return w;
}

RationalMatrix CartanData::cartan_matrix() const {
  RationalMatrix m(static_cast<std::size_t>(rank_), static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = a(i, j);
  return m;
}

CartanData cartan_data(LieType type, int rank) {
  int min_rank = type == LieType::A ? 1 : type == LieType::B ? 2 : 3;
  if (rank < min_rank)
    throw DomainError("type " + to_string(type) + " requires rank >= " + std::to_string(min_rank) +
                      ", got " + std::to_string(rank));
  CartanData cd;
  cd.type_ = type;
  cd.rank_ = rank;
  auto n = static_cast<std::size_t>(rank);
  cd.cartan_.assign(n * n, 0);
  auto set = [&](int i, int j, long v) { cd.cartan_[static_cast<std::size_t>(i * rank + j)] = v; };
  for (int i = 0; i < rank; ++i) set(i, i, 2);
  switch (type) {
    case LieType::A:
      for (int i = 0; i + 1 < rank; ++i) {
        set(i, i + 1, -1);
        set(i + 1, i, -1);
      }
      cd.symmetrizer_.assign(n, 1);
      break;
    case LieType::B:
      // A_{n-1} block, then the double bond between the last two nodes.
      for (int i = 0; i + 2 < rank; ++i) {
        set(i, i + 1, -1);
        set(i + 1, i, -1);
      }
      set(rank - 2, rank - 1, -1);
      set(rank - 1, rank - 2, -2);
      cd.symmetrizer_.assign(n, 2);
      cd.symmetrizer_.back() = 1;
      break;
    case LieType::D:
      // A_{n-1} block; the last node attaches to node n-2.
      for (int i = 0; i + 2 < rank; ++i) {
        set(i, i + 1, -1);
        set(i + 1, i, -1);
      }
      set(rank - 3, rank - 1, -1);
      set(rank - 1, rank - 3, -1);
      cd.symmetrizer_.assign(n, 1);
      break;
  }
  cd.cartan_inverse_ = inverse(cd.cartan_matrix());
  cd.da_inverse_ = RationalMatrix(n, n);
  long den_lcm = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cd.da_inverse_(i, j) = cd.symmetrizer_[i] * cd.cartan_inverse_(i, j);
      den_lcm = std::lcm(den_lcm, cd.da_inverse_(i, j).get_den().get_si());
    }
  cd.root_order_ = static_cast<int>(2 * den_lcm);
  return cd;
}

void check_weight(const Weight& w, const CartanData& cd) {
  if (static_cast<int>(w.rank()) != cd.rank())
    throw DomainError("weight " + w.to_string() + " has " + std::to_string(w.rank()) +
                      " coordinates but " + cd.name() + " has rank " + std::to_string(cd.rank()));
}

Rational weight_inner_product(const Weight& lambda, const Weight& mu, const CartanData& cd) {
  check_weight(lambda, cd);
  check_weight(mu, cd);
  Rational sum = 0;
  const auto& g = cd.da_inverse();
  for (std::size_t i = 0; i < lambda.rank(); ++i) {
    if (lambda.coords[i] == 0) continue;
    for (std::size_t j = 0; j < mu.rank(); ++j)
      if (mu.coords[j] != 0) sum += g(i, j) * lambda.coords[i] * mu.coords[j];
  }
  return sum;
}

Weight simple_root_in_weight_basis(int i, const CartanData& cd) {
  if (i < 0 || i >= cd.rank())
    throw DomainError("simple root index " + std::to_string(i + 1) + " out of range 1.." +
                      std::to_string(cd.rank()));
  Weight w;
  for (int j = 0; j < cd.rank(); ++j) w.coords.push_back(cd.a(j, i));
  return w;
}

Weight weyl_vector(const CartanData& cd) {
  return Weight{std::vector<long>(static_cast<std::size_t>(cd.rank()), 1)};
}

std::vector<Rational> weyl_vector_coroot_coords(const CartanData& cd) {
  std::vector<Rational> b(static_cast<std::size_t>(cd.rank()));
  for (int i = 0; i < cd.rank(); ++i)
    for (int j = 0; j < cd.rank(); ++j)
      b[static_cast<std::size_t>(i)] +=
          cd.cartan_inverse()(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) * cd.d(j);
  return b;
}

Rational casimir_eigenvalue(const Weight& lambda, const CartanData& cd) {
  check_weight(lambda, cd);
  if (!lambda.is_dominant())
    throw DomainError("Casimir eigenvalue requires a dominant weight, got " + lambda.to_string());
  return weight_inner_product(lambda, lambda + 2 * weyl_vector(cd), cd);
}

std::vector<Weight> positive_roots(const CartanData& cd) {
  const int r = cd.rank();
  using RootCoords = std::vector<long>;
  std::set<RootCoords> known;
  std::vector<RootCoords> layer;
  for (int i = 0; i < r; ++i) {
    RootCoords e(static_cast<std::size_t>(r), 0);
    e[static_cast<std::size_t>(i)] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<RootCoords> all = layer;
  // Extend by simple-root strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
  // where p is the length of the downward alpha_i-string through beta.
  while (!layer.empty()) {
    std::set<RootCoords> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < r; ++i) {
        long p = 0;
        RootCoords down = beta;
        while (true) {
          down[static_cast<std::size_t>(i)] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        long pairing = 0;
        for (int j = 0; j < r; ++j) pairing += beta[static_cast<std::size_t>(j)] * cd.a(i, j);
        if (p - pairing > 0) {
          RootCoords up = beta;
          up[static_cast<std::size_t>(i)] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    for (const auto& b : layer) {
      known.insert(b);
      all.push_back(b);
    }
  }
  std::vector<Weight> roots;
  for (const auto& beta : all) {
    Weight w{std::vector<long>(static_cast<std::size_t>(r), 0)};
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < r; ++j) w.coords[static_cast<std::size_t>(k)] += cd.a(k, j) * beta[static_cast<std::size_t>(j)];
    roots.push_back(std::move(w));
  }
  return roots;
}

}  // namespace rbraid
