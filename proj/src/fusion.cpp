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

#include "rbraid/fusion.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace rbraid {

namespace {

void sort_summands(std::vector<FusionSummand>& s) {
  std::sort(s.begin(), s.end(), [](const FusionSummand& a, const FusionSummand& b) {
    if (a.casimir != b.casimir) return a.casimir > b.casimir;
    return a.weight < b.weight;
  });
}

// Height of a weight in simple-root units: sum of A^{-1} w.
Rational height(const CartanData& cd, const Weight& w) {
  Rational h = 0;
  const auto& inv = cd.cartan_inverse();
  for (std::size_t i = 0; i < w.rank(); ++i)
    for (std::size_t j = 0; j < w.rank(); ++j) h += inv(i, j) * w.coords[j];
  return h;
}

}  // namespace

FusionDecomposition sl2_tensor_square_decomposition(long m) {
  if (m < 0) throw DomainError("sl2 highest weight must be non-negative");
  CartanData cd = cartan_data(LieType::A, 1);
  FusionDecomposition out;
  out.base = Weight{{m}};
  for (long k = 0; k <= m; ++k) {
    Weight w{{2 * m - 2 * k}};
    out.summands.push_back({w, 1, 2 * m - 2 * k + 1, casimir_eigenvalue(w, cd)});
  }
  sort_summands(out.summands);
  return out;
}

long weyl_dimension(const CartanData& cd, const Weight& lambda) {
  check_weight(lambda, cd);
  if (!lambda.is_dominant()) throw DomainError("weight " + lambda.to_string() + " is not dominant");
  Weight shifted = lambda + weyl_vector(cd);
  Rational dim = 1;
  for (const auto& beta : positive_roots(cd))
    dim *= weight_inner_product(shifted, beta, cd) / weight_inner_product(weyl_vector(cd), beta, cd);
  if (dim.get_den() != 1) throw Error("internal: non-integral Weyl dimension");
  return dim.get_num().get_si();
}

std::map<Weight, long> weight_multiplicities(const CartanData& cd, const Weight& lambda) {
  check_weight(lambda, cd);
  if (!lambda.is_dominant()) throw DomainError("weight " + lambda.to_string() + " is not dominant");
  const auto roots = positive_roots(cd);
  std::vector<Rational> root_heights;
  for (const auto& b : roots) root_heights.push_back(height(cd, b));
  const Weight rho = weyl_vector(cd);
  const Rational top_norm = weight_inner_product(lambda + rho, lambda + rho, cd);
  const Rational top_height = height(cd, lambda);

  std::map<Weight, long> mult{{lambda, 1}};
  std::vector<Weight> layer{lambda};
  std::vector<Weight> simple;
  for (int i = 0; i < cd.rank(); ++i) simple.push_back(simple_root_in_weight_basis(i, cd));

  // Freudenthal recursion, one depth layer at a time; every mu + k*beta
  // referenced lies in an earlier layer.
  while (!layer.empty()) {
    std::set<Weight> candidates;
    for (const auto& mu : layer)
      for (const auto& a : simple) candidates.insert(mu - a);
    std::vector<Weight> next;
    for (const auto& nu : candidates) {
      Rational denom = top_norm - weight_inner_product(nu + rho, nu + rho, cd);
      if (denom == 0) continue;
      Rational depth = top_height - height(cd, nu);
      Rational sum = 0;
      for (std::size_t r = 0; r < roots.size(); ++r) {
        Weight probe = nu;
        for (long k = 1; k * root_heights[r] <= depth; ++k) {
          probe += roots[r];
          auto it = mult.find(probe);
          if (it != mult.end()) sum += it->second * weight_inner_product(probe, roots[r], cd);
        }
      }
      Rational m = 2 * sum / denom;
      if (m.get_den() != 1) throw Error("internal: non-integral Freudenthal multiplicity");
      if (m > 0) {
        mult[nu] = m.get_num().get_si();
        next.push_back(nu);
      }
    }
    layer = std::move(next);
  }
  return mult;
}

FusionDecomposition decompose_general(const CartanData& cd, const Weight& lambda, std::size_t cap) {
  check_weight(lambda, cd);
  if (!lambda.is_dominant()) throw DomainError("weight " + lambda.to_string() + " is not dominant");
  if (cd.rank() > 4) throw DomainError("character decomposition supports rank <= 4");
  const long dim = weyl_dimension(cd, lambda);
  if (static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim) > cap)
    throw DomainError("dim V" + lambda.to_string() + "^2 = " + std::to_string(dim * dim) +
                      " exceeds the dimension cap " + std::to_string(cap));

  const auto chi = weight_multiplicities(cd, lambda);
  std::map<Weight, long> product;
  for (const auto& [a, ma] : chi)
    for (const auto& [b, mb] : chi) product[a + b] += ma * mb;

  FusionDecomposition out;
  out.base = lambda;
  while (!product.empty()) {
    // A weight of maximal height is the highest weight of some summand.
    auto best = product.begin();
    Rational best_h = height(cd, best->first);
    for (auto it = std::next(product.begin()); it != product.end(); ++it) {
      Rational h = height(cd, it->first);
      if (h > best_h) {
        best = it;
        best_h = h;
      }
    }
    Weight top = best->first;
    long n = best->second;
    if (n < 0 || !top.is_dominant()) throw Error("internal: character peeling failed at " + top.to_string());
    for (const auto& [w, m] : weight_multiplicities(cd, top)) {
      long& slot = product[w];
      slot -= n * m;
      if (slot == 0) product.erase(w);
    }
    out.summands.push_back({top, n, weyl_dimension(cd, top), casimir_eigenvalue(top, cd)});
    if (n > 1) out.multiplicity_free = false;
  }
  sort_summands(out.summands);
  return out;
}

namespace {

// Span tracker for one weight space: keeps an echelon copy for independence tests.
struct SpanBuilder {
  std::vector<std::size_t> idx;
  std::vector<FieldVector> rows;

  bool add_if_independent(const FieldVector& full) {
    FieldMatrix m(rows.size() + 1, idx.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) m(r, c) = rows[r][c];
    for (std::size_t c = 0; c < idx.size(); ++c) m(rows.size(), c) = full[idx[c]];
    if (rank(m) == rows.size()) return false;
    FieldVector local(idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) local[c] = full[idx[c]];
    rows.push_back(std::move(local));
    return true;
  }
};

bool is_zero_vector(const FieldVector& v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

}  // namespace

std::vector<IsotypicComponent> isotypic_decomposition(const QModule& m) {
  const auto spaces = m.weight_spaces();
  auto hw = highest_weight_vectors(m);
  {
    std::set<Weight> seen;
    for (const auto& h : hw)
      if (!seen.insert(h.weight).second)
        throw MultiplicityError("summand of highest weight " + h.weight.to_string() +
                                " occurs more than once; the decomposition is not multiplicity-free");
  }
  const auto& cd = m.cartan();
  std::sort(hw.begin(), hw.end(), [&](const HighestWeightVector& a, const HighestWeightVector& b) {
    Rational ca = casimir_eigenvalue(a.weight, cd), cb = casimir_eigenvalue(b.weight, cd);
    if (ca != cb) return ca > cb;
    return a.weight < b.weight;
  });

  std::vector<IsotypicComponent> comps;
  for (auto& h : hw) {
    IsotypicComponent comp{h.weight, h, {}, {}};
    std::map<Weight, SpanBuilder> spans;
    std::deque<std::pair<FieldVector, Weight>> queue;
    auto push = [&](FieldVector v, const Weight& w) {
      auto& sb = spans[w];
      if (sb.idx.empty()) sb.idx = spaces.at(w);
      if (sb.add_if_independent(v)) {
        comp.basis.push_back(v);
        queue.emplace_back(std::move(v), w);
      }
    };
    push(h.coeffs, h.weight);
    while (!queue.empty()) {
      auto [v, w] = std::move(queue.front());
      queue.pop_front();
      for (int i = 0; i < m.rank(); ++i) {
        FieldVector u = m.F(i).apply(v);
        if (is_zero_vector(u)) continue;
        push(std::move(u), w - simple_root_in_weight_basis(i, cd));
      }
    }
    comps.push_back(std::move(comp));
  }

  // Assemble projectors weight space by weight space: B_mu has the component
  // vectors of weight mu as columns, and P_X|mu = B_mu diag(1_X) B_mu^{-1}.
  const std::size_t n = m.dimension();
  for (auto& c : comps) c.projector = FieldMatrix(n, n);
  std::size_t total = 0;
  for (const auto& c : comps) total += c.basis.size();
  if (total != n)
    throw Error("internal: components span " + std::to_string(total) + " of " + std::to_string(n) +
                " dimensions");
  for (const auto& [w, idx] : spaces) {
    std::vector<std::pair<std::size_t, const FieldVector*>> cols;
    for (std::size_t k = 0; k < comps.size(); ++k)
      for (const auto& v : comps[k].basis)
        if (std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return !v[i].is_zero(); }))
          cols.emplace_back(k, &v);
    if (cols.size() != idx.size())
      throw Error("internal: weight space " + w.to_string() + " not spanned by components");
    FieldMatrix b(idx.size(), idx.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (std::size_t r = 0; r < idx.size(); ++r) b(r, c) = (*cols[c].second)[idx[r]];
    FieldMatrix b_inv = inverse(b);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      FieldMatrix& p = comps[cols[c].first].projector;
      for (std::size_t r = 0; r < idx.size(); ++r) {
        if (b(r, c).is_zero()) continue;
        for (std::size_t s = 0; s < idx.size(); ++s)
          if (!b_inv(c, s).is_zero()) p(idx[r], idx[s]) += b(r, c) * b_inv(c, s);
      }
    }
  }
  return comps;
}

CheckReport verify_projector_algebra(const QModule& m, const std::vector<IsotypicComponent>& comps) {
  CheckReport report;
  const std::size_t n = m.dimension();
  FieldMatrix sum(n, n);
  for (std::size_t a = 0; a < comps.size(); ++a) {
    const auto& pa = comps[a].projector;
    const std::string xa = "P" + comps[a].weight.to_string();
    sum += pa;
    for (std::size_t b = 0; b < comps.size(); ++b) {
      const std::string xb = "P" + comps[b].weight.to_string();
      check_equal(report, xa + " " + xb + (a == b ? " = " + xa : " = 0"), pa * comps[b].projector,
                  a == b ? pa : FieldMatrix(n, n));
    }
    for (const auto& [gname, g] : m.generators())
      check_equal(report, "[" + xa + "," + gname + "] = 0", commutator(pa, *g), FieldMatrix(n, n));
  }
  check_equal(report, "sum of projectors = 1", sum, FieldMatrix::identity(n));
  return report;
}

}  // namespace rbraid
