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

#include "rbraid/braid.hpp"

#include <sstream>

namespace rbraid {

BraidWord BraidWord::parse(std::string_view text, int strands) {
  if (strands < 2) throw DomainError("a braid needs at least 2 strands");
  BraidWord w;
  w.strands = strands;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("malformed braid letter '" + tok + "'");
    }
    if (v == 0 || v >= strands || -v >= strands)
      throw DomainError("braid letter " + tok + " out of range for " + std::to_string(strands) +
                        " strands");
    w.letters.push_back(v);
  }
  return w;
}

std::string BraidWord::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(letters[k]);
  }
  return s;
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  if (o.strands != strands) throw DomainError("strand count mismatch in braid product");
  BraidWord w = *this;
  w.letters.insert(w.letters.end(), o.letters.begin(), o.letters.end());
  return w;
}

CertificationError::CertificationError(const std::string& what, CheckReport report)
    : Error([&] {
        std::string msg = what;
        for (const auto& f : report.failures()) msg += " [" + f.name + (f.detail.empty() ? "" : ": " + f.detail) + "]";
        return msg;
      }()),
      report_(std::move(report)) {}

FieldMatrix flip_matrix(std::size_t dim_a, std::size_t dim_b) {
  FieldMatrix t(dim_a * dim_b, dim_a * dim_b);
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t b = 0; b < dim_b; ++b) t(b * dim_a + a, a * dim_b + b) = FieldElement(1);
  return t;
}

FieldMatrix place_generator(const FieldMatrix& r, int m, int i, std::size_t dim_v) {
  if (m < 2) throw DomainError("a braid needs at least 2 strands");
  if (i < 1 || i > m - 1)
    throw DomainError("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(m - 1));
  if (r.rows() != dim_v * dim_v || !r.is_square())
    throw DomainError("braiding has shape " + r.shape() + ", expected " + std::to_string(dim_v * dim_v) +
                      " square");
  std::size_t left = 1, right = 1;
  for (int k = 1; k < i; ++k) left *= dim_v;
  for (int k = i + 2; k <= m; ++k) right *= dim_v;
  FieldMatrix out = r;
  if (left > 1) out = kron(FieldMatrix::identity(left), out);
  if (right > 1) out = kron(out, FieldMatrix::identity(right));
  return out;
}

BraidRep build_representation(const FieldMatrix& r, const FieldMatrix& r_inv, int m, std::size_t dim_v) {
  BraidRep rep;
  rep.strands_ = m;
  rep.dim_v_ = dim_v;
  CheckReport& cert = rep.certificate_;
  check_equal(cert, "R R^-1 = 1", r * r_inv, FieldMatrix::identity(r.rows()));
  for (int i = 1; i < m; ++i) {
    rep.generators_.push_back(place_generator(r, m, i, dim_v));
    rep.inverses_.push_back(place_generator(r_inv, m, i, dim_v));
  }
  for (int i = 1; i + 1 < m; ++i) {
    const auto& a = rep.generator(i);
    const auto& b = rep.generator(i + 1);
    check_equal(cert,
                "s" + std::to_string(i) + " s" + std::to_string(i + 1) + " s" + std::to_string(i) + " = s" +
                    std::to_string(i + 1) + " s" + std::to_string(i) + " s" + std::to_string(i + 1),
                a * b * a, b * a * b);
  }
  for (int i = 1; i < m; ++i)
    for (int j = i + 2; j < m; ++j)
      check_equal(cert, "s" + std::to_string(i) + " s" + std::to_string(j) + " = s" + std::to_string(j) + " s" +
                            std::to_string(i),
                  rep.generator(i) * rep.generator(j), rep.generator(j) * rep.generator(i));
  if (!cert.all_passed()) throw CertificationError("braid representation failed certification:", cert);
  return rep;
}

FieldMatrix evaluate(const BraidWord& word, const BraidRep& rep) {
  if (word.strands != rep.strands())
    throw DomainError("braid word on " + std::to_string(word.strands) + " strands applied to a representation on " +
                      std::to_string(rep.strands()));
  FieldMatrix out = FieldMatrix::identity(rep.dimension());
  for (int letter : word.letters)
    out = out * (letter > 0 ? rep.generator(letter) : rep.generator_inverse(-letter));
  return out;
}

CheckReport verify_yang_baxter(const FieldMatrix& r, std::size_t dim_v) {
  CheckReport report;
  FieldMatrix r12 = place_generator(r, 3, 1, dim_v);
  FieldMatrix r23 = place_generator(r, 3, 2, dim_v);
  check_equal(report, "Yang-Baxter", r12 * r23 * r12, r23 * r12 * r23);
  return report;
}

CheckReport verify_hexagon_on_triple(const QModule& u, const QModule& v, const QModule& w,
                                     const BraidingProvider& braiding) {
  auto need = [&](const QModule& a, const QModule& b, const char* label) {
    auto c = braiding(a, b);
    if (!c)
      throw UnsupportedConfiguration(std::string("no braiding available for ") + label + " (dimensions " +
                                     std::to_string(a.dimension()) + " and " + std::to_string(b.dimension()) + ")");
    if (c->rows() != a.dimension() * b.dimension() || !c->is_square())
      throw DomainError(std::string("braiding ") + label + " has shape " + c->shape());
    return *c;
  };
  const QModule vw = tensor_module(v, w);
  const QModule uv = tensor_module(u, v);
  const FieldMatrix c_uv = need(u, v, "c_{U,V}");
  const FieldMatrix c_uw = need(u, w, "c_{U,W}");
  const FieldMatrix c_vw = need(v, w, "c_{V,W}");
  const FieldMatrix c_u_vw = need(u, vw, "c_{U,V(x)W}");
  const FieldMatrix c_uv_w = need(uv, w, "c_{U(x)V,W}");
  const auto id = [](std::size_t n) { return FieldMatrix::identity(n); };

  CheckReport report;
  check_equal(report, "hexagon c_{U,V(x)W}", c_u_vw,
              kron(id(v.dimension()), c_uw) * kron(c_uv, id(w.dimension())));
  check_equal(report, "hexagon c_{U(x)V,W}", c_uv_w,
              kron(c_uw, id(v.dimension())) * kron(id(u.dimension()), c_vw));
  return report;
}

}  // namespace rbraid
