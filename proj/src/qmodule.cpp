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

#include "rbraid/qmodule.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "rbraid/qnumbers.hpp"

namespace rbraid {

QModule::QModule(CartanData cd, int root_order, std::vector<Weight> weights,
                 std::vector<FieldMatrix> e, std::vector<FieldMatrix> f,
                 std::vector<FieldMatrix> k, std::vector<FieldMatrix> k_inv)
    : cd_(std::move(cd)),
      root_order_(root_order),
      weights_(std::move(weights)),
      e_(std::move(e)),
      f_(std::move(f)),
      k_(std::move(k)),
      k_inv_(std::move(k_inv)) {
  if (root_order_ <= 0) throw DomainError("module root order must be positive");
  if (weights_.empty()) throw DomainError("module dimension must be positive");
  auto r = static_cast<std::size_t>(cd_.rank());
  if (e_.size() != r || f_.size() != r || k_.size() != r || k_inv_.size() != r)
    throw DomainError("module needs one E, F, K, K^-1 matrix per simple root (rank " +
                      std::to_string(r) + ")");
  for (const auto& w : weights_) check_weight(w, cd_);
  const std::size_t n = weights_.size();
  for (const auto* family : {&e_, &f_, &k_, &k_inv_})
    for (const auto& m : *family)
      if (m.rows() != n || m.cols() != n)
        throw DomainError("generator matrix has shape " + m.shape() + ", expected " +
                          std::to_string(n) + "x" + std::to_string(n));
}

std::map<Weight, std::vector<std::size_t>> QModule::weight_spaces() const {
  std::map<Weight, std::vector<std::size_t>> spaces;
  for (std::size_t i = 0; i < weights_.size(); ++i) spaces[weights_[i]].push_back(i);
  return spaces;
}

std::vector<std::pair<std::string, const FieldMatrix*>> QModule::generators() const {
  std::vector<std::pair<std::string, const FieldMatrix*>> out;
  for (int i = 0; i < rank(); ++i) {
    std::string idx = std::to_string(i + 1);
    out.emplace_back("E_" + idx, &E(i));
    out.emplace_back("F_" + idx, &F(i));
    out.emplace_back("K_" + idx, &K(i));
    out.emplace_back("K_" + idx + "^-1", &K_inv(i));
  }
  return out;
}

QModule sl2_simple_module(long m, int root_order) {
  if (m < 0) throw DomainError("sl2 highest weight must be non-negative");
  CartanData cd = cartan_data(LieType::A, 1);
  if (root_order == 0) root_order = cd.root_order();
  auto n = static_cast<std::size_t>(m + 1);
  FieldMatrix e(n, n), f(n, n), k(n, n), k_inv(n, n);
  std::vector<Weight> weights;
  for (long j = 0; j <= m; ++j) {
    auto col = static_cast<std::size_t>(j);
    weights.push_back(Weight{{m - 2 * j}});
    k(col, col) = FieldElement::q_power(m - 2 * j, root_order);
    k_inv(col, col) = FieldElement::q_power(2 * j - m, root_order);
    if (j < m) f(col + 1, col) = FieldElement(1, root_order);
    if (j > 0) e(col - 1, col) = q_integer(j, 1, root_order) * q_integer(m - j + 1, 1, root_order);
  }
  return QModule(cd, root_order, std::move(weights), {e}, {f}, {k}, {k_inv});
}

QModule trivial_module(const CartanData& cd, int root_order) {
  if (root_order == 0) root_order = cd.root_order();
  const auto r = static_cast<std::size_t>(cd.rank());
  std::vector<FieldMatrix> zero(r, FieldMatrix(1, 1)), one(r, FieldMatrix::identity(1));
  return QModule(cd, root_order, {Weight{std::vector<long>(r, 0)}}, zero, zero, one, one);
}

namespace {

FieldMatrix matrix_power(const FieldMatrix& m, long n) {
  FieldMatrix r = FieldMatrix::identity(m.rows());
  for (long k = 0; k < n; ++k) r = r * m;
  return r;
}

void check_grading(CheckReport& report, const QModule& m, const std::string& name,
                   const FieldMatrix& g, const Weight& shift) {
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      if (!g(r, c).is_zero() && m.weight(r) - m.weight(c) != shift) {
        report.add(name + " weight grading", false,
                   "entry (" + std::to_string(r) + "," + std::to_string(c) + ") maps weight " +
                       m.weight(c).to_string() + " to " + m.weight(r).to_string());
        return;
      }
  report.add(name + " weight grading", true);
}

}  // namespace

CheckReport verify_relations(const QModule& m) {
  CheckReport report;
  const auto& cd = m.cartan();
  const int r = m.rank();
  const int D = m.root_order();
  const std::size_t n = m.dimension();
  const FieldMatrix id = FieldMatrix::identity(n);
  auto name = [](const char* g, int i) { return std::string(g) + "_" + std::to_string(i + 1); };

  for (int i = 0; i < r; ++i) {
    Weight alpha = simple_root_in_weight_basis(i, cd);
    // K_i acts by q^{<mu, alpha_i>} on the weight-mu basis vector.
    std::vector<FieldElement> expected;
    for (const auto& w : m.weights())
      expected.push_back(FieldElement::q_power(weight_inner_product(w, alpha, cd), D));
    check_equal(report, name("K", i) + " weight action", m.K(i), FieldMatrix::diagonal(expected));
    check_grading(report, m, name("E", i), m.E(i), alpha);
    check_grading(report, m, name("F", i), m.F(i), (-1) * alpha);
  }

  for (int i = 0; i < r; ++i) {
    check_equal(report, name("K", i) + " K_" + std::to_string(i + 1) + "^-1 = 1", m.K(i) * m.K_inv(i), id);
    check_equal(report, name("K", i) + "^-1 K_" + std::to_string(i + 1) + " = 1", m.K_inv(i) * m.K(i), id);
    for (int j = i + 1; j < r; ++j)
      check_equal(report, name("K", i) + " " + name("K", j) + " = " + name("K", j) + " " + name("K", i),
                  m.K(i) * m.K(j), m.K(j) * m.K(i));
  }

  for (int i = 0; i < r; ++i) {
    const int qi = cd.d(i);
    for (int j = 0; j < r; ++j) {
      FieldElement factor = FieldElement::q_power(static_cast<long>(qi) * cd.a(i, j), D);
      check_equal(report, name("K", i) + " " + name("E", j) + " " + name("K", i) + "^-1 = q_" +
                              std::to_string(i + 1) + "^a " + name("E", j),
                  m.K(i) * m.E(j) * m.K_inv(i), factor * m.E(j));
      check_equal(report, name("K", i) + " " + name("F", j) + " " + name("K", i) + "^-1 = q_" +
                              std::to_string(i + 1) + "^-a " + name("F", j),
                  m.K(i) * m.F(j) * m.K_inv(i), factor.inverse() * m.F(j));
      FieldMatrix rhs(n, n);
      if (i == j) {
        FieldElement qq = FieldElement::q_power(qi, D) - FieldElement::q_power(-qi, D);
        rhs = (m.K(i) - m.K_inv(i)) * qq.inverse();
      }
      check_equal(report, "[" + name("E", i) + "," + name("F", j) + "]", commutator(m.E(i), m.F(j)), rhs);
    }
  }

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      const long top = 1 - cd.a(i, j);
      for (const char* g : {"E", "F"}) {
        const FieldMatrix& xi = *g == 'E' ? m.E(i) : m.F(i);
        const FieldMatrix& xj = *g == 'E' ? m.E(j) : m.F(j);
        FieldMatrix sum(n, n);
        for (long k = 0; k <= top; ++k) {
          FieldElement c = q_binomial(top, k, cd.d(i), D);
          if (k % 2) c = -c;
          sum += c * (matrix_power(xi, k) * xj * matrix_power(xi, top - k));
        }
        check_equal(report, std::string("q-Serre ") + g + "(" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")",
                    sum, FieldMatrix(n, n));
      }
    }
  return report;
}

QModule tensor_module(const QModule& m, const QModule& n) {
  if (!(m.cartan() == n.cartan()))
    throw DomainError("cannot tensor modules over " + m.cartan().name() + " and " + n.cartan().name());
  int D = std::lcm(m.root_order(), n.root_order());
  const FieldMatrix id_m = FieldMatrix::identity(m.dimension());
  const FieldMatrix id_n = FieldMatrix::identity(n.dimension());
  std::vector<FieldMatrix> e, f, k, k_inv;
  for (int i = 0; i < m.rank(); ++i) {
    e.push_back(kron(m.E(i), n.K(i)) + kron(id_m, n.E(i)));
    f.push_back(kron(m.F(i), id_n) + kron(m.K_inv(i), n.F(i)));
    k.push_back(kron(m.K(i), n.K(i)));
    k_inv.push_back(kron(m.K_inv(i), n.K_inv(i)));
  }
  std::vector<Weight> weights;
  weights.reserve(m.dimension() * n.dimension());
  for (const auto& a : m.weights())
    for (const auto& b : n.weights()) weights.push_back(a + b);
  return QModule(m.cartan(), D, std::move(weights), std::move(e), std::move(f), std::move(k),
                 std::move(k_inv));
}

QModule tensor_power(const QModule& m, int n) {
  if (n < 1) throw DomainError("tensor power must be at least 1");
  QModule out = m;
  for (int k = 1; k < n; ++k) out = tensor_module(out, m);
  return out;
}

std::vector<HighestWeightVector> highest_weight_vectors(const QModule& m) {
  std::vector<HighestWeightVector> out;
  const auto spaces = m.weight_spaces();
  // Highest weights first (reverse lexicographic), for a stable order.
  for (auto it = spaces.rbegin(); it != spaces.rend(); ++it) {
    const auto& [w, idx] = *it;
    std::vector<std::size_t> rows;
    for (int i = 0; i < m.rank(); ++i)
      for (std::size_t row = 0; row < m.dimension(); ++row)
        for (std::size_t c : idx)
          if (!m.E(i)(row, c).is_zero()) {
            rows.push_back(static_cast<std::size_t>(i) * m.dimension() + row);
            break;
          }
    FieldMatrix block(rows.size(), idx.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int gen = static_cast<int>(rows[r] / m.dimension());
      std::size_t row = rows[r] % m.dimension();
      for (std::size_t c = 0; c < idx.size(); ++c) block(r, c) = m.E(gen)(row, idx[c]);
    }
    std::vector<FieldVector> kernel;
    if (rows.empty()) {
      for (std::size_t c = 0; c < idx.size(); ++c) {
        FieldVector v(idx.size());
        v[c] = FieldElement(1);
        kernel.push_back(std::move(v));
      }
    } else {
      kernel = nullspace(block);
    }
    for (auto& local : kernel) {
      HighestWeightVector h{FieldVector(m.dimension()), w};
      for (std::size_t c = 0; c < idx.size(); ++c) h.coeffs[idx[c]] = local[c];
      out.push_back(std::move(h));
    }
  }
  return out;
}

RelationError::RelationError(CheckReport report)
    : Error([&] {
        std::string msg = "module relations violated:";
        for (const auto& f : report.failures()) msg += " [" + f.name + "]";
        return msg;
      }()),
      report_(std::move(report)) {}

namespace {

constexpr const char* kMagic = "rbraid-module 1";

void write_matrix(std::ostringstream& os, const char* gen, int i, const FieldMatrix& m) {
  os << "generator " << gen << ' ' << (i + 1) << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) os << r << ' ' << c << ' ' << m(r, c).to_string() << '\n';
  os << "end\n";
}

}  // namespace

std::string serialize_module(const QModule& m) {
  std::ostringstream os;
  os << kMagic << '\n';
  os << "lie_type " << to_string(m.cartan().lie_type()) << '\n';
  os << "rank " << m.rank() << '\n';
  os << "root_order " << m.root_order() << '\n';
  os << "dimension " << m.dimension() << '\n';
  os << "weights\n";
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    os << i;
    for (long c : m.weight(i).coords) os << ' ' << c;
    os << '\n';
  }
  os << "end\n";
  for (int i = 0; i < m.rank(); ++i) {
    write_matrix(os, "E", i, m.E(i));
    write_matrix(os, "F", i, m.F(i));
    write_matrix(os, "K", i, m.K(i));
    write_matrix(os, "Kinv", i, m.K_inv(i));
  }
  return os.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-blank, non-comment line; false at end of input.
  bool next(std::string& line) {
    while (pos_ < text_.size()) {
      auto nl = text_.find('\n', pos_);
      std::string_view raw = text_.substr(pos_, nl == std::string_view::npos ? std::string_view::npos : nl - pos_);
      pos_ = nl == std::string_view::npos ? text_.size() : nl + 1;
      ++line_no_;
      std::string s(raw);
      while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
      std::size_t lead = s.find_first_not_of(" \t");
      if (lead == std::string::npos || s[lead] == '#') continue;
      line = s.substr(lead);
      return true;
    }
    return false;
  }
  std::string expect(const char* what) {
    std::string line;
    if (!next(line)) fail(std::string("unexpected end of input, expected ") + what);
    return line;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("module file line " + std::to_string(line_no_) + ": " + msg);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

long parse_long(const LineReader& in, const std::string& s) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    in.fail("expected an integer, got '" + s + "'");
  }
}

long header_value(LineReader& in, const std::string& key) {
  std::string line = in.expect(key.c_str());
  std::istringstream is(line);
  std::string k, v, extra;
  is >> k >> v;
  if (k != key || v.empty() || (is >> extra)) in.fail("expected '" + key + " <value>'");
  return parse_long(in, v);
}

}  // namespace

QModule parse_module(std::string_view text) {
  LineReader in(text);
  if (in.expect("header") != kMagic) in.fail(std::string("expected '") + kMagic + "'");
  std::string type_line = in.expect("lie_type");
  if (type_line.rfind("lie_type ", 0) != 0) in.fail("expected 'lie_type <A|B|D>'");
  LieType type = parse_lie_type(type_line.substr(9));
  long rank = header_value(in, "rank");
  long root_order = header_value(in, "root_order");
  long dim = header_value(in, "dimension");
  if (rank < 1 || rank > 64) in.fail("rank out of range");
  if (root_order < 1) in.fail("root_order must be positive");
  if (dim < 1) in.fail("dimension must be positive");
  CartanData cd = cartan_data(type, static_cast<int>(rank));
  auto n = static_cast<std::size_t>(dim);
  const int D = static_cast<int>(root_order);

  if (in.expect("weights") != "weights") in.fail("expected 'weights'");
  std::vector<Weight> weights(n);
  std::vector<bool> seen(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    std::istringstream is(in.expect("weight row"));
    std::string tok;
    std::vector<long> vals;
    while (is >> tok) vals.push_back(parse_long(in, tok));
    if (vals.size() != static_cast<std::size_t>(rank) + 1) in.fail("weight row needs index and " + std::to_string(rank) + " coordinates");
    if (vals[0] < 0 || vals[0] >= dim || seen[static_cast<std::size_t>(vals[0])]) in.fail("bad or repeated basis index");
    seen[static_cast<std::size_t>(vals[0])] = true;
    weights[static_cast<std::size_t>(vals[0])].coords.assign(vals.begin() + 1, vals.end());
  }
  if (in.expect("end") != "end") in.fail("expected 'end' after weights");

  auto r = static_cast<std::size_t>(rank);
  std::vector<FieldMatrix> e(r, FieldMatrix(n, n)), f(r, FieldMatrix(n, n)), k(r, FieldMatrix(n, n)),
      k_inv(r, FieldMatrix(n, n));
  std::vector<int> filled(4 * r, 0);
  std::string line;
  while (in.next(line)) {
    std::istringstream is(line);
    std::string kw, gen, idx_s, extra;
    is >> kw >> gen >> idx_s;
    if (kw != "generator" || idx_s.empty() || (is >> extra)) in.fail("expected 'generator <E|F|K|Kinv> <index>'");
    long idx = parse_long(in, idx_s);
    if (idx < 1 || idx > rank) in.fail("generator index out of range");
    int family = gen == "E" ? 0 : gen == "F" ? 1 : gen == "K" ? 2 : gen == "Kinv" ? 3 : -1;
    if (family < 0) in.fail("unknown generator '" + gen + "'");
    auto slot = static_cast<std::size_t>(family) * r + static_cast<std::size_t>(idx - 1);
    if (filled[slot]++) in.fail("generator " + gen + " " + idx_s + " given twice");
    FieldMatrix& target = (family == 0 ? e : family == 1 ? f : family == 2 ? k : k_inv)[static_cast<std::size_t>(idx - 1)];
    while (true) {
      std::string entry = in.expect("matrix entry or 'end'");
      if (entry == "end") break;
      std::istringstream es(entry);
      std::string rs, cs;
      es >> rs >> cs;
      long row = parse_long(in, rs), col = parse_long(in, cs);
      if (row < 0 || row >= dim || col < 0 || col >= dim) in.fail("entry index out of range");
      std::string value;
      std::getline(es, value);
      auto lead = value.find_first_not_of(' ');
      if (lead == std::string::npos) in.fail("missing entry value");
      try {
        target(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) =
            FieldElement::parse(value.substr(lead), D);
      } catch (const Error& err) {
        in.fail(err.what());
      }
    }
  }
  for (std::size_t s = 0; s < filled.size(); ++s)
    if (!filled[s]) {
      static const char* names[] = {"E", "F", "K", "Kinv"};
      in.fail(std::string("missing generator ") + names[s / r] + " " + std::to_string(s % r + 1));
    }
  return QModule(cd, D, std::move(weights), std::move(e), std::move(f), std::move(k), std::move(k_inv));
}

QModule load_module_text(std::string_view text) {
  QModule m = parse_module(text);
  CheckReport report = verify_relations(m);
  if (!report.all_passed()) throw RelationError(std::move(report));
  return m;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open module file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

QModule load_module(const std::string& path) { return load_module_text(read_file(path)); }

void save_module(const QModule& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write module file '" + path + "'");
  out << serialize_module(m);
}

}  // namespace rbraid
