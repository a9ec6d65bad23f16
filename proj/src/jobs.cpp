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

#include "rbraid/jobs.hpp"

#include <array>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "rbraid/classical.hpp"
#include "rbraid/qnumbers.hpp"
#include "rbraid/ribbon.hpp"

namespace rbraid {

namespace {

using Json = nlohmann::ordered_json;

// The configured instance: Lie data, highest weight and (when needed) the
// explicit module.
struct Instance {
  CartanData cd;
  Weight lambda;
  std::optional<QModule> module;
};

std::size_t checked_power(std::size_t base, int exp, std::size_t cap, const std::string& what) {
  std::size_t out = 1;
  for (int k = 0; k < exp; ++k) {
    if (base != 0 && out > cap / base)
      throw DomainError(what + " exceeds the dimension cap " + std::to_string(cap));
    out *= base;
  }
  if (out > cap)
    throw DomainError(what + " = " + std::to_string(out) + " exceeds the dimension cap " + std::to_string(cap));
  return out;
}

bool fits(std::size_t base, int exp, std::size_t cap) {
  std::size_t out = 1;
  for (int k = 0; k < exp; ++k) {
    if (base != 0 && out > cap / base) return false;
    out *= base;
  }
  return out <= cap;
}

Weight sole_highest_weight(const QModule& m) {
  auto hw = highest_weight_vectors(m);
  if (hw.size() != 1)
    throw DomainError("module is not simple: it has " + std::to_string(hw.size()) + " highest-weight vectors");
  return hw.front().weight;
}

Instance resolve(const JobConfig& c, bool need_module) {
  validate(c);
  if (!c.module_file.empty()) {
    QModule m = load_module(c.module_file);
    Weight lambda = sole_highest_weight(m);
    return {m.cartan(), lambda, std::move(m)};
  }
  CartanData cd = cartan_data(c.lie_type, c.rank);
  Weight lambda{c.weight};
  if (!need_module) return {cd, lambda, std::nullopt};
  if (cd.lie_type() != LieType::A || cd.rank() != 1)
    throw DomainError("explicit module matrices are built in for A1 only; pass --module-file for " + cd.name());
  return {cd, lambda, sl2_simple_module(lambda.coords[0])};
}

Json header(const char* command, const Instance& in) {
  Json j;
  j["command"] = command;
  j["lie_type"] = to_string(in.cd.lie_type());
  j["rank"] = in.cd.rank();
  j["weight"] = in.lambda.coords;
  j["root_order"] = in.module ? std::lcm(in.cd.root_order(), in.module->root_order()) : in.cd.root_order();
  return j;
}

std::string title(const Instance& in) { return in.cd.name() + " V" + in.lambda.to_string(); }

Json matrix_json(const FieldMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

void matrix_text(std::ostream& os, const FieldMatrix& m) {
  os << "matrix " << m.shape() << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).to_string();
    os << "]\n";
  }
}

Json report_json(const CheckReport& rep) {
  Json arr = Json::array();
  for (const auto& e : rep.entries) {
    Json j;
    j["name"] = e.name;
    j["passed"] = e.passed;
    if (!e.detail.empty()) j["detail"] = e.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

void report_text(std::ostream& os, const CheckReport& rep) {
  for (const auto& e : rep.entries)
    os << (e.passed ? "PASS " : "FAIL ") << e.name << (e.detail.empty() ? "" : ": " + e.detail) << "\n";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Runs a producer of a CheckReport that may instead throw CertificationError.
template <class F>
CheckReport collect(F&& f) {
  try {
    return f();
  } catch (const CertificationError& e) {
    return e.report();
  }
}

}  // namespace

void validate(const JobConfig& c) {
  if (c.strands < 2) throw UsageError("--strands must be at least 2");
  if (c.order < kMinSeriesOrder)
    throw UsageError("--order must be at least " + std::to_string(kMinSeriesOrder));
  if (c.cap < 1) throw UsageError("--cap must be positive");
  if (!c.module_file.empty()) return;
  CartanData cd = [&] {
    try {
      return cartan_data(c.lie_type, c.rank);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }();
  Weight w{c.weight};
  try {
    check_weight(w, cd);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (!w.is_dominant()) throw UsageError("weight " + w.to_string() + " is not dominant");
}

JobResult cmd_twist(const JobConfig& c) {
  Instance in = resolve(c, false);
  const int D = in.cd.root_order();
  const Rational chi = casimir_eigenvalue(in.lambda, in.cd);
  const FieldElement theta = twist_scalar(in.lambda, in.cd, D);
  if (c.format == OutputFormat::Structured) {
    Json j = header("twist", in);
    j["casimir"] = to_string(chi);
    j["twist"] = theta.to_string();
    return {kExitOk, dump(j)};
  }
  std::ostringstream os;
  os << "twist of " << title(in) << "\n" << to_string(chi) << ", " << theta.to_string() << "\n";
  return {kExitOk, os.str()};
}

JobResult cmd_fuse(const JobConfig& c) {
  Instance in = resolve(c, false);
  const FusionDecomposition d = decompose_general(in.cd, in.lambda, c.cap);
  if (c.format == OutputFormat::Structured) {
    Json j = header("fuse", in);
    Json s = Json::array();
    for (const auto& x : d.summands) {
      Json e;
      e["weight"] = x.weight.coords;
      e["multiplicity"] = x.multiplicity;
      e["dimension"] = x.dimension;
      e["casimir"] = to_string(x.casimir);
      s.push_back(std::move(e));
    }
    j["summands"] = std::move(s);
    j["multiplicity_free"] = d.multiplicity_free;
    return {kExitOk, dump(j)};
  }
  std::ostringstream os;
  os << "fusion of " << title(in) << " (x) V" << in.lambda.to_string() << "\n";
  for (const auto& x : d.summands)
    os << "summand " << x.weight.to_string() << " multiplicity " << x.multiplicity << " dimension " << x.dimension
       << " casimir " << to_string(x.casimir) << "\n";
  os << "multiplicity-free: " << (d.multiplicity_free ? "yes" : "no") << "\n";
  return {kExitOk, os.str()};
}

JobResult cmd_rmatrix(const JobConfig& c) {
  Instance in = resolve(c, true);
  const QModule& v = *in.module;
  checked_power(v.dimension(), 2, c.cap, "dim V^2");
  const CertifiedBraiding b = build_braiding(v);
  if (c.format == OutputFormat::Structured) {
    Json j = header("rmatrix", in);
    Json s = Json::array();
    for (const auto& e : b.spectrum.entries) {
      Json x;
      x["weight"] = e.weight.coords;
      x["dimension"] = e.dimension;
      x["twist"] = e.twist.to_string();
      x["sign"] = e.sign;
      x["eigenvalue"] = e.eigenvalue().to_string();
      s.push_back(std::move(x));
    }
    j["base_twist"] = b.spectrum.base_twist.to_string();
    j["spectrum"] = std::move(s);
    j["matrix"] = matrix_json(b.r);
    j["certificate"] = report_json(b.certificate);
    return {kExitOk, dump(j)};
  }
  std::ostringstream os;
  os << "braiding on " << title(in) << " (x) V" << in.lambda.to_string() << ", root order "
     << b.spectrum.root_order << "\n";
  os << "twist " << b.spectrum.base_twist.to_string() << "\n";
  for (const auto& e : b.spectrum.entries)
    os << "summand " << e.weight.to_string() << " dimension " << e.dimension << " twist " << e.twist.to_string()
       << " sign " << (e.sign > 0 ? "+" : "-") << " eigenvalue " << e.eigenvalue().to_string() << "\n";
  matrix_text(os, b.r);
  report_text(os, b.certificate);
  return {kExitOk, os.str()};
}

JobResult cmd_braid(const JobConfig& c) {
  Instance in = resolve(c, true);
  const QModule& v = *in.module;
  checked_power(v.dimension(), c.strands, c.cap, "dim V^" + std::to_string(c.strands));
  const BraidWord word = [&] {
    try {
      return BraidWord::parse(c.word, c.strands);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  const CertifiedBraiding b = build_braiding(v);
  const BraidRep rep = build_representation(b.r, b.r_inv, c.strands, v.dimension());
  const FieldMatrix m = evaluate(word, rep);
  CheckReport cert = b.certificate;
  cert.append(rep.certificate());
  if (c.format == OutputFormat::Structured) {
    Json j = header("braid", in);
    j["strands"] = c.strands;
    j["word"] = word.to_string();
    j["matrix"] = matrix_json(m);
    j["certificate"] = report_json(cert);
    return {kExitOk, dump(j)};
  }
  std::ostringstream os;
  os << "braid word [" << word.to_string() << "] on " << c.strands << " strands of " << title(in) << "\n";
  matrix_text(os, m);
  report_text(os, cert);
  return {kExitOk, os.str()};
}

JobResult cmd_verify(const JobConfig& c) {
  validate(c);
  CheckReport rep;
  std::vector<std::string> skipped;
  std::optional<Instance> in;
  bool relations_ok = true;

  if (!c.module_file.empty()) {
    std::ifstream f(c.module_file);
    if (!f) throw DomainError("cannot open module file " + c.module_file);
    std::stringstream buf;
    buf << f.rdbuf();
    QModule m = parse_module(buf.str());
    CheckReport rel = verify_relations(m);
    relations_ok = rel.all_passed();
    rep.append(rel);
    if (relations_ok) {
      Weight lambda = sole_highest_weight(m);
      in = Instance{m.cartan(), lambda, std::move(m)};
    }
  } else {
    in = resolve(c, true);
    rep.append(verify_relations(*in->module));
  }

  if (relations_ok) {
    const QModule& v = *in->module;
    const CartanData& cd = in->cd;
    const std::size_t dim = v.dimension();
    const bool sl2 = cd.lie_type() == LieType::A && cd.rank() == 1;
    const bool square_fits = fits(dim, 2, c.cap);
    const bool cube_fits = fits(dim, 3, c.cap);

    check_equal(rep, "K_2rho acts by q^<mu,2rho>", k2rho_action(v), k2rho_expected(v));

    if (square_fits) {
      const QModule square = tensor_module(v, v);
      CheckReport sq = verify_relations(square);
      for (auto& e : sq.entries) e.name = "V(x)V " + e.name;
      rep.append(sq);

      const auto comps = isotypic_decomposition(square);
      rep.append(verify_projector_algebra(square, comps));
      const FusionDecomposition d = decompose_general(cd, in->lambda, c.cap);
      bool match = d.summands.size() == comps.size();
      for (std::size_t k = 0; match && k < comps.size(); ++k)
        match = d.summands[k].weight == comps[k].weight &&
                static_cast<std::size_t>(d.summands[k].dimension) == comps[k].basis.size();
      rep.add("isotypic components match the character decomposition", match);

      std::optional<CertifiedBraiding> b;
      rep.append(collect([&] {
        b = build_braiding(v);
        return b->certificate;
      }));

      if (b) {
        if (fits(dim, c.strands, c.cap)) {
          rep.append(collect([&] { return build_representation(b->r, b->r_inv, c.strands, dim).certificate(); }));
        } else {
          skipped.push_back("braid representation on " + std::to_string(c.strands) + " strands (cap)");
        }

        const QModule one = trivial_module(cd, v.root_order());
        const auto provider = spectral_braiding_provider(*b);
        for (const auto& [label, triple] :
             std::vector<std::pair<std::string, std::array<const QModule*, 3>>>{
                 {"(1,V,V)", {&one, &v, &v}}, {"(V,1,V)", {&v, &one, &v}}, {"(V,V,1)", {&v, &v, &one}}}) {
          CheckReport h = verify_hexagon_on_triple(*triple[0], *triple[1], *triple[2], provider);
          for (auto& e : h.entries) e.name += " on " + label;
          rep.append(h);
        }

        if (sl2) {
          check_equal(rep, "spectral R equals universal R", b->r, sl2_universal_braiding(v, v));
          const ClassicalModule cl = classical_limit(v);
          rep.append(verify_classical_relations(cl));
          const RationalMatrix t = casimir_two_tensor(cl, cl);
          rep.append(verify_first_order_expansion(b->r, t, c.order));
          rep.append(verify_casimir_centrality(cl, cl));
          if (cube_fits) {
            CheckReport h = verify_hexagon_on_triple(v, v, v, sl2_braiding_provider());
            for (auto& e : h.entries) e.name += " on (V,V,V)";
            rep.append(h);
            rep.append(verify_infinitesimal_braid_relations(t, dim, 3));
            rep.append(verify_two_tensor_coherence(cl, cl, cl));
          } else {
            skipped.push_back("hexagon, infinitesimal braid relations and coherence on V^3 (cap)");
          }
        } else {
          skipped.push_back("classical limit checks (A1 only)");
        }
      }
    } else {
      skipped.push_back("all checks on V(x)V (cap)");
    }
  }

  const bool ok = rep.all_passed();
  const int status = ok ? kExitOk : kExitVerification;
  if (c.format == OutputFormat::Structured) {
    Json j;
    if (in) {
      j = header("verify", *in);
    } else {
      j["command"] = "verify";
      j["module_file"] = c.module_file;
    }
    j["checks"] = report_json(rep);
    j["skipped"] = skipped;
    j["all_passed"] = ok;
    return {status, dump(j)};
  }
  std::ostringstream os;
  os << "verify " << (in ? title(*in) : c.module_file) << "\n";
  report_text(os, rep);
  for (const auto& s : skipped) os << "SKIP " << s << "\n";
  os << (ok ? "all passed" : std::to_string(rep.failures().size()) + " failed") << "\n";
  return {status, os.str()};
}

JobResult cmd_module(const JobConfig& c) {
  Instance in = resolve(c, true);
  return {kExitOk, serialize_module(*in.module)};
}

JobResult run_command(std::string_view name, const JobConfig& config) {
  try {
    if (name == "twist") return cmd_twist(config);
    if (name == "fuse") return cmd_fuse(config);
    if (name == "rmatrix") return cmd_rmatrix(config);
    if (name == "braid") return cmd_braid(config);
    if (name == "verify") return cmd_verify(config);
    if (name == "module") return cmd_module(config);
    return {kExitUsage, "unknown command '" + std::string(name) + "'\n"};
  } catch (const UsageError& e) {
    return {kExitUsage, std::string(e.what()) + "\n"};
  } catch (const ParseError& e) {
    return {kExitUsage, std::string(e.what()) + "\n"};
  } catch (const std::exception& e) {
    return {kExitComputation, std::string(e.what()) + "\n"};
  }
}

}  // namespace rbraid
