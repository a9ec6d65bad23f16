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

#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "rbraid/jobs.hpp"

using namespace rbraid;
using Json = nlohmann::json;

namespace {

JobConfig sl2(long m) {
  JobConfig c;
  c.weight = {m};
  return c;
}

JobConfig structured(JobConfig c) {
  c.format = OutputFormat::Structured;
  return c;
}

const std::string kA2Vector = std::string(RBRAID_TEST_DATA) + "/a2_vector.module";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("twist reports") {
    CHECK(cmd_twist(sl2(1)).output == "twist of A1 V(1)\n3/2, q^(3/2)\n");
    CHECK(cmd_twist(sl2(0)).output == "twist of A1 V(0)\n0, 1\n");
    JobConfig a2;
    a2.rank = 2;
    a2.weight = {1, 0};
    CHECK(cmd_twist(a2).output == "twist of A2 V(1,0)\n8/3, q^(8/3)\n");
    Json j = Json::parse(cmd_twist(structured(a2)).output);
    CHECK(j["lie_type"] == "A");
    CHECK(j["rank"] == 2);
    CHECK(j["root_order"] == 6);
    CHECK(j["casimir"] == "8/3");
    CHECK(j["twist"] == "q^(8/3)");
  }

  TEST_CASE("fusion reports") {
    CHECK(cmd_fuse(sl2(1)).output ==
          "fusion of A1 V(1) (x) V(1)\n"
          "summand (2) multiplicity 1 dimension 3 casimir 4\n"
          "summand (0) multiplicity 1 dimension 1 casimir 0\n"
          "multiplicity-free: yes\n");
    Json j = Json::parse(cmd_fuse(structured(sl2(0))).output);
    CHECK(j["summands"].size() == 1);
    JobConfig a2;
    a2.rank = 2;
    a2.weight = {1, 0};
    j = Json::parse(cmd_fuse(structured(a2)).output);
    CHECK(j["summands"].size() == 2);
    CHECK(j["multiplicity_free"] == true);
  }

  TEST_CASE("rmatrix reports") {
    const std::string text = cmd_rmatrix(sl2(1)).output;
    CHECK(text.find("summand (2) dimension 3 twist q^(4) sign + eigenvalue q^(1/2)\n") != std::string::npos);
    CHECK(text.find("summand (0) dimension 1 twist 1 sign - eigenvalue -q^(-3/2)\n") != std::string::npos);
    CHECK(text.find("[0, q^(-1/2), -q^(-3/2) + q^(1/2), 0]\n") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
    Json j = Json::parse(cmd_rmatrix(structured(sl2(0))).output);
    CHECK(j["matrix"] == Json::array({Json::array({"1"})}));
    j = Json::parse(cmd_rmatrix(structured(sl2(2))).output);
    CHECK(j["matrix"].size() == 9);
    std::vector<std::string> eig;
    std::vector<int> signs;
    for (const auto& e : j["spectrum"]) {
      eig.push_back(e["eigenvalue"]);
      signs.push_back(e["sign"]);
    }
    CHECK(eig == std::vector<std::string>{"q^(2)", "-q^(-2)", "q^(-4)"});
    CHECK(signs == std::vector<int>{1, -1, 1});
  }

  TEST_CASE("structured output is deterministic and parseable") {
    for (long m = 0; m <= 2; ++m) {
      const std::string a = cmd_rmatrix(structured(sl2(m))).output;
      CHECK(a == cmd_rmatrix(structured(sl2(m))).output);
      Json j = Json::parse(a);
      for (const auto& row : j["matrix"])
        for (const auto& x : row) CHECK(FieldElement::parse(x.get<std::string>(), 4).to_string() == x);
    }
  }

  TEST_CASE("braid reports") {
    JobConfig c = structured(sl2(1));
    c.word = "1 2 1";
    Json a = Json::parse(cmd_braid(c).output);
    c.word = "2 1 2";
    Json b = Json::parse(cmd_braid(c).output);
    CHECK(a["matrix"] == b["matrix"]);
    CHECK(a["matrix"].size() == 8);
    c.word = "1 -1";
    Json id = Json::parse(cmd_braid(c).output);
    c.word = "";
    CHECK(Json::parse(cmd_braid(c).output)["matrix"] == id["matrix"]);
    CHECK(id["matrix"][0][0] == "1");
    CHECK(id["matrix"][0][1] == "0");
  }

  TEST_CASE("verify") {
    auto r = cmd_verify(sl2(1));
    CHECK(r.status == kExitOk);
    CHECK(r.output.find("FAIL") == std::string::npos);
    CHECK(r.output.find("PASS Yang-Baxter") != std::string::npos);
    CHECK(r.output.find("PASS [t12,t13 + t23] = 0") != std::string::npos);
    CHECK(r.output.find("PASS R^2 at h^1 = 2t") != std::string::npos);
    CHECK(cmd_verify(sl2(0)).status == kExitOk);
    JobConfig a2;
    a2.module_file = kA2Vector;
    CHECK(cmd_verify(a2).status == kExitOk);
  }

  TEST_CASE("verify enumerates relation failures of a perturbed module file") {
    std::ifstream in(kA2Vector);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    text.replace(text.find("\n0 1 1\n") + 1, 5, "0 1 2");
    const std::string path = "perturbed_a2.module";
    std::ofstream(path) << text;
    JobConfig c;
    c.module_file = path;
    auto r = cmd_verify(c);
    CHECK(r.status == kExitVerification);
    CHECK(r.output.find("FAIL [E_1,F_1]") != std::string::npos);
    c.format = OutputFormat::Structured;
    Json j = Json::parse(cmd_verify(c).output);
    CHECK(j["all_passed"] == false);
  }

  TEST_CASE("exit codes") {
    JobConfig bad_rank;
    bad_rank.rank = 0;
    CHECK(run_command("twist", bad_rank).status == kExitUsage);
    JobConfig bad_weight;
    bad_weight.weight = {1, 0};
    CHECK(run_command("twist", bad_weight).status == kExitUsage);
    JobConfig non_dominant = sl2(-1);
    CHECK(run_command("twist", non_dominant).status == kExitUsage);
    CHECK(run_command("frobnicate", sl2(1)).status == kExitUsage);
    JobConfig big = sl2(40);
    big.cap = 100;
    CHECK(run_command("fuse", big).status == kExitComputation);
    JobConfig word = sl2(1);
    word.word = "1 7";
    CHECK(run_command("braid", word).status == kExitUsage);
    JobConfig a2;
    a2.rank = 2;
    a2.weight = {1, 0};
    CHECK(run_command("rmatrix", a2).status == kExitComputation);
    JobConfig missing;
    missing.module_file = "/nonexistent.module";
    CHECK(run_command("rmatrix", missing).status != kExitOk);
  }

  TEST_CASE("module export round-trips") {
    const std::string text = cmd_module(sl2(2)).output;
    const std::string path = "exported_v2.module";
    std::ofstream(path) << text;
    JobConfig c;
    c.module_file = path;
    CHECK(cmd_module(c).output == text);
    CHECK(cmd_rmatrix(c).output == cmd_rmatrix(sl2(2)).output);
  }
}
