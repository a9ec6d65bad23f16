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

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rbraid/rbraid.h"

namespace {

int report(rb_status s, const char* what) {
  if (s != RB_OK) std::cerr << "rbraid: " << what << ": " << rb_last_error() << "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact braidings, twists and braid representations of quantum group modules"};
  app.set_version_flag("--version", rb_version());
  app.require_subcommand(1);
  app.fallthrough();

  std::string type = "A", weight = "1", word, module_file, format = "text";
  int rank = 1, strands = 3, order = 2;
  std::size_t cap = 1024;
  app.add_option("--type", type, "Lie type: A, B or D")->capture_default_str();
  app.add_option("--rank", rank, "Rank")->capture_default_str();
  app.add_option("--weight", weight, "Highest weight in fundamental-weight coordinates, e.g. 1,0")
      ->capture_default_str();
  app.add_option("--strands", strands, "Number of strands")->capture_default_str();
  app.add_option("--word", word, "Braid word, e.g. \"1 2 -1\"");
  app.add_option("--module-file", module_file, "Module file with explicit generator matrices");
  app.add_option("--order", order, "Series truncation order")->capture_default_str();
  app.add_option("--cap", cap, "Maximum working dimension")->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  const char* commands[][2] = {
      {"twist", "Casimir value and twist of V(lambda)"},
      {"fuse", "Decomposition of V(lambda) (x) V(lambda)"},
      {"rmatrix", "Spectrum and matrix of the braiding on V (x) V"},
      {"braid", "Matrix of a braid word on V^(x)m"},
      {"verify", "Run the identity suite; exit 3 on any failure"},
      {"module", "Write the module file of the configured module"},
  };
  for (const auto& c : commands) app.add_subcommand(c[0], c[1]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : RB_USAGE_ERROR;
  }

  rb_job* job = nullptr;
  if (int s = report(rb_job_create(&job), "job")) return s;
  struct Guard {
    rb_job* j;
    ~Guard() { rb_job_destroy(j); }
  } guard{job};

  if (int s = report(rb_job_set_lie(job, type.c_str(), rank), "--type/--rank")) return s;
  if (int s = report(rb_job_set_weight(job, weight.c_str()), "--weight")) return s;
  if (int s = report(rb_job_set_strands(job, strands), "--strands")) return s;
  if (int s = report(rb_job_set_word(job, word.c_str()), "--word")) return s;
  if (int s = report(rb_job_set_module_file(job, module_file.c_str()), "--module-file")) return s;
  if (int s = report(rb_job_set_order(job, order), "--order")) return s;
  if (int s = report(rb_job_set_cap(job, cap), "--cap")) return s;
  if (int s = report(rb_job_set_format(job, format == "structured" ? RB_FORMAT_STRUCTURED : RB_FORMAT_TEXT),
                     "--format"))
    return s;

  const std::string command = app.get_subcommands().front()->get_name();
  char* out = nullptr;
  rb_status s = rb_run(job, command.c_str(), &out);
  if (s == RB_OK || s == RB_VERIFICATION_FAILED) {
    std::fputs(out ? out : "", stdout);
  } else {
    std::cerr << "rbraid: " << (out ? out : rb_last_error());
  }
  rb_string_free(out);
  return s;
}
