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

#include "rbraid/rbraid.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "rbraid/jobs.hpp"
#include "rbraid/qmodule.hpp"

struct rb_job {
  rbraid::JobConfig config;
};

struct rb_module {
  rbraid::QModule module;
};

namespace {

thread_local std::string last_error;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rb_status fail(rb_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <class F>
rb_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const rbraid::UsageError& e) {
    return fail(RB_USAGE_ERROR, e.what());
  } catch (const rbraid::ParseError& e) {
    return fail(RB_USAGE_ERROR, e.what());
  } catch (const rbraid::RelationError& e) {
    return fail(RB_VERIFICATION_FAILED, e.what());
  } catch (const std::exception& e) {
    return fail(RB_COMPUTATION_ERROR, e.what());
  }
}

#define RB_REQUIRE(cond, what) \
  if (!(cond)) return fail(RB_USAGE_ERROR, what)

}  // namespace

extern "C" {

const char* rb_version(void) { return "0.1.0"; }
const char* rb_last_error(void) { return last_error.c_str(); }
void rb_string_free(char* s) { std::free(s); }

rb_status rb_job_create(rb_job** out) {
  RB_REQUIRE(out, "null output pointer");
  return guarded([&] {
    *out = new rb_job{};
    return RB_OK;
  });
}

void rb_job_destroy(rb_job* job) { delete job; }

rb_status rb_job_set_lie(rb_job* job, const char* type, int rank) {
  RB_REQUIRE(job && type, "null argument");
  return guarded([&] {
    try {
      job->config.lie_type = rbraid::parse_lie_type(type);
    } catch (const rbraid::Error& e) {
      throw rbraid::UsageError(e.what());
    }
    job->config.rank = rank;
    return RB_OK;
  });
}

rb_status rb_job_set_weight(rb_job* job, const char* weight) {
  RB_REQUIRE(job && weight, "null argument");
  return guarded([&] {
    job->config.weight = rbraid::Weight::parse(weight).coords;
    return RB_OK;
  });
}

rb_status rb_job_set_strands(rb_job* job, int strands) {
  RB_REQUIRE(job, "null job");
  RB_REQUIRE(strands >= 2, "strands must be at least 2");
  job->config.strands = strands;
  return RB_OK;
}

rb_status rb_job_set_word(rb_job* job, const char* word) {
  RB_REQUIRE(job && word, "null argument");
  job->config.word = word;
  return RB_OK;
}

rb_status rb_job_set_module_file(rb_job* job, const char* path) {
  RB_REQUIRE(job, "null job");
  job->config.module_file = path ? path : "";
  return RB_OK;
}

rb_status rb_job_set_order(rb_job* job, int order) {
  RB_REQUIRE(job, "null job");
  RB_REQUIRE(order >= 2, "truncation order must be at least 2");
  job->config.order = order;
  return RB_OK;
}

rb_status rb_job_set_cap(rb_job* job, size_t cap) {
  RB_REQUIRE(job, "null job");
  RB_REQUIRE(cap >= 1, "cap must be positive");
  job->config.cap = cap;
  return RB_OK;
}

rb_status rb_job_set_format(rb_job* job, rb_format format) {
  RB_REQUIRE(job, "null job");
  RB_REQUIRE(format == RB_FORMAT_TEXT || format == RB_FORMAT_STRUCTURED, "unknown format");
  job->config.format = format == RB_FORMAT_TEXT ? rbraid::OutputFormat::Text : rbraid::OutputFormat::Structured;
  return RB_OK;
}

rb_status rb_run(const rb_job* job, const char* command, char** out) {
  RB_REQUIRE(job && command && out, "null argument");
  return guarded([&] {
    rbraid::JobResult r = rbraid::run_command(command, job->config);
    *out = duplicate(r.output);
    if (r.status != RB_OK) last_error = r.output;
    return static_cast<rb_status>(r.status);
  });
}

rb_status rb_module_sl2(long highest_weight, rb_module** out) {
  RB_REQUIRE(out, "null output pointer");
  return guarded([&] {
    *out = new rb_module{rbraid::sl2_simple_module(highest_weight)};
    return RB_OK;
  });
}

rb_status rb_module_load(const char* path, rb_module** out) {
  RB_REQUIRE(path && out, "null argument");
  return guarded([&] {
    *out = new rb_module{rbraid::load_module(path)};
    return RB_OK;
  });
}

rb_status rb_module_load_text(const char* text, rb_module** out) {
  RB_REQUIRE(text && out, "null argument");
  return guarded([&] {
    *out = new rb_module{rbraid::load_module_text(text)};
    return RB_OK;
  });
}

void rb_module_destroy(rb_module* m) { delete m; }

size_t rb_module_dimension(const rb_module* m) { return m ? m->module.dimension() : 0; }

rb_status rb_module_serialize(const rb_module* m, char** out) {
  RB_REQUIRE(m && out, "null argument");
  return guarded([&] {
    *out = duplicate(rbraid::serialize_module(m->module));
    return RB_OK;
  });
}

rb_status rb_module_verify(const rb_module* m, char** report) {
  RB_REQUIRE(m, "null module");
  return guarded([&] {
    rbraid::CheckReport rep = rbraid::verify_relations(m->module);
    if (report) {
      std::string text;
      for (const auto& e : rep.entries)
        text += std::string(e.passed ? "PASS " : "FAIL ") + e.name + (e.detail.empty() ? "" : ": " + e.detail) + "\n";
      *report = duplicate(text);
    }
    return rep.all_passed() ? RB_OK : fail(RB_VERIFICATION_FAILED, "module relations failed");
  });
}

}  // extern "C"
