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

/* C interface to rbraid. Every call returns an rb_status; on failure
 * rb_last_error() describes the error for the calling thread. Strings
 * returned through char** are owned by the caller and released with
 * rb_string_free. */
#ifndef RBRAID_RBRAID_H_
#define RBRAID_RBRAID_H_

#include <stddef.h>

#if defined(RBRAID_BUILDING)
#define RB_API __attribute__((visibility("default")))
#else
#define RB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  RB_OK = 0,
  RB_USAGE_ERROR = 1,
  RB_COMPUTATION_ERROR = 2,
  RB_VERIFICATION_FAILED = 3
} rb_status;

typedef enum { RB_FORMAT_TEXT = 0, RB_FORMAT_STRUCTURED = 1 } rb_format;

typedef struct rb_job rb_job;
typedef struct rb_module rb_module;

RB_API const char* rb_version(void);
RB_API const char* rb_last_error(void);
RB_API void rb_string_free(char* s);

RB_API rb_status rb_job_create(rb_job** out);
RB_API void rb_job_destroy(rb_job* job);
/* type is "A", "B" or "D". */
RB_API rb_status rb_job_set_lie(rb_job* job, const char* type, int rank);
/* Comma-separated integers, e.g. "1,0". */
RB_API rb_status rb_job_set_weight(rb_job* job, const char* weight);
RB_API rb_status rb_job_set_strands(rb_job* job, int strands);
/* Whitespace-separated signed generator indices, e.g. "1 2 -1". */
RB_API rb_status rb_job_set_word(rb_job* job, const char* word);
/* NULL or "" clears the module file. */
RB_API rb_status rb_job_set_module_file(rb_job* job, const char* path);
RB_API rb_status rb_job_set_order(rb_job* job, int order);
RB_API rb_status rb_job_set_cap(rb_job* job, size_t cap);
RB_API rb_status rb_job_set_format(rb_job* job, rb_format format);
/* command is one of twist, fuse, rmatrix, braid, verify, module. The report
 * (or the error message) is stored in *out even when the status is not
 * RB_OK. */
RB_API rb_status rb_run(const rb_job* job, const char* command, char** out);

RB_API rb_status rb_module_sl2(long highest_weight, rb_module** out);
/* Parses and validates a module file. */
RB_API rb_status rb_module_load(const char* path, rb_module** out);
RB_API rb_status rb_module_load_text(const char* text, rb_module** out);
RB_API void rb_module_destroy(rb_module* m);
RB_API size_t rb_module_dimension(const rb_module* m);
RB_API rb_status rb_module_serialize(const rb_module* m, char** out);
/* RB_VERIFICATION_FAILED if any relation fails; the named failures go to
 * *report when report is not NULL. */
RB_API rb_status rb_module_verify(const rb_module* m, char** report);

#ifdef __cplusplus
}
#endif

#endif /* RBRAID_RBRAID_H_ */
