/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "rbraid/rbraid.h"

static int failures = 0;

#define EXPECT(cond)                                          \
  do {                                                        \
    if (!(cond)) {                                            \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                             \
    }                                                         \
  } while (0)

int main(int argc, char** argv) {
  rb_job* job = NULL;
  char* out = NULL;
  EXPECT(rb_job_create(&job) == RB_OK);
  EXPECT(rb_job_set_weight(job, "1") == RB_OK);
  EXPECT(rb_run(job, "twist", &out) == RB_OK);
  EXPECT(out && strstr(out, "3/2, q^(3/2)") != NULL);
  rb_string_free(out);

  EXPECT(rb_job_set_format(job, RB_FORMAT_STRUCTURED) == RB_OK);
  EXPECT(rb_run(job, "rmatrix", &out) == RB_OK);
  char* again = NULL;
  EXPECT(rb_run(job, "rmatrix", &again) == RB_OK);
  EXPECT(out && again && strcmp(out, again) == 0);
  rb_string_free(out);
  rb_string_free(again);

  EXPECT(rb_job_set_lie(job, "C", 2) == RB_USAGE_ERROR);
  EXPECT(strlen(rb_last_error()) > 0);
  EXPECT(rb_job_set_weight(job, "1,,") == RB_USAGE_ERROR);
  EXPECT(rb_job_set_strands(job, 1) == RB_USAGE_ERROR);
  EXPECT(rb_job_set_order(job, 1) == RB_USAGE_ERROR);
  EXPECT(rb_job_set_cap(job, 0) == RB_USAGE_ERROR);
  EXPECT(rb_run(job, "nothing", &out) == RB_USAGE_ERROR);
  rb_string_free(out);

  EXPECT(rb_job_set_cap(job, 3) == RB_OK);
  EXPECT(rb_run(job, "rmatrix", &out) == RB_COMPUTATION_ERROR);
  EXPECT(strstr(rb_last_error(), "cap") != NULL);
  rb_string_free(out);
  rb_job_destroy(job);

  rb_module* m = NULL;
  EXPECT(rb_module_sl2(2, &m) == RB_OK);
  EXPECT(rb_module_dimension(m) == 3);
  char* text = NULL;
  EXPECT(rb_module_serialize(m, &text) == RB_OK);
  rb_module* back = NULL;
  EXPECT(rb_module_load_text(text, &back) == RB_OK);
  char* text2 = NULL;
  EXPECT(rb_module_serialize(back, &text2) == RB_OK);
  EXPECT(strcmp(text, text2) == 0);
  char* report = NULL;
  EXPECT(rb_module_verify(back, &report) == RB_OK);
  EXPECT(report && strstr(report, "FAIL") == NULL);
  rb_string_free(report);

  /* Break [E,F] and expect a verification failure. */
  char* pos = strstr(text, "generator E 1\n0 1 ");
  EXPECT(pos != NULL);
  if (pos) {
    char* bad = malloc(strlen(text) + 8);
    size_t head = (size_t)(pos - text) + strlen("generator E 1\n0 1 ");
    memcpy(bad, text, head);
    strcpy(bad + head, "7");
    strcat(bad, strchr(pos + strlen("generator E 1\n0 1 "), '\n'));
    rb_module* broken = NULL;
    EXPECT(rb_module_load_text(bad, &broken) == RB_VERIFICATION_FAILED);
    EXPECT(broken == NULL);
    free(bad);
  }
  rb_string_free(text);
  rb_string_free(text2);
  rb_module_destroy(back);
  rb_module_destroy(m);

  if (argc > 1) {
    rb_module* a2 = NULL;
    EXPECT(rb_module_load(argv[1], &a2) == RB_OK);
    EXPECT(rb_module_dimension(a2) == 3);
    rb_module_destroy(a2);
  }
  EXPECT(rb_module_load("/nonexistent.module", &m) != RB_OK);
  EXPECT(strlen(rb_version()) > 0);

  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("C interface: all checks passed\n");
  return 0;
}
