/* Copyright 2026 The plcert Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the plcert library. All strings are UTF-8 and owned by the
 * handle they come from unless stated otherwise. */

#ifndef PLCERT_PLCERT_H_
#define PLCERT_PLCERT_H_

#include <stddef.h>

#if defined(PLC_BUILDING_LIBRARY)
#define PLC_API __attribute__((visibility("default")))
#else
#define PLC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum plc_status {
  PLC_OK = 0,
  PLC_NOT_CERTIFIED = 1, /* refuted or inconclusive; details in the report */
  PLC_E_USAGE = 2,
  PLC_E_SCHEMA = 3,
  PLC_E_PARSE = 4,
  PLC_E_DOMAIN = 5,
  PLC_E_IO = 6,
  PLC_E_INTERNAL = 7,
  PLC_E_NULL = 8
} plc_status;

typedef struct plc_context plc_context;
typedef struct plc_result plc_result;

typedef void (*plc_event_fn)(const char* json_line, void* user);

typedef struct plc_row {
  const char* label;
  const char* upper;
  const char* target;
  const char* verdict; /* pass, fail, inconclusive */
  int pass;
  double seconds;
  size_t boxes;
} plc_row;

PLC_API const char* plc_version(void);
PLC_API const char* plc_status_name(plc_status s);

PLC_API plc_status plc_context_new(plc_context** out);
PLC_API void plc_context_free(plc_context* ctx);

/* Message and JSON pointer (or expression path) of the last failure. */
PLC_API const char* plc_last_error(const plc_context* ctx);
PLC_API const char* plc_last_error_path(const plc_context* ctx);

/* Overrides applied to every job run through the context. */
PLC_API plc_status plc_set_budget(plc_context* ctx, size_t budget);
PLC_API plc_status plc_set_t_cap(plc_context* ctx, double t_cap);
PLC_API plc_status plc_add_t0(plc_context* ctx, double t0);
PLC_API plc_status plc_add_eta(plc_context* ctx, const char* eta);
/* kind: "certificate", "report", "csv" or "events". */
PLC_API plc_status plc_set_output(plc_context* ctx, const char* kind, const char* path);
PLC_API plc_status plc_set_event_callback(plc_context* ctx, plc_event_fn fn, void* user);

/* Runs a job given as JSON text or a file path. On PLC_OK or
 * PLC_NOT_CERTIFIED *out receives a result; free it with plc_result_free. */
PLC_API plc_status plc_run_json(plc_context* ctx, const char* json, plc_result** out);
PLC_API plc_status plc_run_file(plc_context* ctx, const char* path, plc_result** out);
PLC_API plc_status plc_run_example(plc_context* ctx, int example, plc_result** out);

/* Normalized form of a job spec. Free with plc_string_free. */
PLC_API plc_status plc_normalize_json(plc_context* ctx, const char* json, char** out);
/* Embedded canned example spec (1, 2 or 3). Free with plc_string_free. */
PLC_API plc_status plc_example_json(plc_context* ctx, int example, char** out);
PLC_API void plc_string_free(char* s);

/* Quick internal consistency checks; the report lists each check. */
PLC_API plc_status plc_selftest(plc_context* ctx, plc_result** out);

PLC_API int plc_result_exit_code(const plc_result* r);
PLC_API const char* plc_result_report(const plc_result* r);
PLC_API const char* plc_result_certificate(const plc_result* r);
PLC_API const char* plc_result_csv(const plc_result* r);
PLC_API size_t plc_result_row_count(const plc_result* r);
PLC_API plc_status plc_result_row(const plc_result* r, size_t i, plc_row* out);
PLC_API void plc_result_free(plc_result* r);

#ifdef __cplusplus
}
#endif

#endif /* PLCERT_PLCERT_H_ */
