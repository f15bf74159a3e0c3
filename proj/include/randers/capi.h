#ifndef RANDERS_CAPI_H
#define RANDERS_CAPI_H

/* C API of the Randers connection toolkit.
 *
 * A randers_run is an opaque handle holding a loaded run configuration
 * (field, sampling parameters, evaluation points, curves). The four command
 * entry points produce a JSON report string and a status code:
 *
 *   0  success (generalized Berwald or Riemannian)
 *   1  config error (bad JSON, bad expression, unknown example)
 *   2  not a valid Randers metric (some sampled |beta#| >= 1)
 *   3  not generalized Berwald (|beta#| not constant)
 *   4  numerical failure (metric not positive definite, expression domain
 *      error, curve leaving the domain box, failed verification)
 *
 * Strings returned through out-parameters are heap-allocated; release them
 * with randers_string_free. All functions are thread-compatible: distinct
 * handles may be used concurrently, a single handle must not be mutated
 * while another thread runs a command on it.
 */

#include <stdint.h>

#if defined(_WIN32)
#define RANDERS_API __declspec(dllexport)
#else
#define RANDERS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum randers_status {
  RANDERS_OK = 0,
  RANDERS_ERR_CONFIG = 1,
  RANDERS_ERR_INVALID_RANDERS = 2,
  RANDERS_ERR_NOT_BERWALD = 3,
  RANDERS_ERR_NUMERICAL = 4
} randers_status;

typedef struct randers_run randers_run;

RANDERS_API const char* randers_version(void);

/* Built-in example catalog. */
RANDERS_API int randers_example_count(void);
RANDERS_API const char* randers_example_name(int index); /* NULL out of range */

/* Create a run from config JSON text or a built-in example. On failure
 * returns NULL and, when errmsg is non-NULL, stores an error message. */
RANDERS_API randers_run* randers_run_from_json(const char* json_text, char** errmsg);
RANDERS_API randers_run* randers_run_from_example(const char* name, char** errmsg);
RANDERS_API void randers_run_free(randers_run* run);

/* Overrides applied after loading. */
RANDERS_API void randers_run_set_seed(randers_run* run, uint64_t seed);
RANDERS_API void randers_run_set_samples(randers_run* run, int samples);
RANDERS_API void randers_run_set_steps(randers_run* run, int steps);
RANDERS_API randers_status randers_run_clear_points(randers_run* run);
RANDERS_API randers_status randers_run_add_point(randers_run* run, const double* coords,
                                                 int dimension, char** errmsg);

/* Commands. On success (and for statuses 2/3, which still carry a verdict)
 * *report_json receives the JSON report. On config/numerical errors the
 * report may be NULL and *errmsg carries the message. */
RANDERS_API randers_status randers_run_check(const randers_run* run, char** report_json,
                                             char** errmsg);
RANDERS_API randers_status randers_run_connection(const randers_run* run,
                                                  char** report_json, char** errmsg);
RANDERS_API randers_status randers_run_transport(const randers_run* run,
                                                 char** report_json, char** errmsg);
RANDERS_API randers_status randers_run_verify(const randers_run* run, char** report_json,
                                              char** errmsg);

RANDERS_API void randers_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RANDERS_CAPI_H */
