/*
 * freelip - exact computations on finite pointed metric spaces and their
 * Lipschitz-free space norms: Kantorovich-Rubinstein norms with transport
 * plan / dual witness certificates, long-trapezoid moduli, octahedrality
 * indices, differentiability checks, example-space generators and metric
 * distortion.
 *
 * All structured inputs and outputs cross this boundary as JSON text; exact
 * rationals are encoded as "p/q" strings. Handles are opaque; every fallible
 * call reports through flp_status and leaves a readable message on the
 * context. The library is thread-compatible: distinct contexts and spaces may
 * be used concurrently, a single context must not be shared between threads.
 */
#ifndef FREELIP_H
#define FREELIP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum flp_status {
  FLP_OK = 0,
  FLP_ERROR_DOMAIN = 1,   /* valid request, mathematically rejected input */
  FLP_ERROR_FORMAT = 2,   /* malformed JSON or schema violation */
  FLP_ERROR_ARGUMENT = 3, /* null pointers, bad handles, bad indices */
  FLP_ERROR_INTERNAL = 4
} flp_status;

typedef struct flp_ctx flp_ctx;
typedef struct flp_space flp_space;

flp_ctx* flp_ctx_new(void);
void flp_ctx_free(flp_ctx* ctx);

/* Message and structured JSON payload of the last failed call on ctx. The
 * returned pointers stay valid until the next call on the same context. */
const char* flp_last_error(const flp_ctx* ctx);
const char* flp_last_error_json(const flp_ctx* ctx);

/* Worker threads for the exhaustive pair searches (<=0 means 1). Results are
 * independent of the worker count. */
void flp_set_jobs(flp_ctx* ctx, int jobs);

const char* flp_version(void);

/* Frees any string returned through an out parameter of this API. */
void flp_string_free(char* s);

/* ---- spaces ---------------------------------------------------------- */

flp_status flp_space_parse(flp_ctx* ctx, const char* space_json,
                           flp_space** out);
flp_status flp_space_to_json(flp_ctx* ctx, const flp_space* space, char** out);
/* Gallery generators; params like {"name":"ejenega","k":5}. The result JSON
 * is a space document (plus coordinates for "ellp"). */
flp_status flp_generate(flp_ctx* ctx, const char* params_json, char** out);

flp_status flp_space_scale(flp_ctx* ctx, const flp_space* space,
                           const char* factor, flp_space** out);
flp_status flp_space_restrict(flp_ctx* ctx, const flp_space* space,
                              const int* subset, size_t subset_len,
                              flp_space** out);
flp_status flp_space_l1_sum(flp_ctx* ctx, const flp_space* a,
                            const flp_space* b, flp_space** out);

int flp_space_size(const flp_space* space);
int flp_space_base(const flp_space* space);
/* Point index for a display name; -1 when absent. */
int flp_space_point(const flp_space* space, const char* name);

void flp_space_free(flp_space* space);

/* ---- operations (JSON out) ------------------------------------------ */

/* Free-space norm of the measure {"coeffs":{...}}; with_certificate adds the
 * optimal transport plan and the dual Lipschitz witness. */
flp_status flp_norm(flp_ctx* ctx, const flp_space* space,
                    const char* measure_json, int with_certificate,
                    char** out);

/* Long-trapezoid ratio/modulus of the subset, with the optimal witness pair
 * and its worst trapezoid. */
flp_status flp_ltp(flp_ctx* ctx, const flp_space* space, const int* subset,
                   size_t subset_len, char** out);

/* Modulus of every 2-point subset. */
flp_status flp_profile(flp_ctx* ctx, const flp_space* space, char** out);

/* Octahedrality index of a family of measures (JSON array of measure
 * documents). */
flp_status flp_oct(flp_ctx* ctx, const flp_space* space,
                   const char* measures_json, char** out);

/* LTP ratio vs octahedrality index of the subset's molecule family, with the
 * two-sided comparison 2R <= OCT <= 1+R. */
flp_status flp_chain(flp_ctx* ctx, const flp_space* space, const int* subset,
                     size_t subset_len, char** out);

/* Differentiability of the free-space norm at the measure, which must be a
 * convex combination of molecules with a common apex. */
flp_status flp_frechet(flp_ctx* ctx, const flp_space* space,
                       const char* measure_json, char** out);

/* Two-point failure extraction at level eps ("p/q"). */
flp_status flp_ramsey(flp_ctx* ctx, const flp_space* space, const int* subset,
                      size_t subset_len, const char* eps, char** out);

/* Witness-pair Lipschitz extension of {"values":{...}} given on the subset:
 * (1+eps)-Lipschitz on all of M with a large increment from u to v. */
flp_status flp_extend(flp_ctx* ctx, const flp_space* space, const int* subset,
                      size_t subset_len, const char* values_json, int u, int v,
                      const char* eps, char** out);

/* Bi-Lipschitz distortion of the bijection a[i] -> b[map[i]]; map NULL means
 * identity. */
flp_status flp_distortion(flp_ctx* ctx, const flp_space* a, const flp_space* b,
                          const int* map, size_t map_len, char** out);

/* Reruns the bundled example computations; returns a JSON array of
 * {"name", "pass", "detail"} rows, deterministic across runs and worker
 * counts. */
flp_status flp_replicate(flp_ctx* ctx, char** out);

#ifdef __cplusplus
}
#endif

#endif /* FREELIP_H */
