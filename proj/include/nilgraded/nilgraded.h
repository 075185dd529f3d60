#ifndef NILGRADED_H
#define NILGRADED_H

/* C interface to the nilgraded engine.
 *
 * Algebras are opaque handles. Every call returns an nlg_status; on failure
 * nlg_last_error() describes the problem (thread-local, valid until the next
 * call on the same thread). Strings returned through out-parameters are
 * heap-allocated and must be released with nlg_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define NLG_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define NLG_API __attribute__((visibility("default")))
#else
#  define NLG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nlg_status {
  NLG_OK = 0,
  NLG_INPUT_ERROR = 1,        /* malformed text, bad indices, unknown model id */
  NLG_PARAMETER_ERROR = 2,    /* model bounds violated */
  NLG_PRECONDITION_ERROR = 3, /* operation not applicable (e.g. no grading) */
  NLG_NOT_NILPOTENT = 4,
  NLG_SYNTAX_ERROR = 5,       /* structure-equation text; see line/column */
  NLG_INTERNAL_ERROR = 6
} nlg_status;

typedef struct nlg_algebra nlg_algebra;

NLG_API const char* nlg_last_error(void);
/* Position of the last syntax error, 0 when not applicable. */
NLG_API size_t nlg_last_error_line(void);
NLG_API size_t nlg_last_error_column(void);
NLG_API const char* nlg_status_name(nlg_status status);
NLG_API void nlg_string_free(char* s);

NLG_API nlg_status nlg_algebra_from_mc(const char* text, nlg_algebra** out);
NLG_API nlg_status nlg_algebra_from_json(const char* text, nlg_algebra** out);
/* Model ids: "L(7;1,3)", "Q(4;)", "D(5;1,2)", "E(4;1)", "VL(9)", "VQ(5)". */
NLG_API nlg_status nlg_model_build(const char* model_id, nlg_algebra** out);
NLG_API void nlg_algebra_free(nlg_algebra* g);

NLG_API size_t nlg_algebra_dim(const nlg_algebra* g);
NLG_API nlg_status nlg_algebra_to_json(const nlg_algebra* g, char** out);
NLG_API nlg_status nlg_algebra_to_mc(const nlg_algebra* g, char** out);

/* JSON array of {"triple":[i,j,k],"defect":[...]} (1-based). */
NLG_API nlg_status nlg_jacobi_json(const nlg_algebra* g, char** out);
/* Lower central series, nilindex, center, characteristic sequence, split flag. */
NLG_API nlg_status nlg_invariants_json(const nlg_algebra* g, uint64_t seed, char** out);
/* weights may be NULL to use the grading attached to g. *ok is 1 on pass;
 * *reason (may be NULL) receives the failure reason or an empty string. */
NLG_API nlg_status nlg_graded_certificate(const nlg_algebra* g, const int* weights, size_t count, int* ok,
                                          char** reason);
NLG_API nlg_status nlg_h2_json(const nlg_algebra* g, char** out);
/* max_weight <= 0 selects nilindex + 1. Needs an attached or given grading. */
NLG_API nlg_status nlg_extensions_json(const nlg_algebra* g, const int* weights, size_t count, int max_weight,
                                       uint64_t seed, char** out);
NLG_API nlg_status nlg_enumerate_json(size_t dim, char** out);

/* Runs the full verification pipeline. *passed is 1 iff every check passed.
 * corrupt_model may be NULL; otherwise that model is perturbed (test hook). */
NLG_API nlg_status nlg_verify_paper(size_t max_dim, uint64_t seed, int as_json, const char* corrupt_model,
                                    int* passed, char** report);

NLG_API uint64_t nlg_default_seed(void);

#ifdef __cplusplus
}
#endif

#endif
