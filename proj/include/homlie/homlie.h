#ifndef HOMLIE_H
#define HOMLIE_H

/* C interface to the Hom-Lie library. Inputs are JSON documents, results
 * are JSON report strings owned by the caller (release with
 * hl_string_free). A report has the shape
 *
 *   {"command": ..., "pass": bool, "verdicts": [{"name", "pass", ...}], "payload": {...}}
 *
 * and "pass" is true exactly when every verdict passes. On a non-OK status
 * no report is produced and hl_last_error() describes the failure. */

#include <stddef.h>

#if defined(_WIN32)
#define HL_API __declspec(dllexport)
#else
#define HL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hl_status {
  HL_OK = 0,
  HL_ERR_PARSE,
  HL_ERR_MODE,
  HL_ERR_DIMENSION,
  HL_ERR_SINGULAR,
  HL_ERR_NOT_REGULAR,
  HL_ERR_NOT_MULTIPLICATIVE,
  HL_ERR_NOT_AUTOMORPHISM,
  HL_ERR_NOT_DERIVATION,
  HL_ERR_BAD_PARAMETER,
  HL_ERR_NOT_A_GROUP,
  HL_ERR_COMPLEX_NOT_CLOSED,
  HL_ERR_NULL_ARGUMENT,
  HL_ERR_INTERNAL
} hl_status;

typedef struct hl_algebra hl_algebra;
typedef struct hl_group hl_group;

HL_API const char* hl_status_name(hl_status status);
/* Message of the last failure on the calling thread ("" if none). */
HL_API const char* hl_last_error(void);
HL_API void hl_string_free(char* s);

HL_API hl_status hl_algebra_from_json(const char* json, hl_algebra** out);
HL_API void hl_algebra_free(hl_algebra* alg);
/* Axiom report: skew, multiplicative, hom_jacobi, regular. */
HL_API hl_status hl_algebra_check(const hl_algebra* alg, char** report);
/* Cohomology dimensions up to max_degree (negative: dim g). rep is
 * "adjoint" or "trivial"; when rep_json is non-NULL it is used instead and
 * alg may be NULL. */
HL_API hl_status hl_cohomology(const hl_algebra* alg, const char* rep, const char* rep_json, int max_degree,
                               char** report);
HL_API hl_status hl_derivations(const hl_algebra* alg, char** report);

/* Matrices are Matrix JSON documents. */
HL_API hl_status hl_hexp(const char* beta_json, const char* a_json, double t, char** report);
HL_API hl_status hl_verify_commutator(const char* beta_json, const char* a_json, const char* b_json, double step,
                                      char** report);

HL_API hl_status hl_group_from_json(const char* json, hl_group** out);
HL_API void hl_group_free(hl_group* g);
HL_API hl_status hl_group_check(const hl_group* g, char** report);
/* f: G -> H given as {"map": [...]}. */
HL_API hl_status hl_group_weakhom(const hl_group* g, const hl_group* h, const char* map_json, char** report);
HL_API hl_status hl_group_adaction(const hl_group* g, char** report);

/* Dispatches on the document type (algebra or group) like the CLI check. */
HL_API hl_status hl_check_document(const char* json, char** report);

#ifdef __cplusplus
}
#endif

#endif
