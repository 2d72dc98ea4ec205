/* C interface to the skew brace engine.
 *
 * Handles are opaque. Every call returns an sb_status; on failure the
 * message is available from sb_last_error() on the calling thread.
 * Strings returned through char** are owned by the caller and released
 * with sb_string_free. Elements are indices 0..n-1 with identity 0.
 */
#ifndef SKEWBRACE_H
#define SKEWBRACE_H

#include <stddef.h>
#include <stdint.h>

#if defined(SKEWBRACE_BUILDING)
#define SB_API __attribute__((visibility("default")))
#else
#define SB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sb_brace sb_brace;
typedef struct sb_group sb_group;

typedef enum sb_status {
  SB_OK = 0,
  SB_E_INVALID_ARGUMENT,
  SB_E_PARSE,
  SB_E_IO,
  SB_E_NOT_ASSOCIATIVE,
  SB_E_NO_IDENTITY_AT_ZERO,
  SB_E_NOT_LATIN_SQUARE,
  SB_E_DOT_NOT_GROUP,
  SB_E_CIRC_NOT_GROUP,
  SB_E_BRACE_AXIOM_FAILS,
  SB_E_NOT_NORMAL,
  SB_E_NOT_CLOSED,
  SB_E_NOT_IDEAL,
  SB_E_NOT_BRACE_HOM,
  SB_E_ARITY_MISMATCH,
  SB_E_NOT_IN_CLASS_IN,
  SB_E_BAD_IDEALS,
  SB_E_DIAGRAM_FAILS,
  SB_E_WITNESS_INVALID,
  SB_E_NOT_ABELIAN_COEFFICIENTS,
  SB_E_IDENTITY_FAILS,
  SB_E_NOT_INSIDE_ANNIHILATOR,
  SB_E_MODULUS_TOO_SMALL,
  SB_E_QUOTIENT_MISMATCH,
  SB_E_HYPOTHESIS_UNMET,
  SB_E_OVERFLOW,
  SB_E_BUDGET_EXCEEDED,
  SB_E_INTERNAL
} sb_status;

SB_API const char* sb_version(void);
SB_API const char* sb_status_name(sb_status s);
SB_API const char* sb_last_error(void);
SB_API void sb_string_free(char* s);

/* Braces */
SB_API sb_status sb_brace_parse(const char* text, sb_brace** out);
SB_API sb_status sb_brace_load(const char* path, sb_brace** out);
SB_API sb_status sb_brace_from_tables(size_t n, const uint32_t* dot, const uint32_t* circ, sb_brace** out);
SB_API sb_status sb_brace_to_text(const sb_brace* a, char** out);
SB_API sb_status sb_brace_save(const sb_brace* a, const char* path);
SB_API void sb_brace_free(sb_brace* a);
SB_API size_t sb_brace_order(const sb_brace* a);
SB_API uint32_t sb_brace_dot(const sb_brace* a, uint32_t x, uint32_t y);
SB_API uint32_t sb_brace_circ(const sb_brace* a, uint32_t x, uint32_t y);

/* series: "all", "skeleton" or a series name (ann, gamma, gammabar, left,
 * right, strong, starsoluble, L, K); I_n flags for n <= max_n. */
SB_API sb_status sb_brace_info_json(const sb_brace* a, const char* series, unsigned max_n, char** out_json);

/* word over s (*), S (*bar), g (gamma), G (gammabar); nargs = degree + 1 */
SB_API sb_status sb_word_eval(const sb_brace* a, const char* word, const uint32_t* args, size_t nargs, uint32_t* out);

/* Isoclinism; *found is 0 or 1, the witness JSON is set only when found. */
SB_API sb_status sb_isoclinic(const sb_brace* a, const sb_brace* b, unsigned n, int* found, char** witness_json);
SB_API sb_status sb_verify_isoclinism(const sb_brace* a, const sb_brace* b, const char* witness_json);
SB_API sb_status sb_fiber_product(const sb_brace* a, const sb_brace* b, const char* witness_json, sb_brace** out);
SB_API sb_status sb_embed(const sb_brace* a, const sb_brace* b, const char* witness_json, sb_brace** out,
                          char** report_json);

/* Cohomology; coeff like "Z/2 x Z/4". */
SB_API sb_status sb_h2_json(const sb_brace* k, const char* coeff, char** out_json);
SB_API sb_status sb_extend(const sb_brace* k, const char* cocycle_json, sb_brace** out);
/* modulus 0 picks the default */
SB_API sb_status sb_transgress_json(const sb_brace* g, const uint32_t* ideal, size_t count, int64_t modulus,
                                    char** out_json);

/* Groups */
SB_API sb_status sb_lambda_group(const sb_brace* a, sb_group** out);
SB_API sb_status sb_group_parse(const char* text, sb_group** out);
SB_API sb_status sb_group_to_text(const sb_group* g, char** out);
SB_API size_t sb_group_order(const sb_group* g);
SB_API void sb_group_free(sb_group* g);

/* Census: summary JSON and, when rows_jsonl is not NULL, one JSON line per brace. */
SB_API sb_status sb_census(unsigned order, int allow_long, unsigned threads, char** summary_json, char** rows_jsonl);

#ifdef __cplusplus
}
#endif

#endif
