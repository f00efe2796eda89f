#ifndef ARCONV_ARCONV_H
#define ARCONV_ARCONV_H

/*
 * C interface to the arconv library: exact truncated arithmetic functions
 * under the binomial (Cauchy-type) product.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Strings returned through char** are heap-allocated and
 * released with arconv_string_free. On any status other than ARCONV_OK the
 * message is available from arconv_last_error() on the same thread.
 */

#include <stddef.h>

#if defined(ARCONV_BUILDING_LIBRARY)
#define ARCONV_API __attribute__((visibility("default")))
#else
#define ARCONV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arconv_status {
  ARCONV_OK = 0,
  ARCONV_ERR_USAGE = 1,           /* bad argument or parameter */
  ARCONV_ERR_UNKNOWN_NAME = 2,    /* generator, operation or identity not found */
  ARCONV_ERR_PARSE = 3,           /* malformed JSON or b-file text */
  ARCONV_ERR_DEPTH_MISMATCH = 4,  /* operands of different depth */
  ARCONV_ERR_NOT_A_UNIT = 5,      /* f(0) == 0 */
  ARCONV_ERR_NOT_INVERTIBLE = 6,  /* f(0) is a non-constant polynomial */
  ARCONV_ERR_ROOT = 7,            /* f(0) has no rational m-th root */
  ARCONV_ERR_INTERNAL = 8
} arconv_status;

typedef enum arconv_format {
  ARCONV_FORMAT_JSON = 0,
  ARCONV_FORMAT_CSV = 1,
  ARCONV_FORMAT_BFILE_NUMERATOR = 2,
  ARCONV_FORMAT_BFILE_DENOMINATOR = 3
} arconv_format;

typedef enum arconv_compare_result {
  ARCONV_COMPARE_AGREE = 0,
  ARCONV_COMPARE_MISMATCH = 1,
  ARCONV_COMPARE_NO_OVERLAP = 2
} arconv_compare_result;

/* Maximum number of sequences produced by one arconv_op call (decompose). */
#define ARCONV_MAX_OUTPUTS 3

typedef struct arconv_seq arconv_seq;
typedef struct arconv_params arconv_params;

ARCONV_API const char* arconv_version(void);
ARCONV_API const char* arconv_last_error(void);
ARCONV_API const char* arconv_status_name(arconv_status status);
ARCONV_API void arconv_string_free(char* s);

/* ---- parameters: string key/value pairs --------------------------------- */

ARCONV_API arconv_params* arconv_params_new(void);
ARCONV_API void arconv_params_free(arconv_params* params);
ARCONV_API arconv_status arconv_params_set(arconv_params* params, const char* key, const char* value);

/* ---- sequences ----------------------------------------------------------- */

/*
 * Generators: e, I, nu, fact, eps (x), xi1, xi (x, m), bernoulli,
 * bernoulli-poly, euler1, euler-poly, norlund (p, q), faulhaber (n),
 * mobius-bernoulli (n), sigma. A parameter x of "x" means the indeterminate.
 */
ARCONV_API arconv_status arconv_gen(const char* name, const arconv_params* params, size_t depth,
                                    arconv_seq** out);
ARCONV_API arconv_status arconv_seq_from_json(const char* text, arconv_seq** out);
/* values[k] is "p" or "p/q"; the result has depth count - 1. */
ARCONV_API arconv_status arconv_seq_from_values(const char* name, const char* const* values, size_t count,
                                                arconv_seq** out);
ARCONV_API void arconv_seq_free(arconv_seq* seq);

ARCONV_API size_t arconv_seq_depth(const arconv_seq* seq);
ARCONV_API int arconv_seq_is_polynomial(const arconv_seq* seq);
ARCONV_API const char* arconv_seq_name(const arconv_seq* seq);
/* Entry k as "p/q" or a polynomial such as "x^2 - x + 1/6". */
ARCONV_API arconv_status arconv_seq_value(const arconv_seq* seq, size_t k, char** out);
ARCONV_API arconv_status arconv_seq_serialize(const arconv_seq* seq, arconv_format format, char** out);

/*
 * Operations: bullet, cauchy (two inputs); invert, root (m), pow (p, q),
 * transform, invert-transform (one input) produce one output; decompose
 * produces v, w and c. Unused slots of out are set to NULL.
 */
ARCONV_API arconv_status arconv_op(const char* op, const arconv_seq* const* inputs, size_t n_inputs,
                                   const arconv_params* params, arconv_seq* out[ARCONV_MAX_OUTPUTS],
                                   size_t* n_out);

/* ---- identities, tables, b-files ------------------------------------------ */

/* Newline-separated list of identity names. */
ARCONV_API arconv_status arconv_identity_names(char** out);
/* depth < 0 selects the identity's default depth. */
ARCONV_API arconv_status arconv_verify(const char* name, const arconv_params* params, long depth, int* pass,
                                       char** report_json);
ARCONV_API arconv_status arconv_table1(int as_json, int* all_agree, char** out);
/* Compares the numerators (part 0) or denominators (part 1) of seq against b-file text. */
ARCONV_API arconv_status arconv_oeis_compare(const arconv_seq* seq, const char* bfile_text, int part,
                                             arconv_compare_result* result, char** report);

#ifdef __cplusplus
}
#endif

#endif /* ARCONV_ARCONV_H */
