/* Compiled as C to keep the public header valid C. */

#include "arconv/arconv.h"

#include <string.h>

int arconv_c_smoke(void) {
  arconv_params* p = arconv_params_new();
  arconv_seq* b = NULL;
  arconv_seq* out[ARCONV_MAX_OUTPUTS] = {NULL, NULL, NULL};
  const arconv_seq* in[1];
  size_t n_out = 0;
  char* text = NULL;
  int ok = 1;

  if (!p) return 0;
  ok = ok && arconv_gen("bernoulli", p, 4, &b) == ARCONV_OK;
  in[0] = b;
  ok = ok && arconv_op("invert", in, 1, p, out, &n_out) == ARCONV_OK && n_out == 1;
  ok = ok && arconv_seq_value(out[0], 2, &text) == ARCONV_OK && strcmp(text, "1/3") == 0;
  arconv_string_free(text);
  ok = ok && arconv_gen("nope", p, 4, &out[1]) == ARCONV_ERR_UNKNOWN_NAME;
  ok = ok && strlen(arconv_last_error()) > 0;

  arconv_seq_free(out[0]);
  arconv_seq_free(b);
  arconv_params_free(p);
  return ok;
}
