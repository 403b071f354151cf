// Copyright 2026 The sjf Authors
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

/* C interface to the sjf library.
 *
 * Objects are opaque handles released with the matching _free call. Every
 * function returns an sjf_status; on failure sjf_last_error() describes the
 * problem (thread-local, valid until the next call on the same thread).
 * Strings returned through char** are owned by the caller and released with
 * sjf_string_free. Rationals and matrices are passed as text ("3/7",
 * "[[1,1/2],[1/2,1]]").
 */

#ifndef SJF_SJF_H_
#define SJF_SJF_H_

#include <stddef.h>

#if defined(SJF_BUILDING_LIBRARY)
#define SJF_API __attribute__((visibility("default")))
#else
#define SJF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SJF_OK = 0,
  SJF_E_PARSE = 1,
  SJF_E_DOMAIN = 2,
  SJF_E_POLE = 3,
  SJF_E_INVARIANT = 4,
  SJF_E_CONVERGENCE = 5,
  SJF_E_INCONSISTENT = 6,
  SJF_E_USAGE = 7,
  SJF_E_INTERNAL = 8
} sjf_status;

typedef enum { SJF_FORMAT_TEXT = 0, SJF_FORMAT_RECORDS = 1 } sjf_format;

typedef struct {
  long precision;        /* bits */
  const char* truncation; /* rational cap, or NULL for the input's own */
  long cutoff;           /* Dirichlet/Euler cutoff */
  double tolerance;      /* relative */
  sjf_format format;
} sjf_options;

/* Defaults: precision from SJF_PRECISION (else 128), cutoff 10000,
 * tolerance 1e-10, text format. */
SJF_API void sjf_options_default(sjf_options* opt);

SJF_API const char* sjf_last_error(void);
SJF_API const char* sjf_status_name(sjf_status s);
SJF_API void sjf_string_free(char* s);
SJF_API const char* sjf_version(void);

/* Corpus files. */
typedef struct sjf_corpus sjf_corpus;

SJF_API sjf_status sjf_corpus_load(const char* path, sjf_corpus** out);
SJF_API sjf_status sjf_corpus_parse(const char* text, sjf_corpus** out);
SJF_API sjf_status sjf_corpus_write(const sjf_corpus* c, char** out_text);
SJF_API sjf_status sjf_corpus_save(const sjf_corpus* c, const char* path);
/* "jacobi", "nearly-hol", "theta-components", "eigenvalues" or "satake". */
SJF_API const char* sjf_corpus_kind(const sjf_corpus* c);
SJF_API void sjf_corpus_free(sjf_corpus* c);

/* Theta series of the even lattice with Gram matrix q restricted to the
 * columns of `lattice`, characteristic h, truncated at trace cap. */
SJF_API sjf_status sjf_theta(const char* q, const char* lattice, const char* h, const char* cap,
                             sjf_corpus** out);
SJF_API sjf_status sjf_decompose(const sjf_corpus* f, sjf_corpus** out);
/* cap NULL keeps the components' own truncation. */
SJF_API sjf_status sjf_reconstruct(const sjf_corpus* components, const char* cap,
                                   sjf_corpus** out);
SJF_API sjf_status sjf_check_property_a(const sjf_corpus* f, const sjf_options* opt,
                                        char** report, int* pass);
/* Holomorphic projection; a jacobi input is treated as nearly holomorphic of
 * degree 0. */
SJF_API sjf_status sjf_project(const sjf_corpus* f, sjf_corpus** out);
/* Pairing of a cusp form with the Poincare series of index (t, r). */
SJF_API sjf_status sjf_pair(const sjf_corpus* f, const char* t, const char* r,
                            const sjf_options* opt, char** report);
/* Reproducing-kernel check at `points` deterministic test points. */
SJF_API sjf_status sjf_kernel_check(const sjf_corpus* f, int points, const sjf_options* opt,
                                    char** report, int* pass);
/* bold-Lambda at sigma, the normalized value against the Petersson norm
 * (text, parsed as a decimal or rational), and its rational recognition. */
SJF_API sjf_status sjf_lvalue(const sjf_corpus* table, long sigma, const char* norm,
                              const char* max_height, int allow_outside, const sjf_options* opt,
                              char** report);
/* what is one of "gamma", "c-sk", "e-sigma", "normalizer", "kernel"; params is a
 * space-separated key=value list. */
SJF_API sjf_status sjf_constants(const char* what, const char* params, const sjf_options* opt,
                                 char** report);
/* Runs the identity grids; *all_pass reports whether every check passed. */
SJF_API sjf_status sjf_verify(const sjf_options* opt, char** report, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* SJF_SJF_H_ */
