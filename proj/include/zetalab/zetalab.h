// Copyright 2026 The zetalab Authors
//
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

/*
 * C interface to zetalab. All analytic values are certified midpoint-radius
 * enclosures; experiment functions return their records serialized as
 * JSON lines (default) or CSV in a string owned by the caller, released with
 * zl_string_free().
 */

#ifndef ZETALAB_ZETALAB_H
#define ZETALAB_ZETALAB_H

#include <stddef.h>

#if defined(ZETALAB_BUILDING_LIBRARY)
#define ZL_API __attribute__((visibility("default")))
#else
#define ZL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct zl_context zl_context;

typedef enum zl_status {
    ZL_OK = 0,
    ZL_ERR_DOMAIN = 1,          /* argument outside the operation's domain */
    ZL_ERR_ZERO_STRADDLE = 2,   /* division by a ball containing zero */
    ZL_ERR_UNSUPPORTED = 3,     /* unsupported character modulus */
    ZL_ERR_PRECISION = 4,       /* result not certifiable; see zl_precision_hint */
    ZL_ERR_CHECK_FAILED = 5,    /* a certified check came out false */
    ZL_ERR_INVALID_ARGUMENT = 6,
    ZL_ERR_INTERNAL = 7
} zl_status;

typedef enum zl_format { ZL_FORMAT_JSONL = 0, ZL_FORMAT_CSV = 1 } zl_format;

typedef enum zl_const_kind { ZL_CONST_ZETA = 0, ZL_CONST_BETA = 1, ZL_CONST_DEDEKIND = 2 } zl_const_kind;

ZL_API const char* zl_version(void);
ZL_API const char* zl_status_name(zl_status status);

/* working_bits >= 64; 0 selects the default (256). */
ZL_API zl_status zl_context_new(long working_bits, zl_context** out);
ZL_API void zl_context_free(zl_context* ctx);
ZL_API long zl_context_bits(const zl_context* ctx);
ZL_API zl_status zl_context_set_format(zl_context* ctx, zl_format format);

/* Message and precision hint of the last failed call on this context. */
ZL_API const char* zl_last_error(const zl_context* ctx);
ZL_API long zl_precision_hint(const zl_context* ctx);

ZL_API void zl_string_free(char* s);

/* Scalar helpers for the mod-4 character. */
ZL_API zl_status zl_chi4(unsigned long long n, int* out);
ZL_API zl_status zl_r_divisor(unsigned long long n, long* out);
ZL_API zl_status zl_r_lattice(unsigned long long n, unsigned long long* out);

/* Decimal midpoint/radius strings of a constant, plus the certified rendering. */
ZL_API zl_status zl_const(zl_context* ctx, zl_const_kind kind, long s, int digits, char** out);

/* Rows (n, r_divisor, r_lattice) for n <= max_n. With check_lattice set, a
 * failed identity 4 r_divisor = r_lattice yields ZL_ERR_CHECK_FAILED (the rows
 * are still returned) and *mismatches counts the failures. */
ZL_API zl_status zl_rn(zl_context* ctx, unsigned long long max_n, int check_lattice, char** out,
                       size_t* mismatches);

ZL_API zl_status zl_lemma6(zl_context* ctx, long s, const unsigned long long* xs, size_t n_xs,
                           char** out);

/* target: pi, zeta, beta, dedekind, inv-beta, inv-zeta, or a rational "a/b". */
ZL_API zl_status zl_cf(zl_context* ctx, const char* target, long s, size_t terms, char** out);

/* c4 is a decimal integer string (NULL selects 1). */
ZL_API zl_status zl_seq17(zl_context* ctx, long s, size_t depth_m, size_t depth_n, const char* c4,
                          long m0, char** out);

ZL_API zl_status zl_eq10(zl_context* ctx, long s, size_t n_count, const unsigned long long* xs,
                         size_t n_xs, char** out);

ZL_API zl_status zl_case1(zl_context* ctx, long s, const char* hypothesis, long m, size_t n_count,
                          char** out);

/* xs may be NULL; when given, the mirrored summatory table is appended. */
ZL_API zl_status zl_beta_mirror(zl_context* ctx, long s, size_t depth, const char* c4, long m0,
                                const unsigned long long* xs, size_t n_xs, char** out);

ZL_API zl_status zl_euler_product(zl_context* ctx, long s, unsigned long long prime_bound,
                                  char** out);

/* suite: "all" or comma-separated criterion ids. Writes one record per
 * criterion; *failed and *indeterminate count the outcomes. */
ZL_API zl_status zl_verify(zl_context* ctx, const char* suite, char** out, int* failed,
                           int* indeterminate);

#ifdef __cplusplus
}
#endif

#endif /* ZETALAB_ZETALAB_H */
