/* Copyright 2026 The logderiv Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
 // C interface to the logderiv engine. All handles are opaque; every call that can
 // fail returns an ld_status and leaves a message for ld_last_error() on the
 // calling thread. Strings returned through char** are owned by the caller and
 // released with ld_string_free.


#ifndef LOGDERIV_H
#define LOGDERIV_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define LD_API __attribute__((visibility("default")))
#else
#define LD_API
#endif

typedef enum ld_status {
    LD_OK = 0,
    LD_ERR_PARSE = 1,    /* malformed expression, derivation spec or file */
    LD_ERR_USAGE = 2,    /* invalid argument: null handle, degree out of range, ... */
    LD_ERR_MATH = 3,     /* mathematical precondition failed */
    LD_ERR_INTERNAL = 4
} ld_status;

typedef struct ld_engine ld_engine;
typedef struct ld_element ld_element;

LD_API const char* ld_version(void);
LD_API const char* ld_last_error(void);
/* Column of the last parse error (1-based), 0 when unknown. */
LD_API int ld_last_error_column(void);
LD_API void ld_string_free(char* s);

/* Highest truncation order accepted: LOGDERIV_MAX_DEGREE when set, 12 otherwise. */
LD_API int ld_max_degree_cap(void);

LD_API ld_status ld_engine_new(int alphabet, int max_degree, ld_engine** out);
LD_API void ld_engine_free(ld_engine* engine);
LD_API int ld_engine_alphabet(const ld_engine* engine);
LD_API int ld_engine_max_degree(const ld_engine* engine);

/* Parses and evaluates an expression, truncated at the engine's max degree. */
LD_API ld_status ld_parse(const ld_engine* engine, const char* text, ld_element** out);
/* Parses and prints back an expression without evaluating it. */
LD_API ld_status ld_expr_normalize(const ld_engine* engine, const char* text, char** out);
LD_API void ld_element_free(ld_element* element);
LD_API ld_status ld_element_text(const ld_element* element, char** out);
/* {"truncation": N, "terms": [{"coeff": "p/q", "word": "ab"}, ...]} */
LD_API ld_status ld_element_json(const ld_element* element, char** out);
LD_API int ld_element_equal(const ld_element* a, const ld_element* b);
LD_API int ld_element_is_primitive(const ld_element* element);

/* derivation: "Y", "letter:<c>" or "diag:<q1>,<q2>,..." */
LD_API ld_status ld_dynkin(const ld_engine* engine, const ld_element* a, const char* derivation, ld_element** out);
/* mode: "classical" or "letter:<c>" */
LD_API ld_status ld_project(const ld_engine* engine, const ld_element* a, const char* mode, ld_element** out);
/* phi = 1 + R(phi x) with R the inverse of delta (NULL means Y). */
LD_API ld_status ld_atkinson(const ld_engine* engine, const ld_element* x, int order, const char* delta,
                             ld_element** out);
/* sum_k R_d^[k](x) and phi^{-1} d(phi), with R the inverse of delta (NULL means Y). */
LD_API ld_status ld_logderiv(const ld_engine* engine, const ld_element* x, int order, const char* d,
                             const char* delta, ld_element** sum_out, ld_element** direct_out);
LD_API ld_status ld_magnus_forward(const ld_engine* engine, const ld_element* l, int order, const char* delta,
                                   ld_element** out);
LD_API ld_status ld_magnus_solve(const ld_engine* engine, const ld_element* h, int order, const char* delta,
                                 ld_element** out);
/* Group-like element g with D(g) = l. */
LD_API ld_status ld_dinv(const ld_engine* engine, const ld_element* l, int order, ld_element** out);

/* Magnus relation check for a matrix file; *holds is 1 when all checks pass. */
LD_API ld_status ld_ode_check(const char* matrix_json, int order, int* holds, char** text_out, char** json_out);

typedef void (*ld_verify_callback)(const char* suite, const char* property, int passed, const char* detail,
                                   void* user);
/* suite: all, core, dynkin, rb, magnus or ode. *failed receives the number of failing properties. */
LD_API ld_status ld_verify(const char* suite, int max_degree, uint64_t seed, ld_verify_callback callback,
                           void* user, int* failed);

/* Validates a presentation file and returns it re-serialized. */
LD_API ld_status ld_presentation_check(const char* json, char** out);
/* convention: "graduation" or "xp" */
LD_API ld_status ld_witt_presentation_json(int n, const char* convention, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LOGDERIV_H */
