/* Copyright (c) 2026 The padicert authors
 *
 * Licensed under the Apache License, Version 2.0 (see
 * LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
 *
 * C interface to the certification library.  All functions return a
 * status code; outputs are written through pointers.  Strings returned
 * through char** are heap-allocated and must be released with
 * pcert_string_free.  Rational arguments are decimal "num/den" (or
 * plain integer) strings.  On failure, pcert_last_error() returns a
 * thread-local description valid until the next failing call on the
 * same thread.
 */

#ifndef PADICERT_H
#define PADICERT_H

#ifdef __cplusplus
extern "C" {
#endif

#define PCERT_OK 0
#define PCERT_EINVAL 2     /* bad input: wrong curve, torsion, parse, ... */
#define PCERT_EPRECISION 3 /* verdict unresolved at the precision cap */
#define PCERT_EINTERNAL 4  /* broken invariant inside the library */

const char* pcert_version(void);
const char* pcert_last_error(void);
void pcert_string_free(char* s);

/* |E(F_q)| for y^2 = x^3 + Ax + B over F_q, q an odd prime power. */
int pcert_count_points(long a, long b, long q, long* out);

/* The Frobenius factor of a split prime in the CM order of radicand D.
 * With has_trace = 0 only D = -3 is accepted and the primary Eisenstein
 * prime above p is returned.  The result is a JSON object with the
 * factor, its conjugate, norm, and trace.
 */
int pcert_split_prime(long d, long p, int has_trace, long trace,
                      char** out_json);

/* The seven 7-torsion points of E_n : y^2 = x^3 - 2 + 7n over Q_7 as a
 * JSON object; precision <= 0 selects the default.
 */
int pcert_torsion_points(long long n, long precision, char** out_json);

/* Filtration level of the formal 7-torsion generator of E_n over
 * Q_7(zeta_7); the certified value is 1.
 */
int pcert_filtration_level(long long n, long precision, long* out_level);

/* Good-point certification of (x, y) on E_n.  The handle owns the full
 * certificate; query or serialize it, then free it.
 */
typedef struct pcert_certificate pcert_certificate;

int pcert_certify(long long n, const char* x, const char* y, long precision,
                  pcert_certificate** out);
void pcert_certificate_free(pcert_certificate* cert);
int pcert_certificate_json(const pcert_certificate* cert, char** out_json);
int pcert_certificate_good(const pcert_certificate* cert, int* out);
int pcert_certificate_lambda(const pcert_certificate* cert, long* out);
int pcert_certificate_x_valuation(const pcert_certificate* cert, long* out);
int pcert_certificate_stable(const pcert_certificate* cert, int* out);
/* Recomputes the level over Q_7(zeta_7); requires a Good certificate. */
int pcert_certificate_restrict_level(const pcert_certificate* cert,
                                     long* out);

/* Family sweep over n in [n_lo, n_hi].  dataset_path may be NULL; height
 * 0 disables the naive search; jobs <= 0 selects one thread.  out_json
 * and out_table may each be NULL when not wanted.
 */
int pcert_sweep(long long n_lo, long long n_hi, const char* dataset_path,
                long height, long precision, int jobs, char** out_json,
                char** out_table);

#ifdef __cplusplus
}
#endif

#endif
