/*
 * C interface to the ebound library: exact Maclaurin coefficients of
 * (1+x)^(1/x), partial-sum enclosures, and Keller-type expansions.
 *
 * Conventions
 *   - Every fallible call returns an eb_status; EB_OK is zero.
 *   - On failure eb_last_error() describes the problem (thread-local, valid
 *     until the next call on the same thread).
 *   - Strings returned through char** are owned by the caller and released
 *     with eb_string_free().
 *   - Handles (eb_interval, eb_series, ...) are released with their
 *     matching *_free function; passing NULL to a *_free function is a no-op.
 *   - Rationals cross the boundary as text: optional '-', decimal integer,
 *     optional '/' and positive decimal integer ("-7/16", "3").
 */
#ifndef EBOUND_H
#define EBOUND_H

#include <stddef.h>

#if defined(EB_BUILDING_LIBRARY)
#define EB_API __attribute__((visibility("default")))
#else
#define EB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eb_status {
    EB_OK = 0,
    EB_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad order, mixed scalar kinds */
    EB_ERR_PARSE = 2,            /* malformed rational or series text */
    EB_ERR_DOMAIN = 3,           /* argument outside the mathematical domain */
    EB_ERR_COMPUTATION = 4,      /* non-convergence or a violated ordering */
    EB_ERR_LIMIT = 5,            /* request exceeds an implementation cap */
    EB_ERR_INTERNAL = 6
} eb_status;

/* Implementation caps; requests beyond them fail with EB_ERR_LIMIT. */
#define EB_MAX_COEFF_ORDER 150u
#define EB_MAX_KELLER_ORDER 64u
#define EB_MIN_PRECISION_BITS 16u
#define EB_MAX_PRECISION_BITS 65536u
#define EB_MAX_DIGITS 10000u
#define EB_MAX_SERIES_TERMS 100000u

typedef enum eb_bfile_column { EB_BFILE_NUMERATORS = 0, EB_BFILE_DENOMINATORS = 1 } eb_bfile_column;
typedef enum eb_sidedness { EB_TWO_SIDED = 0, EB_LOWER_ONLY = 1 } eb_sidedness;

typedef struct eb_interval eb_interval;
typedef struct eb_series eb_series;
typedef struct eb_bound_report eb_bound_report;
typedef struct eb_keller eb_keller;

EB_API const char *eb_version(void);
EB_API const char *eb_status_name(eb_status status);
EB_API const char *eb_last_error(void);
EB_API void eb_string_free(char *s);

/* Exact arithmetic */
EB_API eb_status eb_rational_canonical(const char *text, char **out);
EB_API eb_status eb_stirling1(unsigned p, long q, char **out);
EB_API eb_status eb_factorial(unsigned n, char **out);
EB_API eb_status eb_binomial(unsigned n, long k, char **out);

/* Coefficients e_n and f_n = (-1)^n e_n */
EB_API eb_status eb_e_coeff(unsigned n, char **out);
EB_API eb_status eb_f_coeff(unsigned n, char **out);
/* JSON array of e_0..e_n as rational strings. */
EB_API eb_status eb_coeffs_json(unsigned n_max, char **out);
/* "n,e_n,f_n" rows with header. */
EB_API eb_status eb_coeffs_csv(unsigned n_max, char **out);
/* OEIS b-file text, one "n value\n" line per index 0..n_max. */
EB_API eb_status eb_export_bfile(unsigned n_max, eb_bfile_column which, char **out);
/* JSON array of [n, "f_n to 15 digits"] for n = 1..n_max. */
EB_API eb_status eb_f_limit_probe_json(unsigned n_max, char **out);
/* Numeric series value of e_n; precision_bits = 0 picks one from digits. */
EB_API eb_status eb_e_series_numeric(unsigned n, unsigned digits, unsigned precision_bits, eb_interval **out);
/* Truncated gap series for f_n - f_(n+1) and its exact value. */
EB_API eb_status eb_f_gap(unsigned n, unsigned terms, unsigned precision_bits, eb_interval **numeric,
                          char **exact);

/* Outward-rounded intervals */
EB_API void eb_interval_free(eb_interval *interval);
EB_API unsigned eb_interval_precision(const eb_interval *interval);
/* Endpoints as decimal strings, lo rounded down and hi rounded up. */
EB_API eb_status eb_interval_bounds(const eb_interval *interval, int digits, char **lo, char **hi);
EB_API eb_status eb_interval_midpoint(const eb_interval *interval, int digits, char **out);
/* *out = 1 when the rational lies in the closed interval. */
EB_API eb_status eb_interval_contains(const eb_interval *interval, const char *rational, int *out);

EB_API eb_status eb_constant_e(unsigned precision_bits, eb_interval **out);
EB_API eb_status eb_eval_e_of_x(const char *x, unsigned precision_bits, eb_interval **out);
/* (y+1)(1+1/(y+c))^(y+c) - y(1+1/(y+c-1))^(y+c-1) */
EB_API eb_status eb_keller_difference(const char *y, const char *c, unsigned precision_bits, eb_interval **out);
/* CSV "y,abs_error,slope" of the difference against e. */
EB_API eb_status eb_convergence_probe_csv(const char *c, const char *const *y_values, size_t count,
                                          unsigned precision_bits, char **out);

/* Partial-sum enclosures of (1+x)^(1/x) */
EB_API eb_status eb_partial_sum_multiplier(const char *x, unsigned n, char **out);
EB_API eb_status eb_enclose(const char *x, unsigned n, unsigned precision_bits, eb_bound_report **out);
EB_API void eb_bound_report_free(eb_bound_report *report);
EB_API eb_sidedness eb_bound_report_sided(const eb_bound_report *report);
/* Multiplier m of the bound m*e; *out is set to NULL when the bound is absent. */
EB_API eb_status eb_bound_report_lower(const eb_bound_report *report, char **out);
EB_API eb_status eb_bound_report_upper(const eb_bound_report *report, char **out);
EB_API eb_status eb_bound_report_numeric(const eb_bound_report *report, eb_interval **out);
EB_API eb_status eb_bound_report_json(const eb_bound_report *report, int digits, char **out);
EB_API eb_status eb_enclosure_defect(const char *x, unsigned n, char **out);

/* Series and Keller expansions */
/* Coefficients are rationals, or e-multiples written "p/q*e", "e", "-e";
 * mixing the two kinds fails with EB_ERR_INVALID_ARGUMENT. radius_hint may
 * be NULL. */
EB_API eb_status eb_series_parse(const char *const *coeffs, size_t count, const char *radius_hint,
                                 eb_series **out);
/* a_k = e * e_k, k = 0..order */
EB_API eb_status eb_series_e(unsigned order, eb_series **out);
/* 1 + sum e_k x^k computed by series exp/log */
EB_API eb_status eb_series_oracle(unsigned order, eb_series **out);
EB_API void eb_series_free(eb_series *series);
EB_API eb_status eb_series_json(const eb_series *series, char **out);
EB_API int eb_series_scaled_by_e(const eb_series *series);

EB_API eb_status eb_keller_row_json(unsigned k, char **out);
/* shift == NULL gives the shift-free expansion. */
EB_API eb_status eb_keller_expand(const eb_series *series, const char *shift, unsigned K, eb_keller **out);
EB_API void eb_keller_free(eb_keller *expansion);
EB_API eb_status eb_keller_json(const eb_keller *expansion, char **out);
EB_API eb_status eb_keller_eval(const eb_keller *expansion, const char *y, unsigned precision_bits,
                                eb_interval **out);
/* Constant term a_0 (a multiplier of e for e-scaled series). */
EB_API eb_status eb_keller_limit(const eb_series *series, char **out);
/* (y+1)G(y+c) - yG(y+c-1) summed directly from the series. */
EB_API eb_status eb_keller_direct(const eb_series *series, const char *y, const char *c, unsigned precision_bits,
                                  eb_interval **out);

/* Self-checks; *all_passed receives 1 when every check passes. */
EB_API eb_status eb_verify_json(unsigned n_max, unsigned precision_bits, char **out, int *all_passed);

#ifdef __cplusplus
}
#endif

#endif
