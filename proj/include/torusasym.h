#ifndef TORUSASYM_H
#define TORUSASYM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define TA_API __attribute__((visibility("default")))
#else
#define TA_API
#endif

typedef struct ta_context ta_context;
typedef struct ta_report ta_report;

/* Values 1..15 mirror torusasym::ErrorCode. */
typedef enum {
    TA_OK = 0,
    TA_INVALID_ARGUMENT = 1,
    TA_PARSE_ERROR = 2,
    TA_POLE_HIT = 3,
    TA_NON_DECAYING_INTEGRAND = 4,
    TA_TOLERANCE_NOT_REACHED = 5,
    TA_RADIUS_TOO_LARGE = 6,
    TA_DEGENERATE_DENOMINATOR = 7,
    TA_DEGENERATE_DISCRIMINANT = 8,
    TA_INVALID_XI = 9,
    TA_INVALID_K = 10,
    TA_PARITY_VIOLATION = 11,
    TA_CASE_UNDEFINED = 12,
    TA_NON_INTEGER_SHIFT = 13,
    TA_COORDINATE_MISMATCH = 14,
    TA_EXTRAPOLATION_UNSTABLE = 15,
    TA_INTERNAL = 99
} ta_status;

typedef enum { TA_METHOD_INTEGRAL = 0, TA_METHOD_SUM = 1 } ta_method;

typedef enum { TA_REGION_CONVERGES = 0, TA_REGION_DIVERGES = 1, TA_REGION_BOUNDARY_OSCILLATES = 2 } ta_region_class;

typedef struct {
    double re;
    double im;
} ta_complex;

/* digits >= 15; rel_tol >= 10^(2-digits), or <= 0 for the default max(1e-15, 10^(2-digits)). NULL if invalid. */
TA_API ta_context* ta_context_new(int digits, double rel_tol);
TA_API void ta_context_free(ta_context* ctx);
TA_API int ta_context_digits(const ta_context* ctx);
/* Message of the last failed call on ctx, "" after success. */
TA_API const char* ta_last_error(const ta_context* ctx);
TA_API const char* ta_status_name(ta_status s);

TA_API ta_status ta_parse_complex(ta_context* ctx, const char* text, ta_complex* out);
/* Writes up to cap values; *count receives the full length. */
TA_API ta_status ta_parse_n_range(ta_context* ctx, const char* text, long* out, size_t cap, size_t* count);

TA_API ta_status ta_jones(ta_context* ctx, long a, long b, long N, const char* xi, ta_method method, ta_complex* out);
TA_API ta_status ta_tau(ta_context* ctx, long a, long b, ta_complex z, ta_complex* out);
TA_API ta_status ta_alexander(ta_context* ctx, long a, long b, ta_complex t, ta_complex* out);
TA_API ta_status ta_classify_region(ta_context* ctx, long a, long b, ta_complex xi, ta_region_class* out);

/* Report producers. On success *out owns the result and must be released with ta_report_free. */
TA_API ta_status ta_eval_record(ta_context* ctx, long a, long b, long N, const char* xi, ta_method method,
                                ta_report** out);
TA_API ta_status ta_expand(ta_context* ctx, long a, long b, const char* xi, const long* Ns, size_t n, int J,
                           ta_report** out);
TA_API ta_status ta_verify(ta_context* ctx, long bound, double perturb, ta_report** out);
TA_API ta_status ta_region(ta_context* ctx, long a, long b, double re_min, double re_max, double im_min,
                           double im_max, double step, ta_report** out);
TA_API ta_status ta_speculate(ta_context* ctx, const char* xi, const long* Ns, size_t n, ta_report** out);

/* JSON body ("" for region). */
TA_API const char* ta_report_json(const ta_report* r);
/* CSV for expand, region and speculate; the human-readable listing for verify. */
TA_API const char* ta_report_text(const ta_report* r);
/* 1 unless the report is a failed verify run. */
TA_API int ta_report_passed(const ta_report* r);
TA_API void ta_report_free(ta_report* r);

#ifdef __cplusplus
}
#endif

#endif
