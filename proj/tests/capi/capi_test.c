#include "torusasym.h"

#include <math.h>
#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                  \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                               \
        }                                                             \
    } while (0)

int main(void) {
    EXPECT(ta_context_new(10, 0) == NULL);
    EXPECT(ta_context_new(30, 1e-40) == NULL);

    ta_context* ctx = ta_context_new(30, 0);
    EXPECT(ctx != NULL);
    EXPECT(ta_context_digits(ctx) == 30);

    ta_complex z;
    EXPECT(ta_parse_complex(ctx, "-0.5+3i", &z) == TA_OK);
    EXPECT(z.re == -0.5 && z.im == 3);
    EXPECT(ta_parse_complex(ctx, "1+*i", &z) == TA_PARSE_ERROR);
    EXPECT(strlen(ta_last_error(ctx)) > 0);
    EXPECT(strcmp(ta_status_name(TA_PARSE_ERROR), "ParseError") == 0);
    EXPECT(strcmp(ta_status_name(TA_OK), "Ok") == 0);

    long ns[8];
    size_t count = 0;
    EXPECT(ta_parse_n_range(ctx, "100:800:x2", ns, 8, &count) == TA_OK);
    EXPECT(count == 4 && ns[3] == 800);

    ta_complex v, w;
    EXPECT(ta_jones(ctx, 2, 3, 1, "1+1i", TA_METHOD_INTEGRAL, &v) == TA_OK);
    EXPECT(fabs(v.re - 1) < 1e-14 && fabs(v.im) < 1e-14);
    EXPECT(ta_jones(ctx, 2, 3, 20, "1+0i", TA_METHOD_INTEGRAL, &v) == TA_OK);
    EXPECT(ta_jones(ctx, 2, 3, 20, "1+0i", TA_METHOD_SUM, &w) == TA_OK);
    EXPECT(hypot(v.re - w.re, v.im - w.im) < 1e-8 * hypot(w.re, w.im));
    EXPECT(ta_jones(ctx, 2, 4, 20, "1+0i", TA_METHOD_SUM, &w) == TA_INVALID_ARGUMENT);
    EXPECT(ta_jones(ctx, 2, 3, 20, "0+12.566370614359172953850573533118i", TA_METHOD_INTEGRAL, &w) ==
           TA_INVALID_XI);

    ta_complex t = {2, 0};
    EXPECT(ta_alexander(ctx, 2, 3, t, &v) == TA_OK);
    EXPECT(fabs(v.re - 1.5) < 1e-15);
    ta_complex pole = {0, 3.14159265358979323846 / 6};
    EXPECT(ta_tau(ctx, 2, 3, pole, &v) == TA_POLE_HIT);
    ta_complex x = {0.4, 0};
    EXPECT(ta_tau(ctx, 2, 3, x, &v) == TA_OK);

    ta_region_class rc;
    ta_complex one = {1, 0}, im15 = {0, 1.5};
    EXPECT(ta_classify_region(ctx, 2, 3, one, &rc) == TA_OK && rc == TA_REGION_CONVERGES);
    EXPECT(ta_classify_region(ctx, 2, 3, im15, &rc) == TA_OK && rc == TA_REGION_DIVERGES);

    ta_report* r = NULL;
    EXPECT(ta_eval_record(ctx, 2, 3, 5, "1+2i", TA_METHOD_SUM, &r) == TA_OK);
    EXPECT(strstr(ta_report_json(r), "\"value_re\"") != NULL);
    EXPECT(ta_report_passed(r) == 1);
    ta_report_free(r);

    EXPECT(ta_expand(ctx, 2, 3, "1+0i", ns, 2, 1, &r) == TA_OK);
    EXPECT(strncmp(ta_report_text(r), "N,oracle_abs,approx_abs,residual,case_tag\n", 42) == 0);
    ta_report_free(r);
    EXPECT(ta_expand(ctx, 2, 3, "1+0i", NULL, 0, 1, &r) == TA_INVALID_ARGUMENT);

    EXPECT(ta_verify(ctx, 15, 0, &r) == TA_OK);
    EXPECT(ta_report_passed(r) == 1);
    ta_report_free(r);
    EXPECT(ta_verify(ctx, 15, 1e-6, &r) == TA_OK);
    EXPECT(ta_report_passed(r) == 0);
    ta_report_free(r);

    EXPECT(ta_region(ctx, 2, 3, -0.1, 0.1, 0, 0.1, 0.1, &r) == TA_OK);
    EXPECT(strncmp(ta_report_text(r), "re,im,class", 11) == 0);
    ta_report_free(r);

    long sn[2] = {200, 400};
    EXPECT(ta_speculate(ctx, "0.1+6.283185307179586476925286766559i", sn, 2, &r) == TA_OK);
    EXPECT(strstr(ta_report_json(r), "h_estimate") != NULL);
    ta_report_free(r);
    EXPECT(ta_speculate(ctx, "0.1+6.283185307179586476925286766559i", sn, 1, &r) == TA_EXTRAPOLATION_UNSTABLE);

    EXPECT(ta_parse_complex(NULL, "1+1i", &z) == TA_INVALID_ARGUMENT);
    ta_report_free(NULL);
    ta_context_free(ctx);

    if (failures) fprintf(stderr, "%d failure(s)\n", failures);
    else printf("capi: all checks passed\n");
    return failures ? 1 : 0;
}
