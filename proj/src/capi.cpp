#include "torusasym.h"

#include "torusasym/error.hpp"
#include "torusasym/harness.hpp"

#include <memory>
#include <new>
#include <string>

using namespace torusasym;

struct ta_context {
    Precision precision;
    std::string last_error;
};

struct ta_report {
    std::string json;
    std::string text;
    bool passed = true;
};

namespace {

template <class F>
ta_status guarded(ta_context* ctx, F&& f) {
    if (!ctx) return TA_INVALID_ARGUMENT;
    ctx->last_error.clear();
    try {
        f();
        return TA_OK;
    } catch (const Error& e) {
        ctx->last_error = e.what();
        return static_cast<ta_status>(e.code());
    } catch (const std::bad_alloc&) {
        ctx->last_error = "out of memory";
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
    } catch (...) {
        ctx->last_error = "unknown failure";
    }
    return TA_INTERNAL;
}

TorusKnot knot(long a, long b) {
    TorusKnot K{a, b};
    validate(K);
    return K;
}

std::string need_text(const char* s, const char* what) {
    if (!s) throw Error(ErrorCode::invalid_argument, std::string(what) + " is null");
    return s;
}

void need_out(const void* p) {
    if (!p) throw Error(ErrorCode::invalid_argument, "null output pointer");
}

std::vector<long> n_list(const long* Ns, size_t n) {
    if (!Ns || n == 0) throw Error(ErrorCode::invalid_argument, "empty N list");
    return std::vector<long>(Ns, Ns + n);
}

ta_complex to_c(const Complex& z) { return {static_cast<double>(z.re), static_cast<double>(z.im)}; }
Complex from_c(ta_complex z) { return Complex(z.re, z.im); }

JonesMethod method_of(ta_method m) {
    switch (m) {
        case TA_METHOD_INTEGRAL: return JonesMethod::integral;
        case TA_METHOD_SUM: return JonesMethod::sum;
    }
    throw Error(ErrorCode::invalid_argument, "unknown method");
}

}  // namespace

extern "C" {

ta_context* ta_context_new(int digits, double rel_tol) {
    try {
        Precision p = precision_for_digits(digits);
        if (rel_tol > 0) p.target_rel_tol = rel_tol;
        validate(p);
        return new ta_context{p, {}};
    } catch (...) {
        return nullptr;
    }
}

void ta_context_free(ta_context* ctx) { delete ctx; }

int ta_context_digits(const ta_context* ctx) { return ctx ? ctx->precision.working_digits : 0; }

const char* ta_last_error(const ta_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

const char* ta_status_name(ta_status s) {
    if (s == TA_OK) return "Ok";
    if (s == TA_INTERNAL) return "Internal";
    if (s >= TA_INVALID_ARGUMENT && s <= TA_EXTRAPOLATION_UNSTABLE) return error_name(static_cast<ErrorCode>(s));
    return "Unknown";
}

ta_status ta_parse_complex(ta_context* ctx, const char* text, ta_complex* out) {
    return guarded(ctx, [&] {
        need_out(out);
        PrecisionScope scope(ctx->precision.working_digits);
        *out = to_c(parse_complex(need_text(text, "text")));
    });
}

ta_status ta_parse_n_range(ta_context* ctx, const char* text, long* out, size_t cap, size_t* count) {
    return guarded(ctx, [&] {
        need_out(count);
        auto v = parse_n_range(need_text(text, "text"));
        *count = v.size();
        if (cap && !out) throw Error(ErrorCode::invalid_argument, "null output buffer");
        for (size_t i = 0; i < v.size() && i < cap; ++i) out[i] = v[i];
    });
}

ta_status ta_jones(ta_context* ctx, long a, long b, long N, const char* xi, ta_method method, ta_complex* out) {
    return guarded(ctx, [&] {
        need_out(out);
        TorusKnot K = knot(a, b);
        PrecisionScope scope(ctx->precision.working_digits);
        Complex x = parse_complex(need_text(xi, "xi"));
        *out = to_c(jones_eval(K, EvalPoint{x, N}, method_of(method), ctx->precision).value);
    });
}

ta_status ta_tau(ta_context* ctx, long a, long b, ta_complex z, ta_complex* out) {
    return guarded(ctx, [&] {
        need_out(out);
        TorusKnot K = knot(a, b);
        PrecisionScope scope(ctx->precision.working_digits);
        *out = to_c(tau(K, from_c(z)));
    });
}

ta_status ta_alexander(ta_context* ctx, long a, long b, ta_complex t, ta_complex* out) {
    return guarded(ctx, [&] {
        need_out(out);
        TorusKnot K = knot(a, b);
        PrecisionScope scope(ctx->precision.working_digits);
        *out = to_c(alexander(K, from_c(t)));
    });
}

ta_status ta_classify_region(ta_context* ctx, long a, long b, ta_complex xi, ta_region_class* out) {
    return guarded(ctx, [&] {
        need_out(out);
        TorusKnot K = knot(a, b);
        PrecisionScope scope(ctx->precision.working_digits);
        switch (classify_region(K, from_c(xi))) {
            case Region::converges: *out = TA_REGION_CONVERGES; break;
            case Region::diverges: *out = TA_REGION_DIVERGES; break;
            case Region::boundary_oscillates: *out = TA_REGION_BOUNDARY_OSCILLATES; break;
        }
    });
}

ta_status ta_eval_record(ta_context* ctx, long a, long b, long N, const char* xi, ta_method method,
                         ta_report** out) {
    return guarded(ctx, [&] {
        need_out(out);
        auto r = std::make_unique<ta_report>();
        r->json = eval_json(knot(a, b), N, need_text(xi, "xi"), method_of(method), ctx->precision);
        *out = r.release();
    });
}

ta_status ta_expand(ta_context* ctx, long a, long b, const char* xi, const long* Ns, size_t n, int J,
                    ta_report** out) {
    return guarded(ctx, [&] {
        need_out(out);
        TorusKnot K = knot(a, b);
        auto list = n_list(Ns, n);
        PrecisionScope scope(ctx->precision.working_digits);
        Complex x = parse_complex(need_text(xi, "xi"));
        std::vector<ExpansionReport> reports;
        for (long N : list) reports.push_back(expand_routed(K, x, N, J, ctx->precision));
        auto r = std::make_unique<ta_report>();
        r->json = expansion_json(reports, ctx->precision.working_digits);
        r->text = expansion_csv(reports);
        *out = r.release();
    });
}

ta_status ta_verify(ta_context* ctx, long bound, double perturb, ta_report** out) {
    return guarded(ctx, [&] {
        need_out(out);
        VerifyReport v = run_verify(bound, perturb, ctx->precision);
        auto r = std::make_unique<ta_report>();
        r->json = verify_json(v);
        r->text = verify_text(v);
        r->passed = v.passed();
        *out = r.release();
    });
}

ta_status ta_region(ta_context* ctx, long a, long b, double re_min, double re_max, double im_min, double im_max,
                    double step, ta_report** out) {
    return guarded(ctx, [&] {
        need_out(out);
        TorusKnot K = knot(a, b);
        PrecisionScope scope(ctx->precision.working_digits);
        auto r = std::make_unique<ta_report>();
        r->text = region_csv(K, RegionGrid{re_min, re_max, im_min, im_max, step});
        *out = r.release();
    });
}

ta_status ta_speculate(ta_context* ctx, const char* xi, const long* Ns, size_t n, ta_report** out) {
    return guarded(ctx, [&] {
        need_out(out);
        auto list = n_list(Ns, n);
        PrecisionScope scope(ctx->precision.working_digits);
        Complex x = parse_complex(need_text(xi, "xi"));
        SpeculationTable t = speculation_residual(x, list, ctx->precision);
        auto r = std::make_unique<ta_report>();
        r->json = speculation_json(t, ctx->precision.working_digits);
        r->text = speculation_csv(t);
        *out = r.release();
    });
}

const char* ta_report_json(const ta_report* r) { return r ? r->json.c_str() : ""; }
const char* ta_report_text(const ta_report* r) { return r ? r->text.c_str() : ""; }
int ta_report_passed(const ta_report* r) { return r && r->passed ? 1 : 0; }
void ta_report_free(ta_report* r) { delete r; }

}  // extern "C"
