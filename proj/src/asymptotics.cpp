#include "torusasym/asymptotics.hpp"
#include "torusasym/error.hpp"

#include <cmath>

namespace torusasym {

namespace {

Real sin_frac(long k, long n) {  // sin(k pi / n)
    return boost::multiprecision::sin(pi() * Real(k) / Real(n));
}

Complex two_pi_i() { return Complex(Real(0), 2 * pi()); }

Real shift_coefficient(const TorusKnot& K) {
    return Real(K.a * K.b) - Real(K.a) / K.b - Real(K.b) / K.a;
}

Real sign_of_k(long k) { return (k % 2 == 1 || k % 2 == -1) ? Real(1) : Real(-1); }  // (-1)^{k+1}

void finish(ExpansionReport& r, const Precision& p) {
    r.approximant = reassemble(r);
    r.oracle = jones_sum_oracle(r.knot, r.N, r.xi, p);
    Real diff = abs(r.approximant - r.oracle);
    Real mag = abs(r.oracle);
    r.residual_relative = mag > Real("1e-300");
    r.residual = r.residual_relative ? Real(diff / mag) : diff;
}

}  // namespace

Complex S(const TorusKnot& K, long k, const Complex& xi) {
    const long ab = K.a * K.b;
    Complex w = Complex(Real(0), 2 * pi() * k) - Real(ab) * xi;
    return -(w * w) / Real(4 * ab);
}

Real T(const TorusKnot& K, long k) {
    if (k % K.a == 0 || k % K.b == 0) return Real(0);
    Real sa = sin_frac(k, K.a), sb = sin_frac(k, K.b);
    return 16 * sa * sa * sb * sb / Real(K.a * K.b);
}

Real signed_sqrt_T(const TorusKnot& K, long k) {
    if (k % K.a == 0 || k % K.b == 0) return Real(0);
    return 4 * sin_frac(k, K.a) * sin_frac(k, K.b) / boost::multiprecision::sqrt(Real(K.a * K.b));
}

Complex A(const TorusKnot& K, long k, const Complex& xi, long N) {
    if (xi.re == 0 && xi.im == 0) throw Error(ErrorCode::invalid_xi, "A_k needs xi != 0");
    Real root = signed_sqrt_T(K, k);
    if (root == 0) return Complex(0);
    Complex NoverXi = Complex(Real(N)) / xi;
    Complex sqrt_minus_pi = sqrt(Complex(-pi()));
    return sqrt_minus_pi * exp(S(K, k, xi) * NoverXi) * sqrt(NoverXi) * root;
}

const char* case_name(CaseTag c) {
    switch (c) {
        case CaseTag::not_pole_pos_re: return "not_pole_pos_re";
        case CaseTag::not_pole_nonpos_re: return "not_pole_nonpos_re";
        case CaseTag::pole_case: return "pole_case";
        case CaseTag::kt_2pii: return "kt_2pii";
    }
    return "unknown";
}

long boundary_index(const TorusKnot& K, const Complex& xi, bool* exact) {
    Real x = Real(K.a * K.b) * abs(xi) / (2 * pi());
    Real r = boost::multiprecision::round(x);
    bool snap = boost::multiprecision::abs(x - r) <= Real("1e-12");
    if (exact) *exact = snap;
    Real f = snap ? r : boost::multiprecision::floor(x);
    return f.convert_to<long>();
}

long pole_case_index(const TorusKnot& K, const Complex& xi) {
    if (boost::multiprecision::abs(xi.re) > Real("1e-12") * abs(xi)) return 0;
    if (xi.im <= 0) return 0;
    bool exact = false;
    long k = boundary_index(K, xi, &exact);
    if (!exact || k < 1 || !is_pole_index(K, k)) return 0;
    return k;
}

CaseTag select_case(const TorusKnot& K, const Complex& xi) {
    long m = 0;
    if (near_multiple_of_2pii(xi, &m)) {
        if (m == 1) return CaseTag::kt_2pii;
        throw Error(ErrorCode::case_undefined, "xi is a multiple of 2*pi*i other than 2*pi*i");
    }
    if (pole_case_index(K, xi) > 0) return CaseTag::pole_case;
    return xi.re > 0 ? CaseTag::not_pole_pos_re : CaseTag::not_pole_nonpos_re;
}

Complex reassemble(const ExpansionReport& r) {
    Complex s = r.leading;
    for (const auto& t : r.exp_terms) s += t.contribution;
    for (const auto& c : r.corrections) s += c;
    return r.prefactor * s;
}

ExpansionReport expand(const ExpansionSpec& spec, const Precision& p) {
    validate(spec.knot);
    validate(p);
    if (spec.N < 1) throw Error(ErrorCode::invalid_argument, "N must be positive");
    if (spec.J < 0) throw Error(ErrorCode::invalid_argument, "J must be non-negative");
    if (spec.xi.im < 0) throw Error(ErrorCode::invalid_xi, "Im xi must be non-negative");

    const CaseTag tag = select_case(spec.knot, spec.xi);
    if (tag == CaseTag::kt_2pii) return expand_kt_2pii(spec.knot, spec.N, spec.J, p);

    PrecisionScope scope(p.working_digits);
    const TorusKnot& K = spec.knot;
    const long ab = K.a * K.b;
    const Complex& xi = spec.xi;
    const long N = spec.N;

    ExpansionReport r;
    r.case_tag = tag;
    r.knot = K;
    r.xi = xi;
    r.N = N;
    r.J = spec.J;
    r.prefactor = exp(shift_coefficient(K) * xi / Real(4 * N)) / (Real(2) * sinh(xi / Real(2)));

    std::vector<Complex> ladder;
    long k_top = 0;
    if (tag == CaseTag::pole_case) {
        k_top = pole_case_index(K, xi);
        ladder = tau_at_pole(K, k_top, spec.J, p).regular_even_derivatives;
    } else {
        ladder = tau_even_derivatives(K, xi / Real(2), spec.J, p);
        if (tag == CaseTag::not_pole_nonpos_re) k_top = boundary_index(K, xi);
    }
    r.leading = ladder[0];

    for (long k = 1; k <= k_top; ++k) {
        if (!is_pole_index(K, k)) continue;
        Real w = sign_of_k(k);
        if (tag == CaseTag::pole_case && k == k_top) w /= 2;
        Complex v = A(K, k, xi, N);
        r.exp_terms.push_back({k, v, w, w * v});
    }

    const Complex step = xi / Real(4 * ab * N);
    Complex power(1);
    Real fact = 1;
    for (int j = 1; j <= spec.J; ++j) {
        power *= step;
        fact *= j;
        r.corrections.push_back(ladder[j] * power / fact);
    }
    finish(r, p);
    return r;
}

ExpansionReport expand_kt_2pii(const TorusKnot& K, long N, int j_max, const Precision& p) {
    validate(K);
    validate(p);
    if (N < 1) throw Error(ErrorCode::invalid_argument, "N must be positive");
    if (j_max < 0) throw Error(ErrorCode::invalid_argument, "j_max must be non-negative");
    PrecisionScope scope(p.working_digits);
    const long ab = K.a * K.b;
    const Complex xi = two_pi_i();

    ExpansionReport r;
    r.case_tag = CaseTag::kt_2pii;
    r.knot = K;
    r.xi = xi;
    r.N = N;
    r.J = j_max;
    r.prefactor = exp(shift_coefficient(K) * xi / Real(4 * N));
    r.leading = Complex(0);

    const Complex NoverXi = Complex(Real(N)) / xi;
    const Real pie = pi();
    const Complex outer = pie * boost::multiprecision::sqrt(pie) / Real(2 * ab) * pow(NoverXi, Real(1.5));
    for (long k = 1; k <= ab - 1; ++k) {
        Real root = signed_sqrt_T(K, k);
        if (root == 0) continue;
        Complex v = outer * Real(k * k) * exp(S(K, k, xi) * NoverXi) * root;
        Real w = sign_of_k(k);
        r.exp_terms.push_back({k, v, w, w * v});
    }

    if (j_max > 0) {
        std::vector<Real> a = kt_coefficients(K, j_max, p);
        const Complex step = xi / Real(4 * ab * N);
        Complex power(1);
        Real fact = 1;
        for (int j = 1; j <= j_max; ++j) {
            fact *= j;
            r.corrections.push_back(a[j] / (4 * fact) * power);
            power *= step;
        }
    }
    finish(r, p);
    return r;
}

const char* region_name(Region r) {
    switch (r) {
        case Region::converges: return "converges";
        case Region::diverges: return "diverges";
        case Region::boundary_oscillates: return "boundary_oscillates";
    }
    return "unknown";
}

Region classify_region(const TorusKnot& K, const Complex& xi) {
    validate(K);
    if (xi.im < 0) throw Error(ErrorCode::invalid_xi, "Im xi must be non-negative");
    if (near_multiple_of_2pii(xi)) throw Error(ErrorCode::invalid_xi, "xi is a multiple of 2*pi*i");
    if (xi.re > 0) return Region::converges;
    const Real edge = 2 * pi() / Real(K.a * K.b);
    const Real r = abs(xi);
    if (boost::multiprecision::abs(r - edge) <= Real("1e-12") * edge) return Region::boundary_oscillates;
    return r < edge ? Region::converges : Region::diverges;
}

}  // namespace torusasym
