#include "torusasym/jones.hpp"
#include "torusasym/error.hpp"

#include <algorithm>
#include <cmath>

namespace torusasym {

namespace {

int needed_digits(const Precision& p) {
    return static_cast<int>(std::ceil(-std::log10(p.target_rel_tol))) + 3;
}

double lost_digits(const Real& scale, const Real& value) {
    if (value == 0) return 1e9;
    double l = boost::multiprecision::log10(scale / abs(value)).convert_to<double>();
    return l > 0 ? l : 0;
}

}  // namespace

Complex u_of(const EvalPoint& pt) { return pt.xi - Complex(Real(0), 2 * pi()); }

bool near_multiple_of_2pii(const Complex& xi, long* m, double rel_tol) {
    Real two_pi = 2 * pi();
    long k = static_cast<long>(boost::multiprecision::round(xi.im / two_pi).convert_to<double>());
    if (m) *m = k;
    Real d = abs(xi - Complex(Real(0), two_pi * k));
    Real scale = std::max(Real(1), abs(xi));
    return d <= Real(rel_tol) * scale;
}

double choose_contour_angle(const TorusKnot& K, const Complex& xi, long N) {
    (void)K;
    (void)N;
    const double xr = xi.re.convert_to<double>(), xim = xi.im.convert_to<double>();
    const double th = std::atan2(xim, xr);
    const double mod = std::hypot(xr, xim);
    auto feasible = [&](double phi) {
        return std::cos(2 * phi - th) >= 0.1 && std::fabs(std::cos(phi)) >= 0.15;
    };
    if (xr > 0 && feasible(th)) return th;  // through the saddle at xi/2 with no cancellation
    const double lo = th / 2 - M_PI / 4, hi = th / 2 + M_PI / 4;
    const int n = 2000;
    double best = th / 2, best_val = INFINITY;
    for (int i = 1; i < n; ++i) {
        double phi = lo + (hi - lo) * i / n;
        if (!feasible(phi)) continue;
        double c = std::cos(phi);
        double val = mod * c * c / (4 * std::cos(2 * phi - th));
        if (val < best_val) {
            best_val = val;
            best = phi;
        }
    }
    return best;
}

IntegralDetail jones_integral_detail(const TorusKnot& K, const EvalPoint& pt, const Precision& p) {
    validate(K);
    validate(p);
    if (pt.N < 1) throw Error(ErrorCode::invalid_argument, "N must be positive");
    if (pt.xi.im < 0) throw Error(ErrorCode::invalid_xi, "Im xi must be non-negative");
    if (near_multiple_of_2pii(pt.xi)) throw Error(ErrorCode::invalid_xi, "xi is a multiple of 2*pi*i");

    const long ab = K.a * K.b;
    const long N = pt.N;
    const double phi = choose_contour_angle(K, pt.xi, N);
    const int need = needed_digits(p);

    // peak of Re(exponent) along the line, per unit abN
    const double xr = pt.xi.re.convert_to<double>(), xim = pt.xi.im.convert_to<double>();
    const double th = std::atan2(xim, xr), mod = std::hypot(xr, xim);
    const double peak = double(ab) * N * (mod * std::cos(phi) * std::cos(phi) / (4 * std::cos(2 * phi - th)) - xr / 4);
    int wd = std::max(p.working_digits, need + static_cast<int>(std::ceil(std::max(0.0, peak) / std::log(10.0))) + 5);

    for (int attempt = 0;; ++attempt) {
        PrecisionScope scope(wd);
        const Complex xi = pt.xi;
        const Real abN = Real(ab) * N;
        const Complex d = polar(Real(1), Real(phi));
        const Real R = (d * d / xi).re;
        const Real tstar = d.re / (2 * R);
        const Real L = boost::multiprecision::sqrt(Real(wd + 8) * boost::multiprecision::log(Real(10)) / (abN * R));
        const Complex half = xi / Real(2);
        ComplexFn f = [&](const Complex& z) {
            Complex w = z - half;
            return exp(-(abN * (w * w / xi))) * tau(K, z);
        };
        Precision pq{wd, std::max(p.target_rel_tol / 10, std::pow(10.0, 2 - wd))};
        QuadratureResult q = integrate_line(f, LineContour{tstar * d, Real(phi), L}, pq);
        double lost = lost_digits(q.magnitude_scale, q.value.re == 0 && q.value.im == 0 ? Real(0) : abs(q.value));
        if (wd - lost >= need || attempt == 3) {
            const Real shift = Real(ab) - Real(K.a) / K.b - Real(K.b) / K.a;
            Complex pref = sqrt(Complex(abN) / (pi() * xi)) * exp(shift * xi / Real(4 * N)) /
                           (Real(2) * sinh(half));
            IntegralDetail out;
            out.value = pref * q.value;
            out.angle = phi;
            out.digits_used = wd;
            out.quadrature = q;
            return out;
        }
        wd = std::max(2 * wd, need + static_cast<int>(std::ceil(lost)) + 10);
    }
}

Complex jones_integral(const TorusKnot& K, const EvalPoint& pt, const Precision& p) {
    return jones_integral_detail(K, pt, p).value;
}

Complex jones_sum_oracle(const TorusKnot& K, long N, const Complex& xi, const Precision& p) {
    validate(K);
    validate(p);
    if (N < 1) throw Error(ErrorCode::invalid_argument, "N must be positive");
    if (N == 1) return Complex(1);

    const long long a = K.a, b = K.b, ab = a * b;
    const long long base = ab * (1 - static_cast<long long>(N) * N);
    const int need = needed_digits(p);

    // largest |term| ~ exp(max Re(xi) n / 4N); assume |J| is not far below 1
    const double xr = xi.re.convert_to<double>();
    double logmax = 0;
    for (long long m : {static_cast<long long>(1 - N), static_cast<long long>(N - 1), 0LL}) {
        for (long long n : {ab * m * m - 2 * (a + b) * m + 2 + base, ab * m * m - 2 * (a - b) * m - 2 + base})
            logmax = std::max(logmax, xr * double(n) / (4.0 * N));
    }
    int wd = std::max(p.working_digits, need + static_cast<int>(std::ceil(logmax / std::log(10.0))) + 10);

    for (int attempt = 0;; ++attempt) {
        PrecisionScope scope(wd);
        const Complex x = xi / Real(4 * N);
        const Complex D = Real(2) * sinh(xi / Real(2));
        const bool degenerate = abs(D) < boost::multiprecision::pow(Real(10), -wd / 2);
        const Real inv4N = Real(1) / Real(4 * N);
        Complex S(0);
        Real big = 0;
        for (long long m = -(N - 1); m <= N - 1; m += 2) {
            const long long n1 = ab * m * m - 2 * (a + b) * m + 2 + base;
            const long long n2 = ab * m * m - 2 * (a - b) * m - 2 + base;
            Complex e1 = exp(x * Real(n1)), e2 = exp(x * Real(n2));
            if (degenerate) {
                e1 = e1 * (Real(n1) * inv4N);
                e2 = e2 * (Real(n2) * inv4N);
            }
            big = std::max(big, std::max(abs(e1), abs(e2)));
            S += e1 - e2;
        }
        Real mag = abs(S);
        double lost = lost_digits(big, mag);
        if (wd - lost >= need || attempt == 7) {
            if (degenerate) return S / cosh(xi / Real(2));
            return S / D;
        }
        wd = std::max(2 * wd, need + static_cast<int>(std::ceil(lost)) + 10);
    }
}

UnknotBracket unknot_bracket(long N, const Complex& xi, const Precision& p) {
    validate(p);
    if (N < 1) throw Error(ErrorCode::invalid_argument, "N must be positive");
    PrecisionScope scope(p.working_digits);
    const Complex small = xi / Real(2 * N);
    const Complex s = sinh(small);
    UnknotBracket out;
    if (N == 1) {
        out.bracket = Complex(1);
    } else {
        if (abs(s) < boost::multiprecision::pow(Real(10), -p.working_digits / 2))
            throw Error(ErrorCode::degenerate_denominator, "sinh(xi/(2N)) vanishes");
        out.bracket = sinh(xi / Real(2)) / s;
    }
    // bracket * xi / (2N sinh(xi/2)) simplifies to (xi/2N)/sinh(xi/2N)
    if (small.re == 0 && small.im == 0)
        out.nu = Complex(1);
    else if (abs(s) < boost::multiprecision::pow(Real(10), -p.working_digits / 2))
        throw Error(ErrorCode::degenerate_denominator, "sinh(xi/(2N)) vanishes");
    else
        out.nu = small / s;
    return out;
}

const char* method_name(JonesMethod m) { return m == JonesMethod::integral ? "integral" : "sum"; }

JonesValue jones_eval(const TorusKnot& K, const EvalPoint& pt, JonesMethod method, const Precision& p) {
    if (method == JonesMethod::integral && pt.N <= 5000)
        return {jones_integral(K, pt, p), JonesMethod::integral};
    return {jones_sum_oracle(K, pt.N, pt.xi, p), JonesMethod::sum};
}

}  // namespace torusasym
