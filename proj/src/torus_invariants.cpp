#include "torusasym/torus_invariants.hpp"
#include "torusasym/contour.hpp"
#include "torusasym/error.hpp"

#include <cmath>
#include <numeric>

namespace torusasym {

long gcd(long x, long y) { return std::gcd(x, y); }

bool is_valid(const TorusKnot& K) {
    return K.a >= 2 && K.b >= 3 && K.b % 2 == 1 && std::gcd(K.a, K.b) == 1;
}

void validate(const TorusKnot& K) {
    if (!is_valid(K))
        throw Error(ErrorCode::invalid_argument,
                    "torus knot (" + std::to_string(K.a) + "," + std::to_string(K.b) +
                        ") needs gcd(a,b)=1, b odd, a>=2, b>=3");
}

namespace {

// Exact division of integer polynomials (ascending coefficients); divisor is monic.
std::vector<long> poly_div(std::vector<long> num, const std::vector<long>& den) {
    const size_t dn = den.size() - 1;
    std::vector<long> q(num.size() - dn, 0);
    for (size_t i = num.size(); i-- > dn;) {
        long c = num[i] / den[dn];
        q[i - dn] = c;
        for (size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

std::vector<long> binomial_minus_one(long n) {  // t^n - 1
    std::vector<long> v(n + 1, 0);
    v[0] = -1;
    v[n] = 1;
    return v;
}

}  // namespace

std::vector<long> alexander_coefficients(const TorusKnot& K) {
    validate(K);
    const long ab = K.a * K.b;
    std::vector<long> num(ab + 2, 0);
    // (t^{ab} - 1)(t - 1)
    num[0] = 1;
    num[1] = -1;
    num[ab] = -1;
    num[ab + 1] = 1;
    auto q = poly_div(num, binomial_minus_one(K.a));
    return poly_div(q, binomial_minus_one(K.b));
}

Complex alexander(const TorusKnot& K, const Complex& t) {
    if (t.re == 0 && t.im == 0) throw Error(ErrorCode::invalid_argument, "alexander: t must be nonzero");
    auto c = alexander_coefficients(K);
    Complex acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * t + Complex(Real(c[i]));
    const long shift = (K.a - 1) * (K.b - 1) / 2;
    Complex tinv = Complex(1) / t;
    Complex s(1);
    for (long i = 0; i < shift; ++i) s *= tinv;
    return acc * s;
}

bool is_pole_index(const TorusKnot& K, long k) { return k % K.a != 0 && k % K.b != 0; }

std::vector<long> pole_indices(const TorusKnot& K, long k_max) {
    validate(K);
    if (k_max < 1) throw Error(ErrorCode::invalid_argument, "k_max must be at least 1");
    std::vector<long> out;
    for (long k = 1; k <= k_max; ++k)
        if (is_pole_index(K, k)) out.push_back(k);
    return out;
}

Complex pole_point(const TorusKnot& K, long k) {
    return Complex(Real(0), pi() * k / (K.a * K.b));
}

NearestPole nearest_pole(const TorusKnot& K, const Complex& z) {
    const long ab = K.a * K.b;
    Real x = z.im * ab / pi();
    long k0 = static_cast<long>(boost::multiprecision::floor(x).convert_to<double>());
    NearestPole best{0, Real(-1)};
    // the candidate range covers the nearest valid index on each side
    for (long k = k0 - K.a * K.b; k <= k0 + K.a * K.b + 1; ++k) {
        if (!is_pole_index(K, k)) continue;
        Real d = abs(z - pole_point(K, k));
        if (best.distance < 0 || d < best.distance) best = {k, d};
    }
    return best;
}

namespace {

Complex tau_direct(const TorusKnot& K, const Complex& z) {
    return Complex(2) * sinh(Real(K.a) * z) * sinh(Real(K.b) * z) / sinh(Real(K.a * K.b) * z);
}

}  // namespace

Complex tau(const TorusKnot& K, const Complex& z) {
    if (z.re == 0 && z.im == 0) return Complex(0);
    const long ab = K.a * K.b;
    const int digits = current_digits();
    const Real pie = pi();
    const Real guard = boost::multiprecision::pow(Real(10), -digits / 2) * pie / ab;

    long k = static_cast<long>(boost::multiprecision::round(z.im * ab / pie).convert_to<double>());
    Real d = abs(z - pole_point(K, k));
    if (k == 0 || d >= guard) return tau_direct(K, z);
    if (is_pole_index(K, k))
        throw Error(ErrorCode::pole_hit, "tau evaluated at a pole k=" + std::to_string(k));

    // Removable zero of sinh(abz): average over four rotations (error O(h^4)), then one Richardson step.
    PrecisionScope scope(digits + digits / 8 + 10);
    Real h = boost::multiprecision::pow(Real(10), -digits / 8 - 1) * pie / ab;
    auto ring = [&](const Real& r) {
        Complex s(0);
        const Complex dirs[4] = {Complex(1), Complex(0, 1), Complex(-1), Complex(0, -1)};
        for (const auto& u : dirs) s += tau_direct(K, z + r * u);
        return s / Real(4);
    };
    Complex A1 = ring(h), A2 = ring(h / 2);
    return (Real(16) * A2 - A1) / Real(15);
}

std::vector<Complex> tau_even_derivatives(const TorusKnot& K, const Complex& z0, int j_max, const Precision& p) {
    validate(K);
    validate(p);
    if (j_max < 0) throw Error(ErrorCode::invalid_argument, "j_max must be non-negative");
    PrecisionScope scope(p.working_digits);
    NearestPole np = nearest_pole(K, z0);
    const Real guard = boost::multiprecision::pow(Real(10), -p.working_digits / 2) * pi() / (K.a * K.b);
    if (np.distance < guard) throw Error(ErrorCode::pole_hit, "tau_even_derivatives at a pole");
    Real r = np.distance / 2;
    if (r > 1) r = 1;
    std::vector<int> orders;
    for (int j = 0; j <= j_max; ++j) orders.push_back(2 * j);
    ComplexFn f = [&](const Complex& z) { return tau(K, z); };
    return cauchy_derivatives(f, z0, r, orders, p, {pole_point(K, np.k)});
}

TauPoleData tau_at_pole(const TorusKnot& K, long k, int j_max, const Precision& p) {
    validate(K);
    validate(p);
    if (!is_pole_index(K, k)) throw Error(ErrorCode::invalid_k, "not a pole index");
    PrecisionScope scope(p.working_digits);
    const Complex z0 = pole_point(K, k);
    const Real r = pi() / (2 * K.a * K.b);
    std::vector<int> orders{-1};
    for (int j = 0; j <= j_max; ++j) orders.push_back(2 * j);
    ComplexFn f = [&](const Complex& z) { return tau(K, z); };
    auto c = circle_coefficients(f, z0, r, orders, p);
    TauPoleData out;
    out.residue = c[0];
    Real fact = 1;
    for (int j = 0; j <= j_max; ++j) {
        if (j > 0) fact *= Real((2 * j - 1) * (2 * j));
        out.regular_even_derivatives.push_back(c[j + 1] * fact);
    }
    return out;
}

std::vector<Real> kt_coefficients(const TorusKnot& K, int l_max, const Precision& p) {
    validate(K);
    validate(p);
    if (l_max < 0) throw Error(ErrorCode::invalid_argument, "l_max must be non-negative");
    PrecisionScope scope(p.working_digits);
    std::vector<int> orders;
    for (int l = 0; l <= l_max; ++l) orders.push_back(2 * l);
    ComplexFn f = [&](const Complex& z) { return z * tau(K, z); };
    const Real r = pi() / (2 * K.a * K.b);
    auto d = cauchy_derivatives(f, Complex(0), r, orders, p, {pole_point(K, 1), pole_point(K, -1)});
    std::vector<Real> out;
    for (const auto& v : d) out.push_back(v.re);
    return out;
}

}  // namespace torusasym
