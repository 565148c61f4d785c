#include "torusasym/cs_torsion.hpp"
#include "torusasym/asymptotics.hpp"
#include "torusasym/error.hpp"

#include <cmath>

namespace torusasym {

namespace {

Complex i_times(const Real& x) { return Complex(Real(0), x); }

bool near_lattice(const Real& x, ShiftLattice lat, double tol, Real* snapped) {
    Real scale = lat == ShiftLattice::half ? Real(2) : Real(1);
    Real r = boost::multiprecision::round(x * scale) / scale;
    if (snapped) *snapped = r;
    return boost::multiprecision::abs(x - r) <= Real(tol);
}

}  // namespace

BundleElement x_power(const BundleElement& e, const Real& m) {
    Complex phase = exp(i_times(-8 * pi() * m) * e.t);
    return {e.s + Complex(m), e.t, e.z * phase};
}

BundleElement y_power(const BundleElement& e, const Real& n) {
    Complex phase = exp(i_times(8 * pi() * n) * e.s);
    return {e.s, e.t + Complex(n), e.z * phase};
}

BundleElement g_act(Generator g, const BundleElement& e) {
    switch (g) {
        case Generator::X: return x_power(e, Real(1));
        case Generator::Y: return y_power(e, Real(1));
        case Generator::B: return {-e.s, -e.t, e.z};
    }
    return e;
}

Equivalence equivalence_word(const BundleElement& e1, const BundleElement& e2, const EquivalenceOptions& opt) {
    auto imag_ok = [&](const Complex& d) { return boost::multiprecision::abs(d.im) <= Real(opt.shift_tol); };
    for (int with_b = 0; with_b < 2; ++with_b) {
        BundleElement start = with_b ? g_act(Generator::B, e1) : e1;
        Complex ds = e2.s - start.s, dt = e2.t - start.t;
        Real m, n;
        if (!imag_ok(ds) || !imag_ok(dt)) continue;
        if (!near_lattice(ds.re, opt.lattice, opt.shift_tol, &m)) continue;
        if (!near_lattice(dt.re, opt.lattice, opt.shift_tol, &n)) continue;
        BundleElement img = y_power(x_power(start, m), n);
        Equivalence out;
        out.uses_b = with_b;
        out.x_shift = m;
        out.y_shift = n;
        out.z_deviation = abs(img.z - e2.z) / std::max(Real(1), abs(e2.z));
        out.equivalent = out.z_deviation <= Real(opt.z_tol);
        if (out.equivalent || with_b == 1) return out;
        // the plain word failed on z; the B word may still match
        Equivalence alt = out;
        BundleElement bs = g_act(Generator::B, e1);
        Complex ds2 = e2.s - bs.s, dt2 = e2.t - bs.t;
        Real m2, n2;
        if (imag_ok(ds2) && imag_ok(dt2) && near_lattice(ds2.re, opt.lattice, opt.shift_tol, &m2) &&
            near_lattice(dt2.re, opt.lattice, opt.shift_tol, &n2)) {
            BundleElement img2 = y_power(x_power(bs, m2), n2);
            Real dev = abs(img2.z - e2.z) / std::max(Real(1), abs(e2.z));
            if (dev <= Real(opt.z_tol)) return {true, true, m2, n2, dev};
        }
        return alt;
    }
    throw Error(ErrorCode::non_integer_shift, "coordinate differences are not lattice shifts");
}

bool equivalent(const BundleElement& e1, const BundleElement& e2, const Precision& p, ShiftLattice lattice) {
    validate(p);
    PrecisionScope scope(p.working_digits);
    EquivalenceOptions opt;
    opt.lattice = lattice;
    opt.shift_tol = std::max(1e-9, std::sqrt(p.target_rel_tol));
    opt.z_tol = opt.shift_tol;
    try {
        return equivalence_word(e1, e2, opt).equivalent;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::non_integer_shift) return false;
        throw;
    }
}

CD cd_pair(const TorusKnot& K) {
    validate(K);
    long d = mod_inverse(K.a, K.b);
    return {(K.a * d - 1) / K.b, d};
}

BundleElement cs_dubois_kashaev(const TorusKnot& K, long alpha, long beta, int epsilon, const Complex& u) {
    validate(K);
    if (epsilon != 1 && epsilon != -1) throw Error(ErrorCode::invalid_argument, "epsilon must be +1 or -1");
    if (alpha < 1 || alpha > K.a - 1 || beta < 1 || beta > K.b - 1)
        throw Error(ErrorCode::invalid_argument, "alpha or beta out of range");
    if ((alpha - beta) % 2 != 0) throw Error(ErrorCode::parity_violation, "alpha and beta differ in parity");
    const long ab = K.a * K.b;
    const CD cd = cd_pair(K);
    const long X = beta * K.a * cd.d + epsilon * alpha * K.b * cd.c;
    const long X2 = mod(mod(X, ab) * mod(X, ab), ab);
    const Real four_pi = 4 * pi();
    BundleElement e;
    e.s = u / i_times(four_pi);
    e.t = Complex(Real(1) / 2) - Real(ab) * u / i_times(four_pi);
    // exp(-8 pi i (X^2/(4ab) - u/(8 pi i))) = exp(-2 pi i X^2/ab + u)
    e.z = exp(i_times(-2 * pi() * X2 / Real(ab)) + u);
    return e;
}

BundleElement cs_closed_form(const TorusKnot& K, long k, const Complex& xi) {
    validate(K);
    if (k < 1 || !is_pole_index(K, k)) throw Error(ErrorCode::invalid_k, "k must be a valid index");
    const Complex u = xi - i_times(2 * pi());
    const Complex v = v_k(K, k, u);
    const Real four_pi = 4 * pi();
    const Complex cs = S(K, k, xi) - i_times(pi()) * u - u * v / Real(4);
    BundleElement e;
    e.s = u / i_times(four_pi);
    e.t = v / i_times(four_pi);
    e.z = exp(Complex(Real(2)) / i_times(pi()) * cs);
    return e;
}

Real dk_transport_shift(const TorusKnot& K, long k) { return Real(k - K.a * K.b - 2) / 2; }

BundleElement transport_dk(const TorusKnot& K, long k, const BundleElement& dk) {
    return y_power(dk, dk_transport_shift(K, k));
}

CSValue reduce_cs(const Complex& v) {
    const Real p2 = pi() * pi();
    Real r = v.re - boost::multiprecision::floor(v.re / p2) * p2;
    if (r >= p2) r -= p2;
    if (r < 0) r += p2;
    return {Complex(r, v.im)};
}

CSValue cs_extract(const BundleElement& e, const Complex& u, const Complex& v, double tol) {
    const Real four_pi = 4 * pi();
    Complex ds = e.s - u / i_times(four_pi);
    Complex dt = e.t - v / i_times(four_pi);
    if (abs(ds) > Real(tol) || abs(dt) > Real(tol))
        throw Error(ErrorCode::coordinate_mismatch, "bundle element is not over (u, v)");
    if (e.z.re == 0 && e.z.im == 0) throw Error(ErrorCode::invalid_argument, "z must be nonzero");
    return reduce_cs(i_times(pi() / 2) * log(e.z));
}

CSValue cs_expected(const TorusKnot& K, long k, const Complex& xi) {
    const Complex u = xi - i_times(2 * pi());
    return reduce_cs(S(K, k, xi) - i_times(pi()) * u - u * v_k(K, k, u) / Real(4));
}

Real cs_distance(const CSValue& a, const CSValue& b) {
    const Real p2 = pi() * pi();
    Real d = a.value.re - b.value.re;
    d -= boost::multiprecision::round(d / p2) * p2;
    Real di = a.value.im - b.value.im;
    return boost::multiprecision::sqrt(d * d + di * di);
}

Real torsion_lambda(const TorusKnot& K, long alpha, long beta) {
    validate(K);
    if (alpha < 1 || alpha > K.a - 1 || beta < 1 || beta > K.b - 1)
        throw Error(ErrorCode::invalid_argument, "alpha or beta out of range");
    Real sa = boost::multiprecision::sin(pi() * alpha / Real(K.a));
    Real sb = boost::multiprecision::sin(pi() * beta / Real(K.b));
    return 16 * sa * sa * sb * sb / Real(K.a * K.a * K.b * K.b);
}

TorsionMu torsion_mu(const TorusKnot& K, long alpha, long beta) {
    return {Real(K.a * K.b) * torsion_lambda(K, alpha, beta), false};
}

}  // namespace torusasym
