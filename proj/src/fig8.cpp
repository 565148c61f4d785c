#include "torusasym/fig8.hpp"
#include "torusasym/error.hpp"
#include "torusasym/jones.hpp"

#include <algorithm>
#include <cmath>

namespace torusasym {

namespace {

bool is_zero(const Complex& z) { return z.re == 0 && z.im == 0; }

Real small_guard() { return boost::multiprecision::pow(Real(10), -current_digits() / 2); }

}  // namespace

MeridianParam meridian_param(const Complex& m) {
    if (is_zero(m)) throw Error(ErrorCode::invalid_argument, "m must be nonzero");
    Complex w = m + Complex(1) / m;
    return {m, sqrt((w + Complex(1)) * (w - Complex(3)))};
}

Complex fig8_trace_poly(const Complex& m) {
    Complex mi = Complex(1) / m;
    return m * m - m - Complex(2) - mi + mi * mi;
}

Complex ell(const MeridianParam& mp) {
    Complex mi = Complex(1) / mp.m;
    return fig8_trace_poly(mp.m) / Real(2) + (mp.m - mi) / Real(2) * mp.sqrt_disc;
}

Complex a_poly_residual(const Complex& m, const Complex& l) {
    if (is_zero(m) || is_zero(l)) throw Error(ErrorCode::invalid_argument, "m and l must be nonzero");
    return l - fig8_trace_poly(m) + Complex(1) / l;
}

Complex dell_dm(const MeridianParam& mp) {
    Complex l = ell(mp);
    Complex mi = Complex(1) / mp.m;
    Complex num = Real(2) * mp.m - Complex(1) + mi * mi - Real(2) * mi * mi * mi;
    Complex den = Complex(1) - Complex(1) / (l * l);
    if (abs(den) < small_guard()) throw Error(ErrorCode::degenerate_denominator, "l(m)^2 = 1");
    return num / den;
}

Complex dv_du(const MeridianParam& mp, int sign) {
    return Real(2 * sign) * mp.m * dell_dm(mp) / ell(mp);
}

Complex torsion_lambda_E(const MeridianParam& mp) {
    Complex d = Real(2) * mp.m + Real(2) / mp.m - Complex(1);
    if (abs(d) < small_guard()) throw Error(ErrorCode::degenerate_denominator, "2m + 2/m - 1 vanishes");
    return Complex(1) / d;
}

Complex torsion_lambda_E_trace(const MeridianParam& mp, int* branch_sign) {
    Complex l = ell(mp);
    Complex root = sqrt(Complex(17) + Real(4) * (l + Complex(1) / l));
    Complex d = Real(2) * mp.m + Real(2) / mp.m - Complex(1);
    int s = abs(root - d) <= abs(root + d) ? 1 : -1;
    if (branch_sign) *branch_sign = s;
    if (abs(root) < small_guard()) throw Error(ErrorCode::degenerate_denominator, "17 + 4 Tr vanishes");
    return Complex(Real(s)) / root;
}

Complex torsion_mu_E(const MeridianParam& mp, int sign) {
    if (abs(mp.sqrt_disc) < small_guard())
        throw Error(ErrorCode::degenerate_discriminant, "(m+1/m+1)(m+1/m-3) vanishes");
    return Complex(Real(2 * sign)) / mp.sqrt_disc;
}

Complex alexander_fig8(const Complex& t) {
    if (is_zero(t)) throw Error(ErrorCode::invalid_argument, "t must be nonzero");
    return Complex(3) - t - Complex(1) / t;
}

Complex fig8_jones(long N, const Complex& xi, const Precision& p) {
    validate(p);
    if (N < 1) throw Error(ErrorCode::invalid_argument, "N must be positive");
    const int need = static_cast<int>(std::ceil(-std::log10(p.target_rel_tol))) + 3;
    int wd = p.working_digits;
    for (int attempt = 0;; ++attempt) {
        PrecisionScope scope(wd);
        const Complex step = xi / Real(2 * N);
        Complex sum(1), prod(1);
        Real big = 1;
        for (long k = 1; k < N; ++k) {
            prod *= Real(4) * sinh(step * Real(N + k)) * sinh(step * Real(N - k));
            sum += prod;
            big = std::max(big, abs(prod));
        }
        Real mag = abs(sum);
        double lost = mag == 0 ? 1e9 : std::max(0.0, boost::multiprecision::log10(big / mag).convert_to<double>());
        if (wd - lost >= need || attempt == 5) return sum;
        wd = std::max(2 * wd, need + static_cast<int>(std::ceil(lost)) + 10);
    }
}

SpeculationTable speculation_residual(const Complex& xi, const std::vector<long>& N_list, const Precision& p) {
    validate(p);
    if (N_list.size() < 2) throw Error(ErrorCode::extrapolation_unstable, "need at least two N values");
    PrecisionScope scope(p.working_digits);
    const Real two_pi = 2 * pi();
    const Complex u = xi - Complex(Real(0), two_pi);
    const MeridianParam mp = meridian_param(exp(u));
    const Complex sqrtT = sqrt(torsion_mu_E(mp));
    const Complex sqrt_minus_pi = sqrt(Complex(-pi()));
    const Complex two_sinh = Real(2) * sinh(xi / Real(2));
    const Complex target = two_sinh / alexander_fig8(exp(xi));

    std::vector<Complex> J(N_list.size()), r(N_list.size());
    for (size_t i = 0; i < N_list.size(); ++i) {
        long N = N_list[i];
        J[i] = fig8_jones(N, xi, p);
        Complex J1 = fig8_jones(N + 1, xi, p);
        r[i] = log(J1 / J[i]) - log(Complex(Real(N + 1) / Real(N))) / Real(2);
        if (i > 0) {  // keep the branch continuous across N
            Real jump = boost::multiprecision::round((r[i].im - r[i - 1].im) / two_pi);
            r[i].im -= jump * two_pi;
        }
    }

    // Neville extrapolation of r(1/N) to 1/N = 0
    std::vector<Complex> tab = r;
    Complex prev_diag = tab.back();
    for (size_t level = 1; level < tab.size(); ++level) {
        for (size_t i = tab.size() - 1; i >= level; --i) {
            Real xi_ = Real(1) / Real(N_list[i]), xl = Real(1) / Real(N_list[i - level]);
            tab[i] = (tab[i] * xl - tab[i - 1] * xi_) / (xl - xi_);
        }
        if (level == tab.size() - 2) prev_diag = tab.back();
    }
    SpeculationTable out;
    out.xi = xi;
    out.h_estimate = tab.back();
    out.h_uncertainty = tab.size() > 2 ? abs(tab.back() - prev_diag) : abs(r.back() - r.front());
    if (!isfinite(out.h_estimate) ||
        !(out.h_uncertainty <= Real("1e-2") * std::max(Real(1), abs(out.h_estimate))))
        throw Error(ErrorCode::extrapolation_unstable, "H(u) estimates do not settle");

    for (size_t i = 0; i < N_list.size(); ++i) {
        const long N = N_list[i];
        SpeculationRow row;
        row.N = N;
        row.jones = J[i];
        const Complex nu = unknot_bracket(N, xi, p).nu;
        const Complex growth = sqrt_minus_pi * exp(out.h_estimate * Real(N)) * sqrt(Complex(Real(N)) / xi);
        const Complex lhs_base = J[i] * two_sinh;
        row.lhs_bracket = lhs_base / nu - growth * sqrtT;
        row.lhs_bracket_nu1 = lhs_base - growth * sqrtT;
        row.target = target;
        row.residual = abs(row.lhs_bracket - target) / abs(target);
        row.residual_nu1 = abs(row.lhs_bracket_nu1 - target) / abs(target);
        row.amplitude_ratio = lhs_base / nu / growth / sqrtT;
        out.rows.push_back(row);
    }
    return out;
}

}  // namespace torusasym
