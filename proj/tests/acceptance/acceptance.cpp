#include "torusasym/asymptotics.hpp"
#include "torusasym/fig8.hpp"
#include "torusasym/harness.hpp"
#include "torusasym/jones.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace torusasym;

namespace {

// Pinned tolerances.
constexpr double kOracleRel = 1e-6;
constexpr double kOracleSeconds = 120;
constexpr double kSlopeRelTol = 0.10;
constexpr double kGrowthExponent = 1.5, kGrowthTol = 0.15;
constexpr double kKtResidual = 1e-2;
constexpr double kLimitFactor = 4;
constexpr double kTk = 1e-13;
constexpr double kCs = 1e-10;
constexpr double kSin2 = 1e-12;
constexpr double kFig8 = 1e-12;
constexpr double kFig8Fd = 1e-8;

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

std::string fix(double x, int d = 3) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*f", d, x);
    return buf;
}

double d(const Real& x) { return static_cast<double>(x); }

double log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) mx += std::log(x[i]), my += std::log(y[i]);
    mx /= x.size();
    my /= y.size();
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

struct Line {
    bool pass;
    std::string text;
};

struct Report {
    std::vector<Line> lines;
    std::vector<std::string> info;
    double oracle_seconds = 0;

    std::string body() const {
        std::ostringstream o;
        for (size_t i = 0; i < lines.size(); ++i)
            o << (lines[i].pass ? "[PASS] " : "[FAIL] ") << i + 1 << " " << lines[i].text << "\n";
        for (const auto& s : info) o << "  " << s << "\n";
        return o.str();
    }
    bool all_pass() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

Line oracle_equivalence(const Precision& p, double& seconds) {
    const TorusKnot knots[] = {{2, 3}, {2, 5}, {3, 5}};
    const Complex xis[] = {Complex(1), Complex(1, 2), Complex(-0.5, 3)};
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0;
    long cases = 0;
    std::string where;
    for (const auto& K : knots)
        for (const auto& xi : xis)
            for (long N = 2; N <= 30; ++N) {
                Complex I = jones_integral(K, {xi, N}, p);
                Complex S = jones_sum_oracle(K, N, xi, p);
                double r = d(abs(I - S) / abs(S));
                ++cases;
                if (r > worst) {
                    worst = r;
                    where = "(" + std::to_string(K.a) + "," + std::to_string(K.b) + ") N=" + std::to_string(N);
                }
            }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = worst < kOracleRel && seconds < kOracleSeconds;
    return {pass, "oracle equivalence: " + std::to_string(cases) + " cases, max rel diff " + sci(worst) + " at " + where +
                      " (tol " + sci(kOracleRel) + ", runtime " + (seconds < kOracleSeconds ? "<" : ">=") + " " +
                      fix(kOracleSeconds, 0) + " s)"};
}

Line residual_decay(const Precision& p) {
    const std::vector<double> Ns{100, 200, 400, 800};
    bool pass = true;
    std::string text = "residual decay at xi=1, (2,3):";
    for (int J = 0; J <= 2; ++J) {
        std::vector<double> res;
        for (double N : Ns) res.push_back(d(expand({{2, 3}, Complex(1), static_cast<long>(N), J}, p).residual));
        double s = log_slope(Ns, res);
        double want = -(J + 1);
        bool ok = std::abs(s - want) <= kSlopeRelTol * std::abs(want);
        pass = pass && ok;
        text += " J=" + std::to_string(J) + " slope " + fix(s) + " (want " + fix(want, 0) + ")";
    }
    return {pass, text + " tol 10%"};
}

Line pole_case(const Precision& p) {
    const Complex xi(Real(0), pi() / 3);
    bool pass = true;
    double prev = INFINITY;
    std::string text = "pole case xi=pi i/3, (2,3): residuals";
    for (long N : {100, 200, 400, 800}) {
        auto r = expand({{2, 3}, xi, N, 0}, p);
        double v = d(r.residual);
        pass = pass && r.case_tag == CaseTag::pole_case && v < prev;
        prev = v;
        text += " " + sci(v);
    }
    return {pass, text + " (strictly decreasing)"};
}

Line kt_expansion(const Precision& p) {
    const TorusKnot K{2, 3};
    const Complex xi(Real(0), 2 * pi());
    std::vector<double> Ns{100, 200, 400, 800, 1600, 2000}, mag;
    for (double N : Ns) mag.push_back(d(abs(jones_sum_oracle(K, static_cast<long>(N), xi, p))));
    double g = log_slope(Ns, mag);
    double res = d(expand_kt_2pii(K, 2000, 3, p).residual);
    bool pass = std::abs(g - kGrowthExponent) <= kGrowthTol && res < kKtResidual;
    return {pass, "2 pi i expansion, (2,3): growth exponent " + fix(g) + " (want 1.5 +- 0.15), relative residual at N=2000 " +
                      sci(res) + " (tol " + sci(kKtResidual) + ")"};
}

Line convergence_limit(const Precision& p) {
    const TorusKnot K{2, 3};
    bool pass = true;
    std::string text = "limit 1/Delta, (2,3):";
    for (Complex xi : {Complex(1), Complex(-0.05, 0.1)}) {
        Complex lim = Complex(1) / alexander(K, exp(xi));
        double e100 = d(abs(jones_integral(K, {xi, 100}, p) - lim));
        double e800 = d(abs(jones_integral(K, {xi, 800}, p) - lim));
        double f = e100 / e800;
        pass = pass && f >= kLimitFactor;
        text += " xi=" + to_string(xi, 6) + " error " + sci(e100) + " -> " + sci(e800) + " (factor " + fix(f, 2) + ")";
    }
    return {pass, text + " want factor >= 4"};
}

Line pinned(const VerifyCheck& c, double tol, const std::string& label) {
    bool pass = c.passed && c.max_deviation < tol;
    return {pass, label + ": " + std::to_string(c.samples) + " samples, max dev " + sci(c.max_deviation) + " (tol " +
                      sci(tol) + ")"};
}

Line cs_equality() {
    VerifyCheck eq = check_cs_equality(35, 5);
    VerifyCheck eps = check_cs_epsilon(35, 5);
    bool pass = eq.passed && eq.max_deviation < kCs && eps.passed && eps.max_deviation < kCs;
    return {pass, "CS equality ab<=35, 5 u per k: " + std::to_string(eq.samples) + " samples, max dev " +
                      sci(eq.max_deviation) + "; epsilon +-1: max dev " + sci(eps.max_deviation) + " (tol " + sci(kCs) +
                      ")"};
}

Line combinatorics() {
    VerifyCheck cc = check_component_count(105);
    VerifyCheck tt = check_two_to_one(105);
    VerifyCheck rt = check_crt_round_trip(105);
    VerifyCheck s2 = check_sin2_invariance(105);
    bool pass = cc.passed && tt.passed && rt.passed && s2.passed && s2.max_deviation < kSin2;
    return {pass, "character variety ab<=105: component count over " + std::to_string(cc.samples) + " knots, two-to-one over " +
                      std::to_string(tt.samples) + " components, sin^2 max dev " + sci(s2.max_deviation) + " (tol " +
                      sci(kSin2) + ")"};
}

Line figure_eight(const Precision& p, std::vector<std::string>& info) {
    double apoly = 0, torsion = 0;
    for (int j = 0; j < 20; ++j) {
        Complex m = polar(Real("1.3"), 2 * pi() * (Real(j) + Real("0.5")) / 20);
        auto mp = meridian_param(m);
        apoly = std::max(apoly, d(abs(a_poly_residual(m, ell(mp)))));
        torsion = std::max(torsion, d(abs(torsion_lambda_E_trace(mp) - torsion_lambda_E(mp))));
    }
    Real h("1e-6");
    Complex fd = (ell(meridian_param(Complex(Real("1.5") + h))) - ell(meridian_param(Complex(Real("1.5") - h)))) / (2 * h);
    Complex cl = dell_dm(meridian_param(Complex(Real("1.5"))));
    double fde = d(abs(fd - cl) / abs(cl));
    bool pass = apoly < kFig8 && torsion < kFig8 && fde < kFig8Fd;

    const Complex xi = Complex(Real("0.1"), 2 * pi());
    auto t = speculation_residual(xi, {200, 400, 800, 1600, 3200}, p);
    info.push_back("figure-eight speculation at xi = 2 pi i + 0.1 (descriptive, not asserted): H(u)/xi ~ " +
                   to_string(t.h_estimate, 12) + " +- " + sci(d(t.h_uncertainty)));
    for (const auto& r : t.rows)
        info.push_back("  N=" + std::to_string(r.N) + " residual " + to_string(r.residual, 4) + " residual(nu=1) " +
                       to_string(r.residual_nu1, 4) + " amplitude ratio " + fix(d(r.amplitude_ratio.re), 6) + (r.amplitude_ratio.im < 0 ? "" : "+") +
                       fix(d(r.amplitude_ratio.im), 6) + "i");

    return {pass, "figure-eight: A-polynomial residual " + sci(apoly) + ", torsion displays " + sci(torsion) + " on 20 points (tol " +
                      sci(kFig8) + "); dl/dm vs difference at m=1.5 " + sci(fde) + " (tol " + sci(kFig8Fd) + ")"};
}

Report run_all(const Precision& p) {
    PrecisionScope scope(p.working_digits);
    Report r;
    r.lines.push_back(oracle_equivalence(p, r.oracle_seconds));
    r.lines.push_back(residual_decay(p));
    r.lines.push_back(pole_case(p));
    r.lines.push_back(kt_expansion(p));
    r.lines.push_back(convergence_limit(p));
    r.lines.push_back(pinned(check_tk_identity(35), kTk, "T_k = ab T_lambda for ab<=35"));
    r.lines.push_back(cs_equality());
    r.lines.push_back(combinatorics());
    r.lines.push_back(figure_eight(p, r.info));
    return r;
}

}  // namespace

int main() {
    Precision p = precision_for_digits(30);
    Report first = run_all(p);
    Report second = run_all(p);
    const std::string a = first.body(), b = second.body();
    bool same = a == b;

    std::vector<Line> lines = first.lines;
    lines.push_back({same, "determinism: two in-process runs of criteria 1-9 give " +
                               std::string(same ? "byte-identical" : "different") + " reports (" +
                               std::to_string(a.size()) + " bytes)"});
    bool all = same && first.all_pass();
    for (size_t i = 0; i < lines.size(); ++i)
        std::cout << (lines[i].pass ? "[PASS] " : "[FAIL] ") << i + 1 << " " << lines[i].text << "\n";
    for (const auto& s : first.info) std::cout << "INFO " << s << "\n";
    std::cout << "INFO oracle sweep wall time " << fix(first.oracle_seconds, 1) << " s and " << fix(second.oracle_seconds, 1)
              << " s\n";
    std::cout << (all ? "acceptance: PASS" : "acceptance: FAIL") << "\n";
    return all ? 0 : 1;
}
