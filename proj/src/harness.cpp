#include "torusasym/harness.hpp"
#include "torusasym/cs_torsion.hpp"
#include "torusasym/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

namespace torusasym {

using nlohmann::json;

namespace {

json num(const Real& x, int digits) {
    if (digits > 17) return to_string(x, digits);
    return x.convert_to<double>();
}

json cnum(const Complex& z, int digits) { return json{{"re", num(z.re, digits)}, {"im", num(z.im, digits)}}; }

std::string fmt(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string fmt17(const Real& x) { return to_string(x, 17); }

long parse_long(const std::string& s) {
    size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw Error(ErrorCode::parse_error, "not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw Error(ErrorCode::parse_error, "not an integer: '" + s + "'");
    return v;
}

Real unit_draw(std::mt19937_64& g) { return Real(static_cast<double>(g() >> 11) * 0x1.0p-53); }

Complex random_u(long a, long b, long k, int i) {
    std::mt19937_64 g(0x70125a5ULL ^ static_cast<unsigned long long>(a * 1000003 + b * 1009 + k * 31 + i));
    Real x = unit_draw(g), y = unit_draw(g);
    return Complex(2 * x - 1, 2 * y - 1);
}

VerifyCheck finish(VerifyCheck c) {
    if (c.asserted) c.passed = c.max_deviation <= c.tolerance;
    return c;
}

int scope_digits() { return std::max(30, current_digits()); }

}  // namespace

std::vector<long> parse_n_range(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() == 1) {
        long v = parse_long(parts[0]);
        if (v < 1) throw Error(ErrorCode::parse_error, "N must be positive");
        return {v};
    }
    if (parts.size() != 3 || parts[2].size() < 2)
        throw Error(ErrorCode::parse_error, "N range must be start:stop:xF or start:stop:+D");
    long start = parse_long(parts[0]), stop = parse_long(parts[1]);
    long step = parse_long(parts[2].substr(1));
    if (start < 1 || stop < start) throw Error(ErrorCode::parse_error, "N range needs 1 <= start <= stop");
    std::vector<long> out;
    if (parts[2][0] == 'x') {
        if (step < 2) throw Error(ErrorCode::parse_error, "geometric factor must be at least 2");
        for (long n = start; n <= stop; n *= step) out.push_back(n);
    } else if (parts[2][0] == '+') {
        if (step < 1) throw Error(ErrorCode::parse_error, "arithmetic step must be positive");
        for (long n = start; n <= stop; n += step) out.push_back(n);
    } else {
        throw Error(ErrorCode::parse_error, "N range step must start with 'x' or '+'");
    }
    return out;
}

std::vector<TorusKnot> knots_up_to(long bound) {
    std::vector<TorusKnot> out;
    for (long a = 2; a * 3 <= bound; ++a)
        for (long b = 3; a * b <= bound; b += 2)
            if (is_valid({a, b})) out.push_back({a, b});
    std::sort(out.begin(), out.end(), [](const TorusKnot& x, const TorusKnot& y) {
        return x.a * x.b != y.a * y.b ? x.a * x.b < y.a * y.b : x.a < y.a;
    });
    return out;
}

Precision precision_for_digits(int digits) {
    Precision p;
    p.working_digits = digits;
    p.target_rel_tol = std::max(1e-15, std::pow(10.0, 2 - digits));
    return p;
}

std::string number_text(const Real& x, int digits) {
    if (digits > 17) return to_string(x, digits);
    return fmt(x.convert_to<double>());
}

std::string eval_json(const TorusKnot& K, long N, const std::string& xi_text, JonesMethod method, const Precision& p) {
    validate(K);
    validate(p);
    PrecisionScope scope(p.working_digits);
    Complex xi = parse_complex(xi_text);
    JonesValue v = jones_eval(K, EvalPoint{xi, N}, method, p);
    const int d = p.working_digits;
    json j;
    j["a"] = K.a;
    j["b"] = K.b;
    j["N"] = N;
    j["xi"] = xi_text;
    j["method"] = method_name(v.method);
    j["value_re"] = num(v.value.re, d);
    j["value_im"] = num(v.value.im, d);
    j["abs"] = num(abs(v.value), d);
    j["precision_digits"] = d;
    return j.dump(2) + "\n";
}

ExpansionReport expand_routed(const TorusKnot& K, const Complex& xi, long N, int J, const Precision& p,
                              double kt_guard) {
    PrecisionScope scope(p.working_digits);
    if (abs(xi - Complex(Real(0), 2 * pi())) <= Real(kt_guard)) return expand_kt_2pii(K, N, J, p);
    return expand(ExpansionSpec{K, xi, N, J}, p);
}

std::string expansion_json(const std::vector<ExpansionReport>& reports, int digits) {
    json arr = json::array();
    for (const auto& r : reports) {
        json j;
        j["case_tag"] = case_name(r.case_tag);
        j["a"] = r.knot.a;
        j["b"] = r.knot.b;
        j["N"] = r.N;
        j["J"] = r.J;
        j["xi"] = cnum(r.xi, digits);
        j["prefactor"] = cnum(r.prefactor, digits);
        j["leading"] = cnum(r.leading, digits);
        json terms = json::array();
        for (const auto& t : r.exp_terms)
            terms.push_back({{"k", t.k}, {"value", cnum(t.value, digits)}, {"weight", num(t.weight, digits)},
                             {"contribution", cnum(t.contribution, digits)}});
        j["exp_terms"] = terms;
        json corr = json::array();
        for (const auto& c : r.corrections) corr.push_back(cnum(c, digits));
        j["corrections"] = corr;
        j["approximant"] = cnum(r.approximant, digits);
        j["oracle"] = cnum(r.oracle, digits);
        j["residual"] = num(r.residual, digits);
        j["residual_kind"] = r.residual_relative ? "relative" : "absolute";
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string expansion_csv(const std::vector<ExpansionReport>& reports) {
    std::string out = "N,oracle_abs,approx_abs,residual,case_tag\n";
    for (const auto& r : reports)
        out += std::to_string(r.N) + "," + fmt17(abs(r.oracle)) + "," + fmt17(abs(r.approximant)) + "," +
               fmt17(r.residual) + "," + case_name(r.case_tag) + "\n";
    return out;
}

bool VerifyReport::passed() const {
    for (const auto& c : checks)
        if (c.asserted && !c.passed) return false;
    return true;
}

VerifyCheck check_component_count(long bound) {
    VerifyCheck c{"component_count=(a-1)(b-1)/2", 0, 0, 0, true, true, ""};
    for (const auto& K : knots_up_to(bound)) {
        long want = (K.a - 1) * (K.b - 1) / 2;
        long got = static_cast<long>(enumerate_components(K).size());
        c.max_deviation = std::max(c.max_deviation, double(std::labs(got - want)));
        ++c.samples;
    }
    return finish(c);
}

VerifyCheck check_two_to_one(long bound) {
    VerifyCheck c{"k_to_alpha_beta_two_to_one", 0, 0, 0, true, true, ""};
    for (const auto& K : knots_up_to(bound)) {
        long total = 0;
        for (const auto& comp : enumerate_components(K)) {
            c.max_deviation = std::max(c.max_deviation, double(std::labs(long(comp.preimages.size()) - 2)));
            total += static_cast<long>(comp.preimages.size());
            ++c.samples;
        }
        c.max_deviation = std::max(c.max_deviation, double(std::labs(total - (K.a - 1) * (K.b - 1))));
    }
    return finish(c);
}

VerifyCheck check_crt_round_trip(long bound) {
    VerifyCheck c{"crt_round_trip_and_parity", 0, 0, 0, true, true, ""};
    long minus_k = 0;
    for (const auto& K : knots_up_to(bound)) {
        const long ab = K.a * K.b;
        for (long k : pole_indices(K, ab - 1)) {
            RepIndex r = rep_index(K, k);
            bool ok = (r.alpha - r.beta) % 2 == 0;
            ok = ok && mod(r.k1, K.a) == r.alpha && mod(r.k1, K.b) == mod(-r.beta, K.b);
            ok = ok && mod(r.k2, K.a) == r.alpha && mod(r.k2, K.b) == r.beta;
            // k is one of the pair; the other is k mod a, -k mod b
            long other = r.k1 == k ? r.k2 : r.k1;
            ok = ok && (r.k1 == k || r.k2 == k);
            ok = ok && other == crt(mod(k, K.a), K.a, mod(-k, K.b), K.b);
            if (other == ab - k) ++minus_k;
            if (!ok) c.max_deviation += 1;
            ++c.samples;
        }
    }
    c.note = "the partner equals -k mod ab for " + std::to_string(minus_k) + " of " + std::to_string(c.samples) +
             " k (all with a = 2)";
    return finish(c);
}

VerifyCheck check_sin2_invariance(long bound, double perturb) {
    PrecisionScope scope(scope_digits());
    VerifyCheck c{"sin2(alpha pi/a)sin2(beta pi/b)=sin2(k pi/a)sin2(k pi/b)", 0, 0, 1e-12, true, true, ""};
    const Real pie = pi();
    auto s2 = [&](long n, long d) {
        Real s = boost::multiprecision::sin(pie * n / Real(d));
        return s * s;
    };
    for (const auto& K : knots_up_to(bound)) {
        for (long k : pole_indices(K, K.a * K.b - 1)) {
            AlphaBeta ab = alpha_beta_from_k(K, k);
            Real lhs = s2(ab.alpha, K.a) * s2(ab.beta, K.b) + Real(perturb);
            Real rhs = s2(k, K.a) * s2(k, K.b);
            c.max_deviation = std::max(c.max_deviation, boost::multiprecision::abs(lhs - rhs).convert_to<double>());
            ++c.samples;
        }
    }
    return finish(c);
}

VerifyCheck check_tk_identity(long bound, double perturb) {
    PrecisionScope scope(scope_digits());
    VerifyCheck c{"T_k=ab*T_lambda(alpha,beta)=|T_mu|", 0, 0, 1e-13, true, true, ""};
    for (const auto& K : knots_up_to(bound)) {
        for (long k : pole_indices(K, K.a * K.b - 1)) {
            AlphaBeta ab = alpha_beta_from_k(K, k);
            Real tk = T(K, k) + Real(perturb);
            Real d1 = boost::multiprecision::abs(tk - Real(K.a * K.b) * torsion_lambda(K, ab.alpha, ab.beta));
            Real d2 = boost::multiprecision::abs(tk - torsion_mu(K, ab.alpha, ab.beta).abs_value);
            c.max_deviation = std::max(c.max_deviation, std::max(d1, d2).convert_to<double>());
            ++c.samples;
        }
    }
    return finish(c);
}

VerifyCheck check_cs_equality(long bound, int samples_per_k, double perturb) {
    PrecisionScope scope(scope_digits());
    VerifyCheck c{"cs_closed_form~transported cd-form element (half-integer shift lattice), CS mod pi^2", 0, 0, 1e-10, true, true, ""};
    const Complex two_pi_i(Real(0), 2 * pi());
    EquivalenceOptions opt;
    opt.lattice = ShiftLattice::half;
    for (const auto& K : knots_up_to(bound)) {
        for (long k : pole_indices(K, K.a * K.b - 1)) {
            AlphaBeta ab = alpha_beta_from_k(K, k);
            for (int i = 0; i < samples_per_k; ++i) {
                Complex u = random_u(K.a, K.b, k, i);
                Complex xi = u + two_pi_i;
                BundleElement cf = cs_closed_form(K, k, xi);
                BundleElement dk = cs_dubois_kashaev(K, ab.alpha, ab.beta, 1, u);
                double dev;
                try {
                    Equivalence w = equivalence_word(dk, cf, opt);
                    dev = w.equivalent ? w.z_deviation.convert_to<double>() : 1.0;
                    if (w.uses_b || w.x_shift != 0 || w.y_shift != dk_transport_shift(K, k)) dev = 1.0;
                } catch (const Error&) {
                    dev = 1.0;
                }
                Complex v = v_k(K, k, u);
                CSValue got = cs_extract(transport_dk(K, k, dk), u, v);
                got.value.re += Real(perturb);
                CSValue want = cs_expected(K, k, xi);
                dev = std::max(dev, cs_distance(got, want).convert_to<double>());
                dev = std::max(dev, cs_distance(cs_extract(cf, u, v), want).convert_to<double>());
                c.max_deviation = std::max(c.max_deviation, dev);
                ++c.samples;
            }
        }
    }
    return finish(c);
}

VerifyCheck check_cs_epsilon(long bound, int samples_per_k) {
    PrecisionScope scope(scope_digits());
    VerifyCheck c{"cd-form element epsilon=+1 vs epsilon=-1", 0, 0, 1e-12, true, true, ""};
    for (const auto& K : knots_up_to(bound)) {
        for (long k : pole_indices(K, K.a * K.b - 1)) {
            AlphaBeta ab = alpha_beta_from_k(K, k);
            for (int i = 0; i < samples_per_k; ++i) {
                Complex u = random_u(K.a, K.b, k, i);
                BundleElement p = cs_dubois_kashaev(K, ab.alpha, ab.beta, 1, u);
                BundleElement m = cs_dubois_kashaev(K, ab.alpha, ab.beta, -1, u);
                Real d = abs(p.z - m.z) / abs(p.z) + abs(p.s - m.s) + abs(p.t - m.t);
                c.max_deviation = std::max(c.max_deviation, d.convert_to<double>());
                ++c.samples;
            }
        }
    }
    return finish(c);
}

VerifyCheck check_cs_strict_group(long bound, int samples_per_k) {
    PrecisionScope scope(scope_digits());
    VerifyCheck c{"cs equivalence under the integral group G (recorded)", 0, 0, 0, true, true, ""};
    c.asserted = false;
    long strict = 0, same_parity = 0;
    const Complex two_pi_i(Real(0), 2 * pi());
    for (const auto& K : knots_up_to(bound)) {
        for (long k : pole_indices(K, K.a * K.b - 1)) {
            AlphaBeta ab = alpha_beta_from_k(K, k);
            for (int i = 0; i < samples_per_k; ++i) {
                Complex u = random_u(K.a, K.b, k, i);
                BundleElement cf = cs_closed_form(K, k, u + two_pi_i);
                BundleElement dk = cs_dubois_kashaev(K, ab.alpha, ab.beta, 1, u);
                try {
                    if (equivalence_word(dk, cf).equivalent) ++strict;
                } catch (const Error&) {
                }
                if ((k - K.a * K.b) % 2 == 0) ++same_parity;
                ++c.samples;
            }
        }
    }
    c.note = std::to_string(strict) + " of " + std::to_string(c.samples) + " pairs are integral-G equivalent; " +
             std::to_string(same_parity) + " have k = ab mod 2";
    return c;
}

VerifyCheck check_cs_partner(long bound) {
    PrecisionScope scope(scope_digits());
    VerifyCheck c{"closed forms of the two preimages k, k' of one (alpha,beta) (recorded)", 0, 0, 0, true, true, ""};
    c.asserted = false;
    long half_eq = 0, non_lattice = 0;
    const Complex two_pi_i(Real(0), 2 * pi());
    EquivalenceOptions opt;
    opt.lattice = ShiftLattice::half;
    for (const auto& K : knots_up_to(bound)) {
        for (const auto& comp : enumerate_components(K)) {
            long k = comp.preimages[0], kp = comp.preimages[1];
            Complex xi = random_u(K.a, K.b, k, 0) + two_pi_i;
            try {
                if (equivalence_word(cs_closed_form(K, k, xi), cs_closed_form(K, kp, xi), opt).equivalent) ++half_eq;
            } catch (const Error&) {
                ++non_lattice;
            }
            ++c.samples;
        }
    }
    c.note = std::to_string(half_eq) + " of " + std::to_string(c.samples) +
             " components give half-lattice equivalent elements; " + std::to_string(non_lattice) +
             " differ by a non-lattice shift";
    return c;
}

VerifyCheck check_g_relations(int samples) {
    PrecisionScope scope(scope_digits());
    VerifyCheck c{"G relations XYX^-1Y^-1, XBXB, YBYB, B^2", 0, 0, 1e-12, true, true, ""};
    std::mt19937_64 g(0x6e1a7ULL);
    auto draw = [&] { return Complex(4 * unit_draw(g) - 2, 4 * unit_draw(g) - 2); };
    auto dist = [](const BundleElement& x, const BundleElement& y) {
        return (abs(x.s - y.s) + abs(x.t - y.t) + abs(x.z - y.z) / abs(y.z)).convert_to<double>();
    };
    const Real one(1), minus(-1);
    for (int i = 0; i < samples; ++i) {
        BundleElement e{draw(), draw(), exp(draw())};
        BundleElement w1 = y_power(x_power(y_power(x_power(e, minus), minus), one), one);
        BundleElement w2 = g_act(Generator::B, g_act(Generator::X, g_act(Generator::B, g_act(Generator::X, e))));
        BundleElement w3 = g_act(Generator::B, g_act(Generator::Y, g_act(Generator::B, g_act(Generator::Y, e))));
        BundleElement w4 = g_act(Generator::B, g_act(Generator::B, e));
        for (const auto& w : {w1, w2, w3, w4}) c.max_deviation = std::max(c.max_deviation, dist(w, e));
        ++c.samples;
    }
    return finish(c);
}

VerifyCheck check_vk_derivative(long bound) {
    PrecisionScope scope(scope_digits());
    VerifyCheck c{"v_k(u)=2 dS_k/dxi - 2 pi i", 0, 0, 1e-12, true, true, ""};
    const Complex two_pi_i(Real(0), 2 * pi());
    for (const auto& K : knots_up_to(bound)) {
        for (long k : pole_indices(K, K.a * K.b - 1)) {
            Complex u = random_u(K.a, K.b, k, 7);
            Real d = abs(v_k(K, k, u) - (Real(2) * dS_dxi(K, k, u + two_pi_i) - two_pi_i));
            c.max_deviation = std::max(c.max_deviation, d.convert_to<double>());
            ++c.samples;
        }
    }
    return finish(c);
}

VerifyReport run_verify(long bound, double perturb, const Precision& p) {
    validate(p);
    if (bound < 6) throw Error(ErrorCode::invalid_argument, "bound must be at least 6");
    PrecisionScope scope(p.working_digits);
    VerifyReport r;
    r.bound = bound;
    r.perturb = perturb;
    r.checks.push_back(check_component_count(bound));
    r.checks.push_back(check_two_to_one(bound));
    r.checks.push_back(check_crt_round_trip(bound));
    r.checks.push_back(check_sin2_invariance(bound, perturb));
    r.checks.push_back(check_tk_identity(bound, perturb));
    r.checks.push_back(check_vk_derivative(bound));
    r.checks.push_back(check_cs_equality(bound, 5, perturb));
    r.checks.push_back(check_cs_epsilon(bound, 5));
    r.checks.push_back(check_g_relations(50));
    r.checks.push_back(check_cs_strict_group(bound, 5));
    r.checks.push_back(check_cs_partner(bound));
    return r;
}

std::string verify_json(const VerifyReport& r) {
    json j;
    j["bound"] = r.bound;
    j["perturb"] = r.perturb;
    j["passed"] = r.passed();
    json arr = json::array();
    for (const auto& c : r.checks) {
        json e{{"identity", c.identity}, {"samples", c.samples}, {"max_deviation", c.max_deviation},
               {"tolerance", c.tolerance}, {"asserted", c.asserted}, {"passed", c.passed}};
        if (!c.note.empty()) e["note"] = c.note;
        arr.push_back(e);
    }
    j["checks"] = arr;
    return j.dump(2) + "\n";
}

std::string verify_text(const VerifyReport& r) {
    std::string out;
    for (const auto& c : r.checks) {
        std::string tag = !c.asserted ? "INFO" : c.passed ? "PASS" : "FAIL";
        out += tag + " " + c.identity + " samples=" + std::to_string(c.samples);
        if (c.asserted) out += " max_dev=" + fmt(c.max_deviation) + " tol=" + fmt(c.tolerance);
        if (!c.note.empty()) out += " (" + c.note + ")";
        out += "\n";
    }
    out += r.passed() ? "verify: PASS\n" : "verify: FAIL\n";
    return out;
}

std::string region_csv(const TorusKnot& K, const RegionGrid& g) {
    validate(K);
    if (!(g.step > 0) || g.re_max < g.re_min || g.im_max < g.im_min)
        throw Error(ErrorCode::invalid_argument, "bad region grid");
    if (g.im_min < 0) throw Error(ErrorCode::invalid_argument, "region needs im >= 0");
    PrecisionScope scope(std::max(30, current_digits()));
    std::string out = "re,im,class,pole,kind\n";
    auto row = [&](double re, double im, const Complex& xi, const char* kind) {
        std::string cls;
        if (near_multiple_of_2pii(xi))
            cls = "undefined";
        else
            cls = region_name(classify_region(K, xi));
        int pole = pole_case_index(K, xi) > 0 ? 1 : 0;
        out += fmt(re) + "," + fmt(im) + "," + cls + "," + std::to_string(pole) + "," + kind + "\n";
    };
    const long nre = static_cast<long>(std::floor((g.re_max - g.re_min) / g.step + 1e-9));
    const long nim = static_cast<long>(std::floor((g.im_max - g.im_min) / g.step + 1e-9));
    for (long j = 0; j <= nim; ++j) {
        for (long i = 0; i <= nre; ++i) {
            double re = std::round((g.re_min + i * g.step) * 1e12) / 1e12;
            double im = std::round((g.im_min + j * g.step) * 1e12) / 1e12;
            row(re, im, Complex(re, im), "grid");
        }
    }
    // exact pole points xi = 2 k pi i/(ab) and the boundary arc |xi| = 2 pi/(ab), Re xi <= 0
    const long ab = K.a * K.b;
    for (long k = 1;; ++k) {
        Complex xi(Real(0), 2 * pi() * k / Real(ab));
        double im = xi.im.convert_to<double>();
        if (im > g.im_max) break;
        if (!is_pole_index(K, k) || im < g.im_min || 0 < g.re_min || 0 > g.re_max) continue;
        row(0.0, im, xi, "pole");
    }
    const int arc = 16;
    for (int i = 1; i <= arc; ++i) {  // i = 0 is the pole point on the imaginary axis
        Real th = pi() / 2 + pi() / 2 * i / arc;
        Complex xi = polar(2 * pi() / Real(ab), th);
        double re = xi.re.convert_to<double>(), im = xi.im.convert_to<double>();
        if (re < g.re_min || re > g.re_max || im < g.im_min || im > g.im_max) continue;
        row(re, im, xi, "boundary");
    }
    return out;
}

std::string speculation_json(const SpeculationTable& t, int digits) {
    json j;
    j["xi"] = cnum(t.xi, digits);
    j["h_estimate"] = cnum(t.h_estimate, digits);
    j["h_uncertainty"] = num(t.h_uncertainty, digits);
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"N", r.N},
                        {"jones", cnum(r.jones, digits)},
                        {"lhs_bracket", cnum(r.lhs_bracket, digits)},
                        {"lhs_bracket_nu1", cnum(r.lhs_bracket_nu1, digits)},
                        {"target", cnum(r.target, digits)},
                        {"residual", num(r.residual, digits)},
                        {"residual_nu1", num(r.residual_nu1, digits)},
                        {"amplitude_ratio", cnum(r.amplitude_ratio, digits)}});
    j["rows"] = rows;
    j["asserted"] = false;
    return j.dump(2) + "\n";
}

std::string speculation_csv(const SpeculationTable& t) {
    std::string out = "N,residual,residual_nu1,amplitude_re,amplitude_im,lhs_abs,target_abs\n";
    for (const auto& r : t.rows)
        out += std::to_string(r.N) + "," + fmt17(r.residual) + "," + fmt17(r.residual_nu1) + "," +
               fmt17(r.amplitude_ratio.re) + "," + fmt17(r.amplitude_ratio.im) + "," + fmt17(abs(r.lhs_bracket)) +
               "," + fmt17(abs(r.target)) + "\n";
    return out;
}

}  // namespace torusasym
