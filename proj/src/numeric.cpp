#include "torusasym/numeric.hpp"
#include "torusasym/error.hpp"

#include <mpfr.h>

#include <cmath>
#include <regex>
#include <sstream>

namespace torusasym {

namespace {

mpfr_ptr raw(Real& x) { return x.backend().data(); }
mpfr_srcptr raw(const Real& x) { return x.backend().data(); }

// A fresh value at the wider of the operand precision and the ambient default.
Real fresh_like(const Real& x) {
    Real r;
    if (x.precision() > r.precision()) r.precision(x.precision());
    return r;
}

}  // namespace

const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::invalid_argument: return "InvalidArgument";
        case ErrorCode::parse_error: return "ParseError";
        case ErrorCode::pole_hit: return "PoleHit";
        case ErrorCode::non_decaying_integrand: return "NonDecayingIntegrand";
        case ErrorCode::tolerance_not_reached: return "ToleranceNotReached";
        case ErrorCode::radius_too_large: return "RadiusTooLarge";
        case ErrorCode::degenerate_denominator: return "DegenerateDenominator";
        case ErrorCode::degenerate_discriminant: return "DegenerateDiscriminant";
        case ErrorCode::invalid_xi: return "InvalidXi";
        case ErrorCode::invalid_k: return "InvalidK";
        case ErrorCode::parity_violation: return "ParityViolation";
        case ErrorCode::case_undefined: return "CaseUndefined";
        case ErrorCode::non_integer_shift: return "NonIntegerShift";
        case ErrorCode::coordinate_mismatch: return "CoordinateMismatch";
        case ErrorCode::extrapolation_unstable: return "ExtrapolationUnstable";
    }
    return "Unknown";
}

void validate(const Precision& p) {
    if (p.working_digits < 15)
        throw Error(ErrorCode::invalid_argument, "working_digits must be at least 15");
    if (!(p.target_rel_tol > 0) || p.target_rel_tol < std::pow(10.0, 2 - p.working_digits))
        throw Error(ErrorCode::invalid_argument, "target_rel_tol out of range for working_digits");
}

PrecisionScope::PrecisionScope(int digits) : saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(digits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

int current_digits() { return static_cast<int>(Real::default_precision()); }

Complex& Complex::operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
}

Complex operator+(Complex a, const Complex& b) { return a += b; }
Complex operator-(Complex a, const Complex& b) { return a -= b; }
Complex operator*(Complex a, const Complex& b) { return a *= b; }
Complex operator/(Complex a, const Complex& b) { return a /= b; }
Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
Complex operator*(const Real& s, const Complex& z) { return Complex(s * z.re, s * z.im); }
Complex operator*(const Complex& z, const Real& s) { return Complex(s * z.re, s * z.im); }
Complex operator/(const Complex& z, const Real& s) { return Complex(z.re / s, z.im / s); }

Real pi() {
    Real r;
    mpfr_const_pi(raw(r), MPFR_RNDN);
    return r;
}

Real abs(const Complex& z) {
    Real r = fresh_like(z.re.precision() > z.im.precision() ? z.re : z.im);
    mpfr_hypot(raw(r), raw(z.re), raw(z.im), MPFR_RNDN);
    return r;
}

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real arg(const Complex& z) {
    Real r = fresh_like(z.re.precision() > z.im.precision() ? z.re : z.im);
    mpfr_atan2(raw(r), raw(z.im), raw(z.re), MPFR_RNDN);
    return r;
}

Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Complex iunit() { return Complex(Real(0), Real(1)); }

Complex polar(const Real& r, const Real& theta) {
    Real s = fresh_like(theta), c = fresh_like(theta);
    mpfr_sin_cos(raw(s), raw(c), raw(theta), MPFR_RNDN);
    return Complex(r * c, r * s);
}

Complex exp(const Complex& z) {
    Real m = boost::multiprecision::exp(z.re);
    return polar(m, z.im);
}

Complex log(const Complex& z) { return Complex(boost::multiprecision::log(abs(z)), arg(z)); }

Complex sqrt(const Complex& z) {
    if (z.re == 0 && z.im == 0) return Complex(Real(0), Real(0));
    Real r = abs(z);
    if (z.re >= 0) {
        Real t = boost::multiprecision::sqrt((r + z.re) / 2);
        return Complex(t, z.im / (2 * t));
    }
    Real t = boost::multiprecision::sqrt((r - z.re) / 2);
    Real re = boost::multiprecision::abs(z.im) / (2 * t);
    // im = -0 counts as the upper side so sqrt(-1) = +i.
    return Complex(re, z.im >= 0 ? t : Real(-t));
}

Complex pow(const Complex& z, const Real& w) { return exp(w * log(z)); }

Complex sinh(const Complex& z) {
    Real sh = fresh_like(z.re), ch = fresh_like(z.re);
    mpfr_sinh_cosh(raw(sh), raw(ch), raw(z.re), MPFR_RNDN);
    Real s = fresh_like(z.im), c = fresh_like(z.im);
    mpfr_sin_cos(raw(s), raw(c), raw(z.im), MPFR_RNDN);
    return Complex(sh * c, ch * s);
}

Complex cosh(const Complex& z) {
    Real sh = fresh_like(z.re), ch = fresh_like(z.re);
    mpfr_sinh_cosh(raw(sh), raw(ch), raw(z.re), MPFR_RNDN);
    Real s = fresh_like(z.im), c = fresh_like(z.im);
    mpfr_sin_cos(raw(s), raw(c), raw(z.im), MPFR_RNDN);
    return Complex(ch * c, sh * s);
}

Complex sin(const Complex& z) {
    // sin z = -i sinh(iz)
    Complex w = sinh(Complex(-z.im, z.re));
    return Complex(w.im, -w.re);
}

Complex cos(const Complex& z) { return cosh(Complex(-z.im, z.re)); }

bool isfinite(const Complex& z) {
    return boost::multiprecision::isfinite(z.re) && boost::multiprecision::isfinite(z.im);
}

Real real_from_string(const std::string& s) { return Real(s); }

std::string to_string(const Real& x, int digits) {
    if (x == 0) return "0";
    return x.str(digits, std::ios_base::scientific);
}

std::string to_string(const Complex& z, int digits) {
    std::string im = to_string(z.im, digits);
    if (im.empty() || (im[0] != '-' && im[0] != '+')) im = "+" + im;
    return to_string(z.re, digits) + im + "i";
}

Complex parse_complex(const std::string& s) {
    static const std::regex re(
        R"(^([+-]?(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)([+-](?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)i$)");
    std::smatch m;
    if (!std::regex_match(s, m, re))
        throw Error(ErrorCode::parse_error, "malformed complex literal '" + s + "' (expected RE+IMi)");
    std::string imag = m[2].str();
    if (imag[0] == '+') imag.erase(0, 1);
    return Complex(Real(m[1].str()), Real(imag));
}

}  // namespace torusasym
