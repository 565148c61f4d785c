#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace torusasym {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

struct Precision {
    int working_digits = 30;
    double target_rel_tol = 1e-15;
};

void validate(const Precision& p);

// Sets the default MPFR precision for new values and restores it on exit.
class PrecisionScope {
public:
    explicit PrecisionScope(int digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

int current_digits();

struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
    Complex(int r) : re(r), im(0) {}
    Complex(double r) : re(r), im(0) {}
    Complex(double r, double i) : re(r), im(i) {}

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
};

Complex operator+(Complex a, const Complex& b);
Complex operator-(Complex a, const Complex& b);
Complex operator*(Complex a, const Complex& b);
Complex operator/(Complex a, const Complex& b);
Complex operator-(const Complex& a);
Complex operator*(const Real& s, const Complex& z);
Complex operator*(const Complex& z, const Real& s);
Complex operator/(const Complex& z, const Real& s);

Real pi();
Real abs(const Complex& z);
Real norm(const Complex& z);
Real arg(const Complex& z);
Complex conj(const Complex& z);
Complex iunit();
Complex polar(const Real& r, const Real& theta);
Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, const Real& w);
Complex sinh(const Complex& z);
Complex cosh(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
bool isfinite(const Complex& z);

Real real_from_string(const std::string& s);
std::string to_string(const Real& x, int digits);
std::string to_string(const Complex& z, int digits);

// Parses "RE+IMi" / "RE-IMi" (signed decimal literals, no spaces).
// Throws Error(ErrorCode::parse_error) on malformed input.
Complex parse_complex(const std::string& s);

}  // namespace torusasym
