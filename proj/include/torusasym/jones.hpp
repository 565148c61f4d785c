#pragma once

#include "torusasym/contour.hpp"
#include "torusasym/torus_invariants.hpp"

namespace torusasym {

// q = e^{xi/N}; u = xi - 2*pi*i.
struct EvalPoint {
    Complex xi;
    long N = 2;
};

Complex u_of(const EvalPoint& pt);

// True when xi lies within rel_tol*max(1,|xi|) of 2*pi*i*m; m is set to that integer.
bool near_multiple_of_2pii(const Complex& xi, long* m = nullptr, double rel_tol = 1e-12);

// Line angle for the integral representation (radians, within the Gaussian-decay interval).
double choose_contour_angle(const TorusKnot& K, const Complex& xi, long N);

struct IntegralDetail {
    Complex value;
    double angle = 0;
    int digits_used = 0;
    QuadratureResult quadrature;
};

IntegralDetail jones_integral_detail(const TorusKnot& K, const EvalPoint& pt, const Precision& p);
Complex jones_integral(const TorusKnot& K, const EvalPoint& pt, const Precision& p);

// Finite torus-knot sum at q = e^{xi/N}; the xi in 2*pi*i*Z points are evaluated as removable limits.
Complex jones_sum_oracle(const TorusKnot& K, long N, const Complex& xi, const Precision& p);

struct UnknotBracket {
    Complex bracket;
    Complex nu;
};
UnknotBracket unknot_bracket(long N, const Complex& xi, const Precision& p);

enum class JonesMethod { integral, sum };
const char* method_name(JonesMethod m);

struct JonesValue {
    Complex value;
    JonesMethod method;
};

// Integral requests with N > 5000 are served by the sum.
JonesValue jones_eval(const TorusKnot& K, const EvalPoint& pt, JonesMethod method, const Precision& p);

}  // namespace torusasym
