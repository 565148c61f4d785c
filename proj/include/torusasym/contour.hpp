#pragma once

#include "torusasym/numeric.hpp"

#include <functional>
#include <vector>

namespace torusasym {

using ComplexFn = std::function<Complex(const Complex&)>;

// Line base_point + t*e^{i*angle}, t in [-half_length, half_length].
struct LineContour {
    Complex base_point;
    Real angle;
    Real half_length;
};

struct QuadratureResult {
    Complex value;
    Real error_estimate;
    Real magnitude_scale;  // max|f| * contour length; cancellation shows up as scale >> |value|
    Real half_length_used;
    long evaluations = 0;
};

QuadratureResult integrate_line(const ComplexFn& f, const LineContour& c, const Precision& p);

// Taylor/Laurent coefficients c_n of f about z0 for each n in orders (negative n allowed),
// by the trapezoid rule on |z - z0| = radius.
std::vector<Complex> circle_coefficients(const ComplexFn& f, const Complex& z0, const Real& radius,
                                         const std::vector<int>& orders, const Precision& p,
                                         const std::vector<Complex>& singularities = {});

std::vector<Complex> cauchy_derivatives(const ComplexFn& f, const Complex& z0, const Real& radius,
                                        const std::vector<int>& orders, const Precision& p,
                                        const std::vector<Complex>& singularities = {});

struct LaurentPair {
    Complex residue;
    Complex constant_term;
};

LaurentPair laurent_at_simple_pole(const ComplexFn& f, const Complex& z0, const Real& radius,
                                   const Precision& p,
                                   const std::vector<Complex>& other_singularities = {});

// Gauss-Legendre nodes/weights on [-1,1] at the ambient precision; cached.
const std::vector<std::pair<Real, Real>>& gauss_legendre(int m);

}  // namespace torusasym
