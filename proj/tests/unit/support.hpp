#pragma once

#include "torusasym/numeric.hpp"

#include <doctest.h>

namespace ta = torusasym;

inline double dist(const ta::Complex& x, const ta::Complex& y) { return static_cast<double>(ta::abs(x - y)); }

inline double rel(const ta::Complex& x, const ta::Complex& y) {
    double s = static_cast<double>(ta::abs(y));
    return dist(x, y) / (s > 0 ? s : 1.0);
}

inline ta::Complex cx(double re, double im = 0) { return ta::Complex(re, im); }

inline ta::Complex ipi(const ta::Real& s) { return ta::Complex(ta::Real(0), s * ta::pi()); }

// 30 digits at the ambient precision for the duration of a test case.
struct P30 {
    ta::PrecisionScope scope{30};
    ta::Precision p = [] {
        ta::Precision q;
        q.working_digits = 30;
        q.target_rel_tol = 1e-20;
        return q;
    }();
};
