#pragma once

#include "torusasym/numeric.hpp"

#include <vector>

namespace torusasym {

struct TorusKnot {
    long a = 2;
    long b = 3;
};

// gcd(a,b)=1, b odd, a>=2, b>=3.
void validate(const TorusKnot& K);
bool is_valid(const TorusKnot& K);

long gcd(long x, long y);

// Coefficients of the symmetric Alexander polynomial, lowest power -(a-1)(b-1)/2 first.
std::vector<long> alexander_coefficients(const TorusKnot& K);
Complex alexander(const TorusKnot& K, const Complex& t);

bool is_pole_index(const TorusKnot& K, long k);
std::vector<long> pole_indices(const TorusKnot& K, long k_max);
Complex pole_point(const TorusKnot& K, long k);  // k*pi*i/(ab)

struct NearestPole {
    long k;
    Real distance;
};
NearestPole nearest_pole(const TorusKnot& K, const Complex& z);

Complex tau(const TorusKnot& K, const Complex& z);

// tau^{(2j)}(z0), j = 0..j_max.
std::vector<Complex> tau_even_derivatives(const TorusKnot& K, const Complex& z0, int j_max, const Precision& p);

// Data at the pole z0 = k*pi*i/(ab): residue and the even derivatives (2j)! c_{2j} of the regular part.
struct TauPoleData {
    Complex residue;
    std::vector<Complex> regular_even_derivatives;
};
TauPoleData tau_at_pole(const TorusKnot& K, long k, int j_max, const Precision& p);

// a_l = (d/dz)^{2l} [z tau(z)] at 0, l = 0..l_max.
std::vector<Real> kt_coefficients(const TorusKnot& K, int l_max, const Precision& p);

}  // namespace torusasym
