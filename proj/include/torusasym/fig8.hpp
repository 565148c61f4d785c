#pragma once

#include "torusasym/numeric.hpp"

#include <vector>

namespace torusasym {

struct MeridianParam {
    Complex m;
    Complex sqrt_disc;  // principal sqrt of (m+1/m+1)(m+1/m-3)
};

MeridianParam meridian_param(const Complex& m);

Complex fig8_trace_poly(const Complex& m);  // m^2 - m - 2 - 1/m + 1/m^2
Complex ell(const MeridianParam& mp);
Complex a_poly_residual(const Complex& m, const Complex& l);
Complex dell_dm(const MeridianParam& mp);
// dv/du = sign * 2m l'(m)/l(m)
Complex dv_du(const MeridianParam& mp, int sign = 1);

Complex torsion_lambda_E(const MeridianParam& mp);
// 1/sqrt(17 + 4 Tr) with the root's sign fixed to match 2m + 2/m - 1.
Complex torsion_lambda_E_trace(const MeridianParam& mp, int* branch_sign = nullptr);
Complex torsion_mu_E(const MeridianParam& mp, int sign = 1);

Complex alexander_fig8(const Complex& t);  // -t + 3 - 1/t
Complex fig8_jones(long N, const Complex& xi, const Precision& p);

struct SpeculationRow {
    long N;
    Complex jones;
    Complex lhs_bracket;      // J 2 sinh(xi/2)/nu - sqrt(-pi) e^{hN} (N/xi)^{1/2} sqrt(T_mu)
    Complex lhs_bracket_nu1;  // same with nu = 1
    Complex target;           // 2 sinh(xi/2)/Delta(E; e^xi)
    Real residual;            // |lhs - target|/|target|
    Real residual_nu1;
    Complex amplitude_ratio;  // J 2 sinh(xi/2)/nu e^{-hN} (N/xi)^{-1/2}/sqrt(-pi)/sqrt(T_mu)
};

struct SpeculationTable {
    Complex xi;
    Complex h_estimate;  // H(u)/xi modulo 2 pi i
    Real h_uncertainty;
    std::vector<SpeculationRow> rows;
};

SpeculationTable speculation_residual(const Complex& xi, const std::vector<long>& N_list, const Precision& p);

}  // namespace torusasym
