#pragma once

#include "torusasym/jones.hpp"

#include <string>
#include <vector>

namespace torusasym {

Complex S(const TorusKnot& K, long k, const Complex& xi);
Real T(const TorusKnot& K, long k);
// 4 sin(k pi/a) sin(k pi/b)/sqrt(ab): the root of T_k carried by A_k.
Real signed_sqrt_T(const TorusKnot& K, long k);
Complex A(const TorusKnot& K, long k, const Complex& xi, long N);

enum class CaseTag { not_pole_pos_re, not_pole_nonpos_re, pole_case, kt_2pii };
const char* case_name(CaseTag c);

// floor(ab|xi|/(2pi)) with a 1e-12 snap to the nearest integer; *exact reports the snap.
long boundary_index(const TorusKnot& K, const Complex& xi, bool* exact = nullptr);

// Pole index k when xi/2 = k*pi*i/(ab) is in the pole set, else 0.
long pole_case_index(const TorusKnot& K, const Complex& xi);

CaseTag select_case(const TorusKnot& K, const Complex& xi);

struct ExpansionSpec {
    TorusKnot knot;
    Complex xi;
    long N = 100;
    int J = 0;
};

struct ExpTerm {
    long k;
    Complex value;   // A_k, or the k-summand of the 2*pi*i expansion before its sign
    Real weight;     // +-1 or +-1/2
    Complex contribution;
};

struct ExpansionReport {
    CaseTag case_tag;
    TorusKnot knot;
    Complex xi;
    long N = 0;
    int J = 0;
    Complex prefactor;
    Complex leading;
    std::vector<ExpTerm> exp_terms;
    std::vector<Complex> corrections;
    Complex approximant;
    Complex oracle;
    Real residual;
    bool residual_relative = true;
};

ExpansionReport expand(const ExpansionSpec& spec, const Precision& p);
ExpansionReport expand_kt_2pii(const TorusKnot& K, long N, int j_max, const Precision& p);

// Recomputes prefactor * (leading + sum contributions + sum corrections).
Complex reassemble(const ExpansionReport& r);

enum class Region { converges, diverges, boundary_oscillates };
const char* region_name(Region r);
Region classify_region(const TorusKnot& K, const Complex& xi);

}  // namespace torusasym
