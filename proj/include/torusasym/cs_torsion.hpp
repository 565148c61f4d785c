#pragma once

#include "torusasym/char_variety.hpp"

namespace torusasym {

struct BundleElement {
    Complex s;
    Complex t;
    Complex z;
};

enum class Generator { X, Y, B };

BundleElement g_act(Generator g, const BundleElement& e);
// X^m and Y^n for real exponents: (s+m, t; z e^{-8 pi i t m}) and (s, t+n; z e^{8 pi i s n}).
BundleElement x_power(const BundleElement& e, const Real& m);
BundleElement y_power(const BundleElement& e, const Real& n);

// integral: the group generated by X, Y, B. half: X, Y shifts on the half-integer lattice.
enum class ShiftLattice { integral, half };

struct Equivalence {
    bool equivalent = false;
    bool uses_b = false;
    Real x_shift;
    Real y_shift;
    Real z_deviation;  // relative
};

struct EquivalenceOptions {
    ShiftLattice lattice = ShiftLattice::integral;
    double shift_tol = 1e-9;
    double z_tol = 1e-9;
};

Equivalence equivalence_word(const BundleElement& e1, const BundleElement& e2, const EquivalenceOptions& opt = {});
bool equivalent(const BundleElement& e1, const BundleElement& e2, const Precision& p,
                ShiftLattice lattice = ShiftLattice::integral);

struct CD {
    long c;
    long d;
};
// ad - bc = 1 with the least non-negative d.
CD cd_pair(const TorusKnot& K);

BundleElement cs_dubois_kashaev(const TorusKnot& K, long alpha, long beta, int epsilon, const Complex& u);
BundleElement cs_closed_form(const TorusKnot& K, long k, const Complex& xi);
// Y-exponent carrying the (c,d)-form element of k onto the closed form: (k - ab - 2)/2.
Real dk_transport_shift(const TorusKnot& K, long k);
BundleElement transport_dk(const TorusKnot& K, long k, const BundleElement& dk);

struct CSValue {
    Complex value;  // Re in [0, pi^2)
};

CSValue reduce_cs(const Complex& v);
CSValue cs_extract(const BundleElement& e, const Complex& u, const Complex& v, double tol = 1e-9);
// S_k(xi) - pi i u - u v_k(u)/4, reduced.
CSValue cs_expected(const TorusKnot& K, long k, const Complex& xi);
// Distance of a - b from pi^2 Z.
Real cs_distance(const CSValue& a, const CSValue& b);

Real torsion_lambda(const TorusKnot& K, long alpha, long beta);

struct TorsionMu {
    Real abs_value;
    bool sign_determined = false;
};
TorsionMu torsion_mu(const TorusKnot& K, long alpha, long beta);

}  // namespace torusasym
