#pragma once

#include "torusasym/torus_invariants.hpp"

#include <vector>

namespace torusasym {

struct AlphaBeta {
    long alpha;
    long beta;
    bool operator==(const AlphaBeta&) const = default;
};

struct KPair {
    long k1;
    long k2;
};

struct RepIndex {
    TorusKnot knot;
    long k;
    long alpha;
    long beta;
    long k1;
    long k2;
};

struct Component {
    AlphaBeta ab;
    std::vector<long> preimages;  // valid k in [1, ab-1], ascending
};

// x mod m in [0, m)
long mod(long x, long m);
// Unique x mod m1*m2 with x = r1 (mod m1), x = r2 (mod m2); m1, m2 coprime.
long crt(long r1, long m1, long r2, long m2);
// Inverse of x modulo m (gcd(x,m)=1), in [0, m).
long mod_inverse(long x, long m);

AlphaBeta alpha_beta_from_k(const TorusKnot& K, long k);
KPair k_pair_from_alpha_beta(const TorusKnot& K, long alpha, long beta);
RepIndex rep_index(const TorusKnot& K, long k);
std::vector<Component> enumerate_components(const TorusKnot& K);

struct TracePair {
    Complex trace_x;
    Complex trace_y;
};
TracePair reducible_traces(const TorusKnot& K, const Complex& t);

Complex v_k(const TorusKnot& K, long k, const Complex& u);
// dS_k/dxi = (2k pi i - ab xi)/2
Complex dS_dxi(const TorusKnot& K, long k, const Complex& xi);

}  // namespace torusasym
