#include "torusasym/char_variety.hpp"
#include "torusasym/error.hpp"

#include <map>

namespace torusasym {

long mod(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

long mod_inverse(long x, long m) {
    long g = m, r = mod(x, m), s0 = 0, s1 = 1;
    while (r != 0) {
        long q = g / r;
        long t = g - q * r;
        g = r;
        r = t;
        t = s0 - q * s1;
        s0 = s1;
        s1 = t;
    }
    if (g != 1) throw Error(ErrorCode::invalid_argument, "mod_inverse: arguments not coprime");
    return mod(s0, m);
}

long crt(long r1, long m1, long r2, long m2) {
    // x = r1 + m1 * ((r2 - r1) * m1^{-1} mod m2)
    long t = mod((r2 - r1) % m2 * mod_inverse(m1, m2), m2);
    return mod(r1 + m1 * t, m1 * m2);
}

AlphaBeta alpha_beta_from_k(const TorusKnot& K, long k) {
    validate(K);
    if (k < 1 || k % K.a == 0 || k % K.b == 0)
        throw Error(ErrorCode::invalid_k, "k=" + std::to_string(k) + " must be positive and divisible by neither a nor b");
    long alpha = mod(k, K.a);
    long beta = mod(k, K.b);
    if ((alpha - beta) % 2 != 0) beta = K.b - beta;
    return {alpha, beta};
}

KPair k_pair_from_alpha_beta(const TorusKnot& K, long alpha, long beta) {
    validate(K);
    if (alpha < 1 || alpha > K.a - 1 || beta < 1 || beta > K.b - 1)
        throw Error(ErrorCode::invalid_argument, "alpha or beta out of range");
    if ((alpha - beta) % 2 != 0) throw Error(ErrorCode::parity_violation, "alpha and beta differ in parity");
    return {crt(alpha, K.a, mod(-beta, K.b), K.b), crt(alpha, K.a, beta, K.b)};
}

RepIndex rep_index(const TorusKnot& K, long k) {
    AlphaBeta ab = alpha_beta_from_k(K, k);
    KPair kp = k_pair_from_alpha_beta(K, ab.alpha, ab.beta);
    return {K, k, ab.alpha, ab.beta, kp.k1, kp.k2};
}

std::vector<Component> enumerate_components(const TorusKnot& K) {
    validate(K);
    std::vector<Component> out;
    std::map<std::pair<long, long>, size_t> where;
    for (long k = 1; k < K.a * K.b; ++k) {
        if (!is_pole_index(K, k)) continue;
        AlphaBeta ab = alpha_beta_from_k(K, k);
        auto key = std::make_pair(ab.alpha, ab.beta);
        auto it = where.find(key);
        if (it == where.end()) {
            where[key] = out.size();
            out.push_back({ab, {k}});
        } else {
            out[it->second].preimages.push_back(k);
        }
    }
    return out;
}

TracePair reducible_traces(const TorusKnot& K, const Complex& t) {
    if (t.re == 0 && t.im == 0) throw Error(ErrorCode::invalid_argument, "t must be nonzero");
    Complex lt = log(t);
    auto tr = [&](long n) {
        Complex w = exp(Real(n) * lt);
        return w + Complex(1) / w;
    };
    return {tr(K.b), tr(K.a)};
}

Complex v_k(const TorusKnot& K, long k, const Complex& u) {
    const Real pie = pi();
    return -Real(K.a * K.b) * (u + Complex(Real(0), 2 * pie)) + Complex(Real(0), 2 * pie * (k - 1));
}

Complex dS_dxi(const TorusKnot& K, long k, const Complex& xi) {
    return (Complex(Real(0), 2 * pi() * k) - Real(K.a * K.b) * xi) / Real(2);
}

}  // namespace torusasym
