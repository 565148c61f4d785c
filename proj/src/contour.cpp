#include "torusasym/contour.hpp"
#include "torusasym/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace torusasym {

namespace {

int gl_order(int digits) { return std::clamp(digits / 2 + 10, 20, 80); }

Real ten_pow(int e) { return boost::multiprecision::pow(Real(10), e); }

}  // namespace

const std::vector<std::pair<Real, Real>>& gauss_legendre(int m) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<std::pair<Real, Real>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    const int digits = current_digits();
    auto key = std::make_pair(m, digits);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<std::pair<Real, Real>> nodes(m);
    const Real eps = ten_pow(-digits - 2);
    const Real pie = pi();
    for (int i = 0; i < (m + 1) / 2; ++i) {
        Real x = boost::multiprecision::cos(pie * (Real(i) + Real(0.75)) / (Real(m) + Real(0.5)));
        Real dp;
        for (int iter = 0; iter < 100; ++iter) {
            Real p0 = 1, p1 = x;
            for (int k = 2; k <= m; ++k) {
                Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (x * p1 - p0) / (x * x - 1);
            Real dx = p1 / dp;
            x -= dx;
            if (boost::multiprecision::abs(dx) < eps) {
                // refresh derivative at the converged node
                p0 = 1;
                p1 = x;
                for (int k = 2; k <= m; ++k) {
                    Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = m * (x * p1 - p0) / (x * x - 1);
                break;
            }
        }
        Real w = 2 / ((1 - x * x) * dp * dp);
        nodes[i] = {-x, w};
        nodes[m - 1 - i] = {x, w};
    }
    if (m % 2 == 1) nodes[m / 2].first = 0;
    return cache.emplace(key, std::move(nodes)).first->second;
}

QuadratureResult integrate_line(const ComplexFn& f, const LineContour& c, const Precision& p) {
    validate(p);
    PrecisionScope scope(p.working_digits);
    if (!(c.half_length > 0)) throw Error(ErrorCode::invalid_argument, "half_length must be positive");

    const Complex dir = polar(Real(1), c.angle);
    const Real tol(p.target_rel_tol);
    auto at = [&](const Real& t) { return f(c.base_point + t * dir); };

    QuadratureResult res;
    Real L = c.half_length;
    Real fmax = 0;
    for (int attempt = 0;; ++attempt) {
        const int n = 64;
        fmax = 0;
        for (int i = 0; i <= n; ++i) {
            Real v = abs(at(-L + 2 * L * i / n));
            ++res.evaluations;
            if (v > fmax) fmax = v;
        }
        Real ends = std::max(abs(at(-L)), abs(at(L)));
        res.evaluations += 2;
        if (ends <= tol * fmax) break;
        if (attempt == 2) throw Error(ErrorCode::non_decaying_integrand, "integrand does not decay at the truncated ends");
        L *= 2;
    }
    res.half_length_used = L;
    if (fmax == 0) {
        res.value = Complex(0);
        res.error_estimate = 0;
        res.magnitude_scale = 0;
        return res;
    }

    const auto& gl = gauss_legendre(gl_order(p.working_digits));
    auto panels = [&](int P) {
        Complex sum(0);
        Real h = 2 * L / P;
        for (int k = 0; k < P; ++k) {
            Real mid = -L + h * (Real(k) + Real(0.5));
            Complex part(0);
            for (const auto& [x, w] : gl) {
                Complex v = at(mid + x * h / 2);
                Real a = abs(v);
                if (a > fmax) fmax = a;
                part += w * v;
            }
            sum += part * (h / 2);
        }
        res.evaluations += static_cast<long>(P) * static_cast<long>(gl.size());
        return sum * dir;
    };

    const Real floor_rel = ten_pow(-(p.working_digits - 2));
    Complex prev = panels(16);
    for (int P = 32; P <= 16384; P *= 2) {
        Complex cur = panels(P);
        Real diff = abs(cur - prev);
        Real scale = fmax * 2 * L;
        if (diff <= std::max(Real(tol * abs(cur)), Real(floor_rel * scale))) {
            res.value = cur;
            res.error_estimate = diff;
            res.magnitude_scale = scale;
            return res;
        }
        prev = cur;
    }
    throw Error(ErrorCode::tolerance_not_reached, "line quadrature did not converge");
}

std::vector<Complex> circle_coefficients(const ComplexFn& f, const Complex& z0, const Real& radius,
                                         const std::vector<int>& orders, const Precision& p,
                                         const std::vector<Complex>& singularities) {
    validate(p);
    PrecisionScope scope(p.working_digits);
    if (!(radius > 0)) throw Error(ErrorCode::invalid_argument, "radius must be positive");
    for (const auto& s : singularities)
        if (abs(s - z0) <= radius)
            throw Error(ErrorCode::radius_too_large, "a singularity lies inside the Cauchy circle");

    int nmax = 0;
    for (int n : orders) nmax = std::max(nmax, std::abs(n));
    int M = 32;
    while (M < 4 * (nmax + 1)) M *= 2;

    const Real tol(p.target_rel_tol);
    const Real floor_rel = ten_pow(-(p.working_digits - 3));
    const Real two_pi = 2 * pi();

    std::vector<Complex> vals(M);
    Real fmax = 0;
    auto sample = [&](int j, int MM) {
        Complex z = z0 + polar(radius, two_pi * j / MM);
        Complex v = f(z);
        Real a = abs(v);
        if (a > fmax) fmax = a;
        return v;
    };
    for (int j = 0; j < M; ++j) vals[j] = sample(j, M);

    // scaled coefficients c_n r^n
    auto coeffs = [&](int MM) {
        std::vector<Complex> roots(MM);
        for (int j = 0; j < MM; ++j) roots[j] = polar(Real(1), -two_pi * j / MM);
        std::vector<Complex> out;
        for (int n : orders) {
            Complex s(0);
            for (int j = 0; j < MM; ++j) {
                long idx = (static_cast<long>(j) * n) % MM;
                if (idx < 0) idx += MM;
                s += vals[j] * roots[idx];
            }
            out.push_back(s / Real(MM));
        }
        return out;
    };

    std::vector<Complex> prev = coeffs(M);
    for (;;) {
        if (M >= (1 << 14)) throw Error(ErrorCode::tolerance_not_reached, "Cauchy quadrature did not converge");
        std::vector<Complex> next(2 * M);
        for (int j = 0; j < M; ++j) next[2 * j] = vals[j];
        for (int j = 0; j < M; ++j) next[2 * j + 1] = sample(2 * j + 1, 2 * M);
        vals.swap(next);
        M *= 2;
        std::vector<Complex> cur = coeffs(M);
        bool ok = true;
        for (size_t i = 0; i < cur.size(); ++i) {
            Real diff = abs(cur[i] - prev[i]);
            if (diff > std::max(Real(tol * abs(cur[i])), Real(floor_rel * fmax))) ok = false;
        }
        prev = cur;
        if (ok) break;
    }
    for (size_t i = 0; i < orders.size(); ++i)
        prev[i] = prev[i] / boost::multiprecision::pow(radius, orders[i]);
    return prev;
}

std::vector<Complex> cauchy_derivatives(const ComplexFn& f, const Complex& z0, const Real& radius,
                                        const std::vector<int>& orders, const Precision& p,
                                        const std::vector<Complex>& singularities) {
    for (int n : orders)
        if (n < 0) throw Error(ErrorCode::invalid_argument, "derivative orders must be non-negative");
    std::vector<Complex> c = circle_coefficients(f, z0, radius, orders, p, singularities);
    PrecisionScope scope(p.working_digits);
    for (size_t i = 0; i < orders.size(); ++i) {
        Real fact = 1;
        for (int k = 2; k <= orders[i]; ++k) fact *= k;
        c[i] = c[i] * fact;
    }
    return c;
}

LaurentPair laurent_at_simple_pole(const ComplexFn& f, const Complex& z0, const Real& radius,
                                   const Precision& p,
                                   const std::vector<Complex>& other_singularities) {
    std::vector<Complex> c = circle_coefficients(f, z0, radius, {-1, 0}, p, other_singularities);
    return {c[0], c[1]};
}

}  // namespace torusasym
