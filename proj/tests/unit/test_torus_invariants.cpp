#include "support.hpp"

#include "torusasym/error.hpp"
#include "torusasym/torus_invariants.hpp"

#include <vector>

using namespace torusasym;

TEST_CASE("torus knot validation") {
    CHECK(is_valid({2, 3}));
    CHECK(is_valid({3, 5}));
    CHECK(is_valid({4, 3}));
    CHECK_FALSE(is_valid({3, 6}));   // gcd
    CHECK_FALSE(is_valid({3, 4}));   // b even
    CHECK_FALSE(is_valid({1, 3}));
    CHECK_THROWS_AS(validate(TorusKnot{2, 4}), Error);
}

TEST_CASE_FIXTURE(P30, "alexander polynomial") {
    TorusKnot K{2, 3};
    CHECK(alexander_coefficients(K) == std::vector<long>{1, -1, 1});
    CHECK(alexander_coefficients({2, 5}) == std::vector<long>{1, -1, 1, -1, 1});
    CHECK(alexander_coefficients({3, 5}) == std::vector<long>{1, -1, 0, 1, -1, 1, 0, -1, 1});
    CHECK(dist(alexander(K, cx(1)), cx(1)) < 1e-28);
    CHECK(dist(alexander(K, cx(2)), cx(1.5)) < 1e-28);
    Complex t = cx(1.7, 0.3);
    CHECK(dist(alexander(K, t), alexander(K, cx(1) / t)) < 1e-27);
    for (TorusKnot k : {TorusKnot{2, 5}, TorusKnot{3, 5}, TorusKnot{3, 7}}) CHECK(dist(alexander(k, cx(1)), cx(1)) < 1e-28);
}

TEST_CASE("pole set") {
    CHECK(pole_indices({2, 3}, 6) == std::vector<long>{1, 5});
    CHECK(pole_indices({2, 3}, 12) == std::vector<long>{1, 5, 7, 11});
    CHECK(pole_indices({3, 5}, 5) == std::vector<long>{1, 2, 4});
    CHECK(is_pole_index({2, 3}, -1));
    CHECK_FALSE(is_pole_index({2, 3}, 3));
    CHECK_FALSE(is_pole_index({2, 3}, 0));
}

TEST_CASE_FIXTURE(P30, "tau") {
    TorusKnot K{2, 3};
    CHECK(dist(tau(K, cx(0)), cx(0)) < 1e-25);
    CHECK(dist(tau(K, cx(1e-8)), cx(2e-8)) < 1e-20);
    Complex z = cx(0.4);
    Complex direct = Real(2) * sinh(z) / alexander(K, exp(Real(2) * z));
    CHECK(rel(tau(K, z), direct) < 1e-27);
    Complex w = cx(0.3, 0.8);
    CHECK(rel(tau(K, w), Real(2) * sinh(w) / alexander(K, exp(Real(2) * w))) < 1e-27);
    // removable point: sinh(6z) = 0 at z = pi i/3, but it is not in the pole set
    Complex zr = ipi(Real(1) / 3);
    CHECK(rel(tau(K, zr), Real(2) * sinh(zr) / alexander(K, exp(Real(2) * zr))) < 1e-20);
    CHECK_THROWS_AS(tau(K, ipi(Real(1) / 6)), Error);
    try {
        tau(K, ipi(Real(1) / 6));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::pole_hit);
    }
}

TEST_CASE_FIXTURE(P30, "tau even derivatives") {
    TorusKnot K{2, 3};
    auto d0 = tau_even_derivatives(K, cx(0), 1, p);
    REQUIRE(d0.size() == 2);
    CHECK(static_cast<double>(abs(d0[0])) < 1e-25);
    CHECK(static_cast<double>(abs(d0[1])) < 1e-25);
    auto d = tau_even_derivatives(K, cx(0.5), 1, p);
    CHECK(rel(d[0], tau(K, cx(0.5))) < 1e-25);
    const Real h("1e-4");
    Complex fd = (tau(K, Complex(Real("0.5") + h)) - Real(2) * tau(K, cx(0.5)) + tau(K, Complex(Real("0.5") - h))) / (h * h);
    CHECK(rel(d[1], fd) < 1e-6);
}

TEST_CASE_FIXTURE(P30, "data at a pole") {
    TorusKnot K{2, 3};
    auto d = tau_at_pole(K, 1, 2, p);
    CHECK(dist(d.residue, Complex(sqrt(Real(3)) / 6)) < 1e-25);
    CHECK(dist(d.regular_even_derivatives[0], Complex(Real(0), Real(-1) / 3)) < 1e-25);
    CHECK(d.regular_even_derivatives.size() == 3);
}

TEST_CASE_FIXTURE(P30, "kt coefficients") {
    auto a = kt_coefficients({2, 3}, 4, p);
    REQUIRE(a.size() == 5);
    // frozen
    const double want[] = {0, 4, -184, 20172, -4120688};
    for (int l = 0; l < 5; ++l) CHECK(static_cast<double>(abs(Complex(a[l] - Real(want[l])))) < 1e-15 * (1 + std::abs(want[l])));
    for (TorusKnot K : {TorusKnot{2, 5}, TorusKnot{3, 5}}) CHECK(static_cast<double>(abs(Complex(kt_coefficients(K, 0, p)[0]))) < 1e-25);
    // 4th derivative of z tau(z) at 0 against a central difference
    TorusKnot K{2, 3};
    const Real h("1e-4");
    auto g = [&](const Real& x) { return Complex(x) * tau(K, Complex(x)); };
    Complex fd = (g(2 * h) - Real(4) * g(h) + Real(6) * g(Real(0)) - Real(4) * g(-h) + g(-2 * h)) / (h * h * h * h);
    CHECK(rel(Complex(a[2]), fd) < 1e-5);
}
