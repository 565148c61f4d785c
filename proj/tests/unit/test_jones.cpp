#include "support.hpp"

#include "torusasym/error.hpp"
#include "torusasym/jones.hpp"

using namespace torusasym;

TEST_CASE_FIXTURE(P30, "first color is one") {
    for (TorusKnot K : {TorusKnot{2, 3}, TorusKnot{3, 5}}) {
        CHECK(dist(jones_integral(K, {cx(1, 1), 1}, p), cx(1)) < 1e-20);
        CHECK(dist(jones_sum_oracle(K, 1, cx(0.3, -2), p), cx(1)) < 1e-25);
    }
}

TEST_CASE_FIXTURE(P30, "second color is the mirrored Jones polynomial") {
    // V(t) = t + t^3 - t^4 for the right-handed trefoil; J_2(q) = V(1/q)
    for (Complex xi : {cx(1), cx(0.3, 2.1), cx(-0.7, 0.4)}) {
        Complex qi = exp(-xi / Real(2));
        Complex v = qi + qi * qi * qi - qi * qi * qi * qi;
        CHECK(rel(jones_sum_oracle({2, 3}, 2, xi, p), v) < 1e-25);
    }
}

TEST_CASE_FIXTURE(P30, "integral agrees with the sum") {
    TorusKnot K{2, 3};
    CHECK(rel(jones_integral(K, {cx(1), 20}, p), jones_sum_oracle(K, 20, cx(1), p)) < 1e-8);
    CHECK(rel(jones_integral(K, {cx(1), 3}, p), jones_sum_oracle(K, 3, cx(1), p)) < 1e-8);
    CHECK(rel(jones_integral({3, 5}, {cx(-0.5, 3), 12}, p), jones_sum_oracle({3, 5}, 12, cx(-0.5, 3), p)) < 1e-8);
    CHECK(rel(jones_integral({2, 5}, {cx(1, 2), 7}, p), jones_sum_oracle({2, 5}, 7, cx(1, 2), p)) < 1e-8);
}

TEST_CASE_FIXTURE(P30, "frozen value") {
    Complex v = jones_sum_oracle({2, 3}, 2, cx(1), p);
    CHECK(dist(v, Complex(Real("0.69432553662445056064"))) < 1e-19);
}

TEST_CASE_FIXTURE(P30, "convergence to the inverse Alexander value") {
    Complex v = jones_integral({2, 3}, {cx(1), 100}, p);
    Complex e = exp(cx(1));
    Complex inv = cx(1) / (e - cx(1) + cx(1) / e);
    CHECK(dist(v, inv) < 1e-2);
}

TEST_CASE_FIXTURE(P30, "oracle at 2 pi i is a removable limit") {
    Complex xi = ipi(2);
    Complex at = jones_sum_oracle({2, 3}, 100, xi, p);
    // frozen
    CHECK(dist(at, cx(980.7464921634087, -200.2225275349029)) < 1e-9);
    Complex near = jones_sum_oracle({2, 3}, 100, xi + cx(1e-15), p);
    CHECK(rel(near, at) < 1e-10);
}

TEST_CASE_FIXTURE(P30, "integral rejects multiples of 2 pi i") {
    CHECK_THROWS_AS(jones_integral({2, 3}, {ipi(2), 10}, p), Error);
    try {
        jones_integral({2, 3}, {ipi(4), 10}, p);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::invalid_xi);
    }
    CHECK_THROWS_AS(jones_integral({2, 3}, {cx(1), 0}, p), Error);
}

TEST_CASE("contour angle stays inside the decay window") {
    PrecisionScope s(30);
    for (Complex xi : {cx(1), cx(1, 2), cx(-0.5, 3), cx(0, 3.3)}) {
        double phi = choose_contour_angle({2, 3}, xi, 20);
        double half = static_cast<double>(arg(xi)) / 2;
        CHECK(phi > half - M_PI / 4);
        CHECK(phi < half + M_PI / 4);
    }
}

TEST_CASE_FIXTURE(P30, "unknot bracket") {
    CHECK(dist(unknot_bracket(1, cx(0.7, 1.1), p).bracket, cx(1)) < 1e-28);
    CHECK(dist(unknot_bracket(1000000, cx(1), p).nu, cx(1)) < 1e-12);
    auto u = unknot_bracket(100, cx(1), p);
    Real s = sinh(Real("0.5"));
    Complex approx = Complex(2 * s * 100 - s / 1200);
    CHECK(dist(u.bracket, approx) < 1e-5 * static_cast<double>(abs(u.bracket)));
}

TEST_CASE_FIXTURE(P30, "dispatch") {
    auto v = jones_eval({2, 3}, {cx(1), 6000}, JonesMethod::integral, p);
    CHECK(v.method == JonesMethod::sum);
    auto w = jones_eval({2, 3}, {cx(1), 10}, JonesMethod::integral, p);
    CHECK(v.method == JonesMethod::sum);
    CHECK(w.method == JonesMethod::integral);
    CHECK(std::string(method_name(JonesMethod::sum)) == "sum");
}

TEST_CASE_FIXTURE(P30, "helpers") {
    CHECK(dist(u_of({cx(1), 3}), Complex(Real(1), -2 * pi())) < 1e-28);
    long m = 0;
    CHECK(near_multiple_of_2pii(ipi(-4), &m));
    CHECK(m == -2);
    CHECK_FALSE(near_multiple_of_2pii(cx(0, 6.2832)));
}
