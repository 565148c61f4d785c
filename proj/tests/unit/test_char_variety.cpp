#include "support.hpp"

#include "torusasym/char_variety.hpp"
#include "torusasym/error.hpp"

#include <set>

using namespace torusasym;

TEST_CASE("integer helpers") {
    CHECK(mod(-1, 6) == 5);
    CHECK(mod(13, 6) == 1);
    CHECK(crt(1, 2, 2, 3) == 5);
    CHECK(crt(1, 3, 4, 5) == 4);
    CHECK(mod_inverse(2, 3) == 2);
    CHECK(mod_inverse(3, 5) == 2);
    CHECK_THROWS_AS(mod_inverse(2, 4), Error);
}

TEST_CASE("k to (alpha, beta)") {
    CHECK(alpha_beta_from_k({2, 3}, 1) == AlphaBeta{1, 1});
    CHECK(alpha_beta_from_k({2, 3}, 5) == AlphaBeta{1, 1});
    CHECK(alpha_beta_from_k({3, 5}, 2) == AlphaBeta{2, 2});
    for (long bad : {0L, 3L, 6L, 2L}) {
        CHECK_THROWS_AS(alpha_beta_from_k({2, 3}, bad), Error);
        try {
            alpha_beta_from_k({2, 3}, bad);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::invalid_k);
        }
    }
}

TEST_CASE("(alpha, beta) to the CRT pair") {
    auto p = k_pair_from_alpha_beta({2, 3}, 1, 1);
    CHECK(p.k1 == 5);
    CHECK(p.k2 == 1);
    auto q = k_pair_from_alpha_beta({3, 5}, 1, 1);
    CHECK(q.k1 == 4);
    CHECK(q.k2 == 1);
    try {
        k_pair_from_alpha_beta({3, 5}, 1, 2);
        FAIL("expected ParityViolation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::parity_violation);
    }
    CHECK_THROWS_AS(k_pair_from_alpha_beta({3, 5}, 3, 1), Error);
}

TEST_CASE("round trip: k is one of its pair, the other is the CRT partner") {
    for (TorusKnot K : {TorusKnot{2, 3}, TorusKnot{2, 5}, TorusKnot{3, 5}, TorusKnot{3, 7}, TorusKnot{5, 7}}) {
        const long ab = K.a * K.b;
        for (long k = 1; k < ab; ++k) {
            if (k % K.a == 0 || k % K.b == 0) continue;
            RepIndex r = rep_index(K, k);
            CHECK((r.k1 == k || r.k2 == k));
            long other = r.k1 == k ? r.k2 : r.k1;
            CHECK(other == crt(mod(k, K.a), K.a, mod(-k, K.b), K.b));
            if (K.a == 2) CHECK(other == ab - k);
            CHECK((r.alpha - r.beta) % 2 == 0);
        }
    }
    // for odd a the partner is not -k mod ab
    RepIndex r = rep_index({3, 5}, 2);
    CHECK(r.k1 == 8);
    CHECK(r.k2 == 2);
}

TEST_CASE("components") {
    auto c = enumerate_components({2, 3});
    REQUIRE(c.size() == 1);
    CHECK(c[0].preimages == std::vector<long>{1, 5});
    CHECK(enumerate_components({2, 5}).size() == 2);
    auto d = enumerate_components({3, 5});
    CHECK(d.size() == 4);
    std::set<long> all;
    for (const auto& comp : d) {
        CHECK(comp.preimages.size() == 2);
        all.insert(comp.preimages.begin(), comp.preimages.end());
    }
    CHECK(all.size() == 8);
    for (TorusKnot K : {TorusKnot{5, 7}, TorusKnot{3, 11}, TorusKnot{7, 15}})
        CHECK(static_cast<long>(enumerate_components(K).size()) == (K.a - 1) * (K.b - 1) / 2);
}

TEST_CASE_FIXTURE(P30, "reducible traces") {
    TorusKnot K{2, 3};
    auto t1 = reducible_traces(K, cx(1));
    CHECK(dist(t1.trace_x, cx(2)) < 1e-28);
    CHECK(dist(t1.trace_y, cx(2)) < 1e-28);
    auto t5 = reducible_traces(K, exp(ipi(Real(5) / 6)));
    CHECK(dist(t5.trace_x, cx(0)) < 1e-27);
    Complex t = cx(0.4, 1.3);
    auto f = reducible_traces(K, t), g = reducible_traces(K, cx(1) / t);
    CHECK(dist(f.trace_x, g.trace_x) < 1e-26);
    CHECK(dist(f.trace_y, g.trace_y) < 1e-26);
    CHECK_THROWS_AS(reducible_traces(K, cx(0)), Error);
}

TEST_CASE_FIXTURE(P30, "v_k") {
    TorusKnot K{2, 3};
    CHECK(dist(v_k(K, 1, cx(0)), ipi(-12)) < 1e-27);
    Complex u = cx(0.2, 0.3);
    Complex xi = u + ipi(2);
    CHECK(dist(v_k(K, 1, u), Real(2) * dS_dxi(K, 1, xi) - ipi(2)) < 1e-27);
}
