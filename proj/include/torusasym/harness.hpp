#pragma once

#include "torusasym/asymptotics.hpp"
#include "torusasym/fig8.hpp"

#include <string>
#include <vector>

namespace torusasym {

// "start:stop:x2" (geometric), "start:stop:+100" (arithmetic) or a single integer.
std::vector<long> parse_n_range(const std::string& s);

// All valid torus knots with a*b <= bound, ordered by (ab, a).
std::vector<TorusKnot> knots_up_to(long bound);

Precision precision_for_digits(int digits);

// Real values become JSON strings with `digits` significant digits when digits > 17.
std::string number_text(const Real& x, int digits);

std::string eval_json(const TorusKnot& K, long N, const std::string& xi_text, JonesMethod method, const Precision& p);

// Routes |xi - 2 pi i| <= kt_guard to the 2 pi i expansion.
ExpansionReport expand_routed(const TorusKnot& K, const Complex& xi, long N, int J, const Precision& p,
                              double kt_guard = 1e-4);
std::string expansion_json(const std::vector<ExpansionReport>& reports, int digits);
std::string expansion_csv(const std::vector<ExpansionReport>& reports);

struct VerifyCheck {
    std::string identity;
    long samples = 0;
    double max_deviation = 0;
    double tolerance = 0;
    bool asserted = true;
    bool passed = true;
    std::string note;
};

struct VerifyReport {
    long bound = 0;
    double perturb = 0;
    std::vector<VerifyCheck> checks;
    bool passed() const;
};

VerifyCheck check_component_count(long bound);
VerifyCheck check_two_to_one(long bound);
VerifyCheck check_crt_round_trip(long bound);
VerifyCheck check_sin2_invariance(long bound, double perturb = 0);
VerifyCheck check_tk_identity(long bound, double perturb = 0);
VerifyCheck check_cs_equality(long bound, int samples_per_k, double perturb = 0);
VerifyCheck check_cs_epsilon(long bound, int samples_per_k);
VerifyCheck check_cs_strict_group(long bound, int samples_per_k);
VerifyCheck check_cs_partner(long bound);
VerifyCheck check_g_relations(int samples);
VerifyCheck check_vk_derivative(long bound);

VerifyReport run_verify(long bound, double perturb, const Precision& p);
std::string verify_json(const VerifyReport& r);
std::string verify_text(const VerifyReport& r);

struct RegionGrid {
    double re_min = -2, re_max = 2, im_min = 0, im_max = 2, step = 0.05;
};
std::string region_csv(const TorusKnot& K, const RegionGrid& g);

std::string speculation_json(const SpeculationTable& t, int digits);
std::string speculation_csv(const SpeculationTable& t);

}  // namespace torusasym
