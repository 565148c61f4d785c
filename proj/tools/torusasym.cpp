#include "torusasym.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

enum Exit { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_numeric = 3 };

int exit_for(ta_status s) {
    switch (s) {
        case TA_OK: return exit_ok;
        case TA_INVALID_ARGUMENT:
        case TA_PARSE_ERROR:
        case TA_INVALID_XI:
        case TA_INVALID_K:
        case TA_PARITY_VIOLATION: return exit_usage;
        default: return exit_numeric;
    }
}

int report_error(const std::string& kind, const std::string& message, int code) {
    nlohmann::json j{{"error", kind}, {"message", message}, {"exit_code", code}};
    std::cerr << j.dump() << "\n";
    return code;
}

int fail(ta_context* ctx, ta_status s) { return report_error(ta_status_name(s), ta_last_error(ctx), exit_for(s)); }

bool write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    f << body;
    return static_cast<bool>(f);
}

struct Ctx {
    ta_context* p = nullptr;
    ~Ctx() { ta_context_free(p); }
};

struct Report {
    ta_report* p = nullptr;
    ~Report() { ta_report_free(p); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torusasym: colored Jones asymptotics of torus knots"};
    app.require_subcommand(1);

    int digits = 30;
    if (const char* env = std::getenv("TORUSASYM_PRECISION")) {
        try {
            size_t used = 0;
            digits = std::stoi(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::exception&) {
            return report_error("ParseError", std::string("bad TORUSASYM_PRECISION: ") + env, exit_usage);
        }
    }
    long a = 2, b = 3, N = 1;
    int J = 2;
    std::string xi = "1+0i", method = "integral", n_range, csv_path, json_path;
    long bound = 35;
    double perturb = 0;
    double re_min = -2, re_max = 2, im_min = 0, im_max = 2, step = 0.05;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--digits", digits, "working precision in decimal digits (default 30)");
    };
    auto add_knot = [&](CLI::App* c) {
        c->add_option("--a", a, "torus knot parameter a");
        c->add_option("--b", b, "torus knot parameter b (odd)");
    };

    auto* eval = app.add_subcommand("eval", "one colored Jones value as a JSON record");
    add_knot(eval);
    add_common(eval);
    eval->add_option("--N", N, "color");
    eval->add_option("--xi", xi, "RE+IMi");
    eval->add_option("--method", method)->check(CLI::IsMember({"integral", "sum"}));

    auto* expand = app.add_subcommand("expand", "asymptotic approximant against the oracle");
    add_knot(expand);
    add_common(expand);
    expand->add_option("--xi", xi, "RE+IMi");
    expand->add_option("--N", n_range, "N, start:stop:xF or start:stop:+D (default 100)");
    expand->add_option("--J", J, "correction order");
    expand->add_option("--csv", csv_path, "write the sweep CSV here");
    expand->add_option("--json", json_path, "write the JSON report here instead of stdout");

    auto* verify = app.add_subcommand("verify", "identity suites over all torus knots with ab <= bound");
    add_common(verify);
    verify->add_option("--bound", bound, "max ab (default 35)");
    verify->add_option("--perturb", perturb, "inject a relative fault (self-test)")->group("");
    verify->add_option("--json", json_path, "write the JSON report here");

    auto* region = app.add_subcommand("region", "CSV classification grid of the xi-plane");
    add_knot(region);
    add_common(region);
    region->add_option("--re-min", re_min);
    region->add_option("--re-max", re_max);
    region->add_option("--im-min", im_min);
    region->add_option("--im-max", im_max);
    region->add_option("--step", step);
    region->add_option("--csv", csv_path, "write the CSV here instead of stdout");

    auto* fig = app.add_subcommand("speculate", "figure-eight residual table");
    add_common(fig);
    fig->add_option("--xi", xi, "RE+IMi")->required();
    fig->add_option("--N", n_range, "N range (default 50:400:x2)");
    fig->add_option("--csv", csv_path, "write the table CSV here");
    fig->add_option("--json", json_path, "write the JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error("ParseError", e.what(), exit_usage);
    }

    Ctx ctx;
    ctx.p = ta_context_new(digits, 0);
    if (!ctx.p) return report_error("InvalidArgument", "precision must be at least 15 digits", exit_usage);

    auto ns_of = [&](const std::string& text, std::vector<long>& out) {
        size_t count = 0;
        ta_status s = ta_parse_n_range(ctx.p, text.c_str(), nullptr, 0, &count);
        if (s != TA_OK) return s;
        out.resize(count);
        return ta_parse_n_range(ctx.p, text.c_str(), out.data(), out.size(), &count);
    };
    auto emit = [&](const std::string& path, const std::string& body) {
        if (path.empty()) {
            std::cout << body;
            return true;
        }
        return write_file(path, body);
    };
    auto io_error = [](const std::string& path) {
        return report_error("IoError", "cannot write " + path, exit_numeric);
    };

    Report rep;
    ta_status s = TA_OK;

    if (*eval) {
        ta_method m = method == "sum" ? TA_METHOD_SUM : TA_METHOD_INTEGRAL;
        s = ta_eval_record(ctx.p, a, b, N, xi.c_str(), m, &rep.p);
        if (s != TA_OK) return fail(ctx.p, s);
        std::cout << ta_report_json(rep.p) << "\n";
        return exit_ok;
    }

    if (*expand) {
        std::vector<long> ns;
        if ((s = ns_of(n_range.empty() ? "100" : n_range, ns)) != TA_OK) return fail(ctx.p, s);
        s = ta_expand(ctx.p, a, b, xi.c_str(), ns.data(), ns.size(), J, &rep.p);
        if (s != TA_OK) return fail(ctx.p, s);
        if (!emit(json_path, std::string(ta_report_json(rep.p)) + "\n")) return io_error(json_path);
        if (!csv_path.empty() && !write_file(csv_path, ta_report_text(rep.p))) return io_error(csv_path);
        return exit_ok;
    }

    if (*verify) {
        s = ta_verify(ctx.p, bound, perturb, &rep.p);
        if (s != TA_OK) return fail(ctx.p, s);
        std::cout << ta_report_text(rep.p);
        if (!json_path.empty() && !write_file(json_path, std::string(ta_report_json(rep.p)) + "\n"))
            return io_error(json_path);
        return ta_report_passed(rep.p) ? exit_ok : exit_check_failed;
    }

    if (*region) {
        s = ta_region(ctx.p, a, b, re_min, re_max, im_min, im_max, step, &rep.p);
        if (s != TA_OK) return fail(ctx.p, s);
        if (!emit(csv_path, ta_report_text(rep.p))) return io_error(csv_path);
        return exit_ok;
    }

    std::vector<long> ns;
    if ((s = ns_of(n_range.empty() ? "50:400:x2" : n_range, ns)) != TA_OK) return fail(ctx.p, s);
    s = ta_speculate(ctx.p, xi.c_str(), ns.data(), ns.size(), &rep.p);
    if (s != TA_OK) return fail(ctx.p, s);
    if (!emit(json_path, std::string(ta_report_json(rep.p)) + "\n")) return io_error(json_path);
    if (!csv_path.empty() && !write_file(csv_path, ta_report_text(rep.p))) return io_error(csv_path);
    return exit_ok;
}
