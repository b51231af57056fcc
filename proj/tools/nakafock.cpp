#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <nakafock/report.hpp>
#include <nakafock/suites.hpp>

// Batch verification front-end. Every subcommand runs one suite and emits
// a deterministic report; exit code 0 means every case passed, 1 means at
// least one failed, 2 means the invocation itself was rejected.

namespace {

struct Options {
    std::string rank;
    long long pairing = 1;
    int order = 10;
    int degree_cap = 8;
    std::string format = "text";
    std::string out;
};

[[noreturn]] void usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(2);
}

int hard_order_cap() {
    const char* env = std::getenv("NAKAJIMA_FOCK_CAP");
    if (!env) return nakafock::kHardOrderCap;
    try {
        const int cap = std::stoi(env);
        if (cap < 1) usage_error("NAKAJIMA_FOCK_CAP must be >= 1");
        return cap;
    } catch (const std::exception&) {
        usage_error("NAKAJIMA_FOCK_CAP is not an integer");
    }
}

void check_order(int order, int cap) {
    if (order < 1) usage_error("--order must be >= 1");
    if (order > cap)
        usage_error("resource limit: --order " + std::to_string(order) +
                    " exceeds the hard truncation cap " + std::to_string(cap) +
                    " (override with NAKAJIMA_FOCK_CAP)");
}

void check_degree_cap(int cap, int hard) {
    if (cap < 0) usage_error("--degree-cap must be >= 0");
    if (cap > hard)
        usage_error("resource limit: --degree-cap " + std::to_string(cap) +
                    " exceeds the hard cap " + std::to_string(hard));
}

std::pair<int, int> parse_rank_range(const std::string& text, int fallback_lo,
                                     int fallback_hi) {
    if (text.empty()) return {fallback_lo, fallback_hi};
    try {
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            const int r = std::stoi(text);
            return {r, r};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        usage_error("--rank expects an integer or a range like 1..3");
    }
}

int emit(const std::vector<nakafock::Report>& reports, const Options& opt) {
    nakafock::ReportFormat format;
    try {
        format = nakafock::parse_format(opt.format);
    } catch (const std::exception& e) {
        usage_error(e.what());
    }
    const std::string rendered = nakafock::render_reports(reports, format);
    if (opt.out.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream file(opt.out, std::ios::binary);
        if (!file) usage_error("cannot open output file " + opt.out);
        file << rendered;
    }
    for (const auto& r : reports)
        if (!r.all_pass()) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "nakafock: exact-arithmetic verification of symmetric-function, "
        "Heisenberg Fock-space and Grassmannian intersection identities"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", opt.out, "Write the report to this file instead of stdout");
    app.add_option("--rank", opt.rank, "Rank r, or a range like 1..3 where a grid is run");
    app.add_option("--pairing", opt.pairing, "Intersection pairing q = <[C],[C']>");
    app.add_option("--order", opt.order, "Series truncation order / table length N");
    app.add_option("--degree-cap", opt.degree_cap, "Degree cap for graded sweeps");

    auto* genfun = app.add_subcommand("verify-genfun",
                                      "Generating-function identities for E, H, P");
    auto* pieri = app.add_subcommand("verify-pieri",
                                     "Pieri rule against the finite-variable oracle");
    auto* comm = app.add_subcommand("verify-commutators", "Heisenberg commutator grid");
    auto* solve = app.add_subcommand("solve-constants",
                                     "Derive the structure constants c_{r,n}");
    auto* schubert = app.add_subcommand("verify-schubert",
                                        "Grassmannian intersection-theory suite");
    auto* pairing = app.add_subcommand("verify-pairing",
                                       "Subdivision sums vs the binomial generating function");
    auto* numerology = app.add_subcommand("verify-numerology",
                                          "Dimension formulas and degree bookkeeping");
    auto* all = app.add_subcommand("all", "Run every suite with default parameters");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const int hard_cap = hard_order_cap();
    std::vector<nakafock::Report> reports;
    try {
        if (genfun->parsed()) {
            const int order = app.count("--order") ? opt.order : 10;
            check_order(order, hard_cap);
            reports.push_back(nakafock::suite_genfun(order));
        } else if (pieri->parsed()) {
            const int cap = app.count("--degree-cap") ? opt.degree_cap : 8;
            check_degree_cap(cap, hard_cap);
            reports.push_back(nakafock::suite_pieri(cap, 6));
        } else if (comm->parsed()) {
            const auto [lo, hi] = parse_rank_range(opt.rank, 1, 3);
            if (lo < 1 || hi < lo) usage_error("--rank range must satisfy 1 <= lo <= hi");
            const int cap = app.count("--degree-cap") ? opt.degree_cap : 8;
            check_degree_cap(cap, hard_cap);
            reports.push_back(nakafock::suite_commutators(lo, hi, opt.pairing, cap));
        } else if (solve->parsed()) {
            const auto [lo, hi] = parse_rank_range(opt.rank, 2, 2);
            if (lo != hi || lo < 1) usage_error("solve-constants expects a single rank >= 1");
            const int order = app.count("--order") ? opt.order : 10;
            check_order(order, hard_cap);
            reports.push_back(nakafock::suite_solve_constants(lo, order));
        } else if (schubert->parsed()) {
            const auto [lo, hi] = parse_rank_range(opt.rank, 4, 4);
            if (lo != hi || lo < 0) usage_error("verify-schubert expects a single max rank");
            if (hi > nakafock::kMaxSchubertRank)
                usage_error("resource limit: schubert rank must be <= " +
                            std::to_string(nakafock::kMaxSchubertRank));
            reports.push_back(nakafock::suite_schubert(hi));
        } else if (pairing->parsed()) {
            const auto [lo, hi] = parse_rank_range(opt.rank, 1, 1);
            if (lo != hi || lo < 0) usage_error("verify-pairing expects a single rank");
            if (opt.pairing < 1) usage_error("--pairing must be >= 1 for verify-pairing");
            const int order = app.count("--order") ? opt.order : 6;
            check_order(order, hard_cap);
            reports.push_back(nakafock::suite_pairing(lo, opt.pairing, order));
        } else if (numerology->parsed()) {
            reports.push_back(nakafock::suite_numerology());
        } else if (all->parsed()) {
            reports = nakafock::run_all();
        }
    } catch (const nakafock::DegreeCapError& e) {
        usage_error(std::string("resource limit: ") + e.what());
    } catch (const std::exception& e) {
        usage_error(e.what());
    }

    return emit(reports, opt);
}
