#pragma once

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace nakafock {

enum class ReportFormat { json, csv, text };

inline ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "text") return ReportFormat::text;
    throw std::invalid_argument("parse_format: unknown format '" + name + "'");
}

struct CheckCase {
    std::string id;
    std::string ref;       // which identity the case exercises
    std::string expected;
    std::string observed;
    bool pass = false;
    bool skipped = false;
};

/// One verification suite. Cases are kept sorted by id so the rendered
/// output is stable no matter how the checks were scheduled.
struct Report {
    std::string suite;
    std::vector<CheckCase> cases;

    void add(CheckCase c) { cases.push_back(std::move(c)); }

    void add_skipped(std::string id, std::string ref, std::string why) {
        cases.push_back(CheckCase{std::move(id), std::move(ref), "skipped",
                                  "skipped: " + std::move(why), true, true});
    }

    void finalize() {
        std::sort(cases.begin(), cases.end(),
                  [](const CheckCase& a, const CheckCase& b) { return a.id < b.id; });
    }

    std::size_t passed() const {
        std::size_t n = 0;
        for (const auto& c : cases)
            if (c.pass && !c.skipped) ++n;
        return n;
    }

    std::size_t failed() const {
        std::size_t n = 0;
        for (const auto& c : cases)
            if (!c.pass) ++n;
        return n;
    }

    std::size_t skipped() const {
        std::size_t n = 0;
        for (const auto& c : cases)
            if (c.skipped) ++n;
        return n;
    }

    bool all_pass() const { return failed() == 0; }
};

inline nlohmann::ordered_json report_to_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["suite"] = rep.suite;
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : rep.cases) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["ref"] = c.ref;
        jc["expected"] = c.expected;
        jc["observed"] = c.observed;
        jc["pass"] = c.pass;
        j["cases"].push_back(std::move(jc));
    }
    j["summary"] = nlohmann::ordered_json{{"cases", rep.cases.size()},
                                          {"passed", rep.passed()},
                                          {"failed", rep.failed()},
                                          {"skipped", rep.skipped()},
                                          {"pass", rep.all_pass()}};
    return j;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline std::string render_csv(const Report& rep) {
    std::string out = "id,ref,expected,observed,pass\n";
    for (const auto& c : rep.cases) {
        out += csv_escape(c.id) + ',' + csv_escape(c.ref) + ',' + csv_escape(c.expected) +
               ',' + csv_escape(c.observed) + ',' + (c.pass ? "true" : "false") + '\n';
    }
    return out;
}

inline std::string render_text(const Report& rep) {
    std::string out = "suite " + rep.suite + "\n";
    for (const auto& c : rep.cases) {
        out += (c.skipped ? "SKIP " : c.pass ? "PASS " : "FAIL ");
        out += c.id + "  expected: " + c.expected + "  observed: " + c.observed + '\n';
    }
    out += "summary: " + std::to_string(rep.cases.size()) + " cases, " +
           std::to_string(rep.passed()) + " passed, " + std::to_string(rep.failed()) +
           " failed, " + std::to_string(rep.skipped()) + " skipped\n";
    return out;
}

inline std::string render_report(const Report& rep, ReportFormat format) {
    switch (format) {
        case ReportFormat::json: return report_to_json(rep).dump(2) + "\n";
        case ReportFormat::csv: return render_csv(rep);
        case ReportFormat::text: return render_text(rep);
    }
    throw std::logic_error("render_report: bad format");
}

inline std::string render_reports(const std::vector<Report>& reps, ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& r : reps) j.push_back(report_to_json(r));
        return j.dump(2) + "\n";
    }
    std::string out;
    for (const auto& r : reps) {
        out += render_report(r, format);
        if (format == ReportFormat::text) out += '\n';
    }
    return out;
}

/// Zero-padded fixed-width number for stable case ids.
inline std::string pad_id(long long value, int width = 3) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%0*lld", width, value);
    return buf;
}

}  // namespace nakafock
