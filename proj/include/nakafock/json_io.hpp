#pragma once

#include <json.hpp>

#include "fock.hpp"
#include "numerology.hpp"
#include "partition.hpp"
#include "rational.hpp"
#include "schubert.hpp"
#include "series.hpp"
#include "symfunc.hpp"

// Wire formats. Numerators, denominators and integer coefficients are
// serialized as decimal strings so arbitrary precision survives JSON.

namespace nakafock {

inline nlohmann::ordered_json rational_to_json(const Rational& q) {
    return nlohmann::ordered_json{{"num", numerator(q).str()},
                                  {"den", denominator(q).str()}};
}

inline Rational rational_from_json(const nlohmann::json& j) {
    return Rational(Int(j.at("num").get<std::string>()),
                    Int(j.at("den").get<std::string>()));
}

inline nlohmann::ordered_json symfunc_to_json(const SymFunc& f) {
    nlohmann::ordered_json j;
    j["basis"] = std::string(1, basis_tag(f.basis()));
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [mu, c] : f.terms()) {
        nlohmann::ordered_json t;
        t["partition"] = mu.str();
        t["num"] = numerator(c).str();
        t["den"] = denominator(c).str();
        j["terms"].push_back(std::move(t));
    }
    return j;
}

inline SymFunc symfunc_from_json(const nlohmann::json& j) {
    SymFunc f(parse_basis(j.at("basis").get<std::string>()));
    for (const auto& t : j.at("terms")) {
        f.add_term(parse_partition(t.at("partition").get<std::string>()),
                   Rational(Int(t.at("num").get<std::string>()),
                            Int(t.at("den").get<std::string>())));
    }
    return f;
}

inline nlohmann::ordered_json fock_to_json(const FockVector& v) {
    return symfunc_to_json(to_symfunc(v));
}

inline FockVector fock_from_json(const nlohmann::json& j) {
    return from_symfunc(symfunc_from_json(j));
}

inline nlohmann::ordered_json series_to_json(const TruncatedSeries<Rational>& s) {
    nlohmann::ordered_json j;
    j["order"] = s.order();
    j["coeffs"] = nlohmann::ordered_json::array();
    for (int k = 0; k <= s.order(); ++k) j["coeffs"].push_back(rational_to_json(s[k]));
    return j;
}

inline nlohmann::ordered_json series_to_json(const TruncatedSeries<SymFunc>& s) {
    nlohmann::ordered_json j;
    j["order"] = s.order();
    j["coeffs"] = nlohmann::ordered_json::array();
    for (int k = 0; k <= s.order(); ++k) j["coeffs"].push_back(symfunc_to_json(s[k]));
    return j;
}

inline nlohmann::ordered_json cohom_to_json(const CohomClass& a, const GrassRing& ring) {
    nlohmann::ordered_json j;
    j["r"] = ring.total;
    j["n"] = ring.quot_rank;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [mu, c] : a.terms()) {
        nlohmann::ordered_json t;
        t["partition"] = mu.str();
        t["coeff"] = c.str();
        j["terms"].push_back(std::move(t));
    }
    return j;
}

// Module-level check reports, rendered as {case, expected, observed, pass}.

inline nlohmann::ordered_json case_json(std::string label, std::string expected,
                                        std::string observed, bool pass) {
    return nlohmann::ordered_json{{"case", std::move(label)},
                                  {"expected", std::move(expected)},
                                  {"observed", std::move(observed)},
                                  {"pass", pass}};
}

inline nlohmann::ordered_json commutator_report_to_json(const CommutatorReport& rep) {
    std::string observed = "per-degree scalars:";
    for (const auto& d : rep.per_degree) {
        observed += " " + std::to_string(d.degree) + ":";
        observed += d.is_scalar ? to_string(d.scalar) : std::string("not-scalar");
    }
    observed += rep.scalars_uniform ? "; uniform" : "; NOT uniform";
    return case_json("[B_" + std::to_string(rep.i) + ", B_" + std::to_string(rep.j) +
                         "] on degrees <= " + std::to_string(rep.degree_cap) + " (r=" +
                         std::to_string(rep.rank) + ", q=" + std::to_string(rep.pairing) + ")",
                     "scalar " + to_string(rep.expected) + " on every graded piece", observed,
                     rep.pass);
}

inline nlohmann::ordered_json phi_report_to_json(const PhiReport& rep) {
    std::string phi = "Phi even coefficients:";
    for (const auto& c : rep.phi_even) phi += " " + to_string(c);
    return case_json("[C_-(z), exp(C'_+(z))] = -Phi(z) exp(C'_+(z)) to order " +
                         std::to_string(rep.order) + " (r=" + std::to_string(rep.rank) +
                         ", q=" + std::to_string(rep.pairing) + ")",
                     "exact coefficient-wise equality", phi + (rep.pass ? "; equal" : "; NOT equal"),
                     rep.pass);
}

inline nlohmann::ordered_json excess_report_to_json(const ExcessReport& rep) {
    return case_json("excess bundle class on Gr(" + std::to_string(rep.n) + " of " +
                         std::to_string(rep.r) + ")",
                     "c(V) = c(S (x) Q_dual), both cancellations",
                     std::string("excess ") + (rep.excess_matches ? "ok" : "MISMATCH") +
                         ", cancel " + (rep.cancel_q ? "ok" : "MISMATCH") + "/" +
                         (rep.cancel_q_dual ? "ok" : "MISMATCH"),
                     rep.pass);
}

inline nlohmann::ordered_json pairing_report_to_json(const PairingReport& rep) {
    std::string obs = "coefficients:";
    for (const auto& c : rep.observed) obs += " " + c.str();
    return case_json("subdivision sums vs (1+(-1)^(r-1) z^2)^(r q), r=" +
                         std::to_string(rep.r) + ", q=" + std::to_string(rep.q),
                     "match for n <= " + std::to_string(rep.count), obs, rep.pass);
}

inline nlohmann::ordered_json shift_report_to_json(const ShiftReport& rep) {
    return case_json("degree shift r=" + std::to_string(rep.rank) + ", i=" +
                         std::to_string(rep.i) + ", deg=" + std::to_string(rep.alpha_deg),
                     "middle degree " + rep.target_middle.str(),
                     "lands on " + rep.image.str() +
                         (rep.preserved ? " (preserved)" : " (not preserved)"),
                     rep.preserved || rep.alpha_deg != 2);
}

}  // namespace nakafock
