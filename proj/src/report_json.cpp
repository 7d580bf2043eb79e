#include "insdel/report_json.hpp"

namespace insdel {

using json = nlohmann::ordered_json;

namespace {

json pair_json(const std::pair<double, double>& p) { return json::array({p.first, p.second}); }

json witness_json(const std::optional<Witness>& witness) {
    if (!witness) return nullptr;
    json codewords = json::array();
    for (const Word& c : witness->codewords) codewords.push_back(word_json(c));
    return {{"received", word_json(witness->received)}, {"codewords", std::move(codewords)}};
}

}  // namespace

json rational_json(const Rational& value) { return {{"exact", to_string(value)}, {"value", to_double(value)}}; }

json word_json(const Word& w) {
    json out = json::array();
    for (Symbol s : w.symbols()) out.push_back(static_cast<int>(s));
    return out;
}

std::string to_string(CaseOutcome outcome) {
    switch (outcome) {
        case CaseOutcome::Decodable: return "decodable";
        case CaseOutcome::Violation: return "violation";
        case CaseOutcome::Skipped: return "skipped";
    }
    return "unknown";
}

json to_json(const Verdict& verdict) {
    return {{"decodable", verdict.decodable},
            {"t_i", verdict.max_insertions},
            {"t_d", verdict.max_deletions},
            {"list_size", verdict.list_size},
            {"witness", witness_json(verdict.witness)}};
}

json to_json(const TheoremReport& report) {
    json cases = json::array();
    for (const TheoremCase& c : report.cases) {
        json entry = {{"t_i", c.t_I}, {"t_d", c.t_D}, {"outcome", to_string(c.outcome)}};
        if (c.witness) entry["witness"] = witness_json(c.witness);
        if (!c.note.empty()) entry["note"] = c.note;
        cases.push_back(std::move(entry));
    }
    return {{"n", report.n},
            {"distance", report.distance},
            {"delta", rational_json(report.delta)},
            {"list_size", report.L},
            {"pairs_checked", report.cases.size()},
            {"violations", report.violations},
            {"skipped", report.skipped},
            {"beyond_unique_decoding", report.beyond_unique_decoding},
            {"note", report.note},
            {"cases", std::move(cases)}};
}

json to_json(const UniqueDecodingReport& report) {
    json checks = json::array();
    for (const RadiusCheck& c : report.checks) checks.push_back({{"t_i", c.t_I}, {"t_d", c.t_D}, {"decodable", c.decodable}});
    return {{"distance", report.distance},
            {"radius", report.radius},
            {"all_decodable", report.all_decodable},
            {"checks", std::move(checks)}};
}

json to_json(const ComparisonReport& report) {
    json out = {{"delta", rational_json(report.delta)},
                {"list_size", report.L},
                {"delta1", report.delta1},
                {"delta1_closed_form", report.delta1_closed_form},
                {"beta2", report.beta2},
                {"improves", report.improves},
                {"interval", report.interval ? pair_json(*report.interval) : json(nullptr)},
                {"p1", report.p1 ? pair_json(*report.p1) : json(nullptr)},
                {"p2", nullptr},
                {"crossings", report.crossings},
                {"multiple_crossings", report.multiple_crossings}};
    if (report.p2)
        out["p2"] = {{"tau_d", rational_json(report.p2->first)}, {"tau_i", rational_json(report.p2->second)}};
    return out;
}

json to_json(const PiecewiseBound& bound) {
    json pieces = json::array();
    for (const BoundPiece& p : bound.pieces)
        pieces.push_back({{"r", p.r},
                          {"lo", rational_json(p.lo)},
                          {"hi", rational_json(p.hi)},
                          {"slope", rational_json(p.slope)},
                          {"intercept", rational_json(p.intercept)}});
    return {{"delta", rational_json(bound.delta)},
            {"list_size", bound.L},
            {"r_min", bound.r_min},
            {"piece_count", bound.pieces.size()},
            {"pieces", std::move(pieces)}};
}

json to_json(const RsSearchResult& result) {
    return {{"alpha", result.alpha},
            {"achieved_distance", result.achieved_distance},
            {"target_distance", result.target_distance},
            {"target_met", result.target_met},
            {"candidates_examined", result.candidates_examined},
            {"exhaustive", result.exhaustive}};
}

json to_json(const CheckSummary& summary) {
    return {{"cases", summary.cases},
            {"failures", summary.failures},
            {"first_failure", summary.first_failure ? json(*summary.first_failure) : json(nullptr)}};
}

}  // namespace insdel
