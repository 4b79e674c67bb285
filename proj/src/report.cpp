#include "orelab/report.hpp"

#include <sstream>

#include "orelab/structure.hpp"

namespace orelab {

using nlohmann::json;

json to_json(const ElementSet& s) { return json(s.to_vector()); }

namespace {

json sets_json(const std::vector<ElementSet>& v) {
    json a = json::array();
    for (const auto& s : v) a.push_back(to_json(s));
    return a;
}

json side_report(const FiniteRing& r, Side side, const Enumeration* e) {
    LocalizationProfile p = closed_form_profile(r, side);
    json largest = json::array();
    for (std::size_t i = 0; i < p.ass.size(); ++i)
        largest.push_back({{"ideal", to_json(p.ass[i])}, {"set", to_json(p.largest[i])}});
    json out = {
        {"ass", sets_json(p.ass)},
        {"largest", largest},
        {"max_den", sets_json(p.max_den)},
        {"radical", to_json(p.radical)},
        {"localization_maximal", p.ass.size() == 1 && p.ass.front().size() == 1},
    };
    if (e) out["oracle_agreement"] = brute_profile(r, side, *e).profile == p;
    return out;
}

std::string ids(const ElementSet& s) {
    std::string out;
    bool first = true;
    for (Elem e : s.to_vector()) {
        out += (first ? "" : ",") + std::to_string(e);
        first = false;
    }
    return out;
}

}  // namespace

json analysis_report(const FiniteRing& r, const std::string& spec_text, const AnalyzeOptions& options) {
    json report;
    report["tool_version"] = kToolVersion;
    report["ring"] = {{"label", r.label()}, {"spec", spec_text}, {"size", r.size()},
                      {"commutative", r.is_commutative()}};
    Enumeration e;
    const bool full = options.budget.full_for(r);
    if (full) e = enumerate_mult_sets(r, options.budget);
    report["budget"] = {{"max_ring_size_full", options.budget.max_ring_size_full},
                        {"max_generator_arity", options.budget.max_generator_arity},
                        {"sample_count", options.budget.sample_count},
                        {"seed", options.budget.seed},
                        {"full_enumeration", full}};
    json sides = json::object();
    bool agree = true;
    for (Side s : options.sides) {
        json sr = side_report(r, s, full ? &e : nullptr);
        if (full) agree = agree && sr["oracle_agreement"].get<bool>();
        sides[std::string(to_string(s))] = std::move(sr);
    }
    report["sides"] = std::move(sides);
    report["verification"] = {{"certifying", full},
                              {"oracle_agreement", full ? json(agree) : json(nullptr)},
                              {"multiplicative_sets", full ? json(e.sets.size()) : json(nullptr)}};
    if (options.lattice) {
        Den0Lattice lat = den0_lattice(r);
        report["den0_lattice"] = {{"nodes", sets_json(lat.nodes)}, {"join", lat.join}, {"meet", lat.meet},
                                  {"laws_hold", lat.laws_hold}};
    }
    return report;
}

std::string analysis_text(const json& report) {
    std::ostringstream os;
    os << "ring " << report["ring"]["label"].get<std::string>() << " (size " << report["ring"]["size"] << ")\n";
    for (const auto& [side, sr] : report["sides"].items()) {
        os << side << ":\n";
        os << "  Ass       " << sr["ass"].dump() << "\n";
        for (const auto& l : sr["largest"]) os << "  S_a " << l["ideal"].dump() << " = " << l["set"].dump() << "\n";
        os << "  maxDen    " << sr["max_den"].dump() << "\n";
        os << "  radical   " << sr["radical"].dump() << "\n";
        if (sr.contains("oracle_agreement"))
            os << "  oracle    " << (sr["oracle_agreement"].get<bool>() ? "agrees" : "DISAGREES") << "\n";
    }
    if (report.contains("den0_lattice")) os << "den0 lattice " << report["den0_lattice"]["nodes"].dump() << "\n";
    return os.str();
}

json verification_json(const VerificationReport& report, bool with_timing) {
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
    json out = {{"ring", report.ring_label},
                {"certifying", report.certifying},
                {"passed", report.passed()},
                {"checks", checks},
                {"tool_version", kToolVersion}};
    if (with_timing) out["seconds"] = report.seconds;
    return out;
}

std::string verification_text(const VerificationReport& report, bool with_timing) {
    std::ostringstream os;
    os << "ring " << report.ring_label << (report.certifying ? "" : " (sampled enumeration)") << "\n";
    for (const auto& c : report.checks) {
        os << to_string(c.status) << " " << c.name;
        if (!c.detail.empty()) os << "  " << c.detail;
        os << "\n";
    }
    os << (report.passed() ? "PASS" : "FAIL") << " " << report.count(CheckStatus::pass) << " passed, "
       << report.count(CheckStatus::fail) << " failed, " << report.count(CheckStatus::skip) << " skipped";
    if (with_timing) os << " in " << report.seconds << "s";
    os << "\n";
    return os.str();
}

std::string golden_text(const FiniteRing& r, const EnumerationBudget& budget) {
    std::ostringstream os;
    const std::string& label = r.label();
    Enumeration e = enumerate_mult_sets(r, budget);
    for (const auto& s : e.sets) os << label << "|all|multset|" << ids(s.members) << "\n";
    for (Side side : {Side::left, Side::right}) {
        const std::string sd(to_string(side));
        LocalizationProfile p = closed_form_profile(r, side);
        for (std::size_t i = 0; i < p.ass.size(); ++i) {
            os << label << "|" << sd << "|ass|" << ids(p.ass[i]) << "\n";
            os << label << "|" << sd << "|largest|" << ids(p.largest[i]) << "\n";
        }
        for (const auto& m : p.max_den) os << label << "|" << sd << "|maxden|" << ids(m) << "\n";
        os << label << "|" << sd << "|radical|" << ids(p.radical) << "\n";
    }
    if (r.is_commutative()) {
        CommProfile c = comm_profile(r);
        for (const auto& p : c.minimal_primes) os << label << "|comm|prime|" << ids(p.members) << "\n";
        for (const auto& a : c.predicted_ass) os << label << "|comm|ass|" << ids(a.members) << "\n";
        for (const auto& [mask, s] : c.predicted_largest)
            os << label << "|comm|largest" << mask << "|" << ids(s) << "\n";
    }
    return os.str();
}

}  // namespace orelab
