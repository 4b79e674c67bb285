#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "orelab/oracle.hpp"

namespace orelab {

inline constexpr const char* kToolVersion = "0.1.0";

struct AnalyzeOptions {
    std::vector<Side> sides{Side::left, Side::right};
    EnumerationBudget budget;
    bool lattice = false;
};

/// Byte-stable analysis report (object keys sorted, element lists sorted).
nlohmann::json analysis_report(const FiniteRing& r, const std::string& spec_text, const AnalyzeOptions& options);
std::string analysis_text(const nlohmann::json& report);

nlohmann::json verification_json(const VerificationReport& report, bool with_timing);
std::string verification_text(const VerificationReport& report, bool with_timing);

/// Golden-file body: the enumerated multiplicative sets and the left,
/// right and commutative profiles, one "label|side|kind|ids" line each.
std::string golden_text(const FiniteRing& r, const EnumerationBudget& budget);

nlohmann::json to_json(const ElementSet& s);

}  // namespace orelab
