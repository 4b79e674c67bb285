#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orelab/ore_sets.hpp"

namespace orelab {

struct EnumerationBudget {
    std::size_t max_ring_size_full = 12;
    std::size_t max_generator_arity = 3;
    std::size_t sample_count = 100000;
    std::uint64_t seed = 0;

    bool full_for(const FiniteRing& r) const { return r.size() <= max_ring_size_full; }
};

struct Enumeration {
    std::vector<MultSet> sets;  // sorted, duplicate-free
    bool full = false;
};

/// Full mode: every multiplicative set, built by extending closures one
/// element at a time from {1}. Sampled mode: closures of random generator
/// subsets of size <= max_generator_arity, plus {1} and the unit group.
Enumeration enumerate_mult_sets(const FiniteRing& r, const EnumerationBudget& budget);

struct BruteProfile {
    LocalizationProfile profile;
    bool certifying = false;  // false when the enumeration was sampled
    std::vector<MultSet> denominator_sets;
};

/// Ass, largest sets, maxDen and radical computed from the enumeration and
/// classify alone.
BruteProfile brute_profile(const FiniteRing& r, Side side, const EnumerationBudget& budget);
BruteProfile brute_profile(const FiniteRing& r, Side side, const Enumeration& e);

enum class CheckStatus { pass, fail, skip, info };
std::string_view to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;  // witness on FAIL, measurement on INFO, reason on SKIP
};

struct VerificationReport {
    std::string ring_label;
    std::vector<CheckResult> checks;
    double seconds = 0;
    bool certifying = false;

    bool passed() const;
    std::size_t count(CheckStatus s) const;
};

struct VerifyOptions {
    EnumerationBudget budget;
    /// Target rings for the universal-property check (size <= 8 used).
    std::vector<FiniteRing> targets;
    /// Replaces join() for harness self-tests.
    std::function<MultSet(const FiniteRing&, const MultSet&, const MultSet&)> join_override;
    std::size_t micro_size = 8;
    std::size_t lattice_limit = 16;
};

/// Runs every named identity on R. Check names are stable (see README).
VerificationReport verify_paper_identities(const FiniteRing& r, const VerifyOptions& options = {});

}  // namespace orelab
