#pragma once

#include <map>
#include <string>
#include <vector>

#include "orelab/ore_sets.hpp"

namespace orelab {

/// Closed-form localization data for a finite commutative ring, read off
/// its decomposition R = R_1 x ... x R_s into local rings.
struct CommProfile {
    std::vector<CentralFactor> factors;
    std::vector<IdealData> minimal_primes;  // p_i = {r | e_i r in m_i}, factor order
    std::vector<IdealData> predicted_ass;   // sorted
    /// For each nonempty I (bitmask over factors): R \ (union of p_i, i in I).
    /// The full mask gives the unit group.
    std::map<unsigned, ElementSet> predicted_largest;
    /// a(I) = {r | e_i r = 0 for i in I}, keyed like predicted_largest.
    std::map<unsigned, ElementSet> ass_of;
    bool local = false;  // s = 1: prediction {0} is an extension to the local case
};

/// Throws PreconditionError for non-commutative rings.
CommProfile comm_profile(const FiniteRing& r);

/// Finite semisimple rings: every proper ideal is an ass ideal and the
/// maximal localizations are the simple factors.
struct SemisimpleProfile {
    std::vector<CentralFactor> simple_factors;
    std::vector<IdealData> predicted_ass;          // sorted
    std::vector<IdealData> predicted_max_ass;      // omit-one-factor ideals, factor order
};

/// Throws PreconditionError unless R is semisimple.
SemisimpleProfile semisimple_profile(const FiniteRing& r);

/// The five equivalent conditions of Goldie's theorem, evaluated at finite
/// scale.
struct GoldieReport {
    bool ql_semisimple = false;            // Q_l(R) = S_0^-1 R semisimple
    bool qcl_semisimple = false;           // C_R left denominator, C_R^-1 R semisimple
    bool left_order = false;               // C_R left Ore and J(R) = 0
    bool semiprime = false;                // rank and chain conditions are automatic
    bool essential_iff_regular = false;    // over all left ideals
    bool s0_equals_regular = false;        // S_0(R) = C_R
    std::string notes;

    bool consistent() const {
        return ql_semisimple == qcl_semisimple && qcl_semisimple == left_order && left_order == semiprime &&
               semiprime == essential_iff_regular;
    }
};

GoldieReport goldie_report(const FiniteRing& r);

}  // namespace orelab
