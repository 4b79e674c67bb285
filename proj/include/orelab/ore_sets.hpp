#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orelab/finite_ring.hpp"

namespace orelab {

/// A multiplicatively closed subset: contains 1, excludes 0, closed under
/// products. Construct through multiplicative_closure or MultSet::checked.
struct MultSet {
    ElementSet members;

    static MultSet checked(const FiniteRing& r, const ElementSet& members);

    bool contains(Elem e) const { return members.contains(e); }
    std::size_t size() const { return members.size(); }
    std::vector<Elem> to_vector() const { return members.to_vector(); }
    friend bool operator==(const MultSet& a, const MultSet& b) { return a.members == b.members; }
    friend bool operator<(const MultSet& a, const MultSet& b) { return a.members < b.members; }
};

bool is_multiplicatively_closed(const FiniteRing& r, const ElementSet& s);

struct ClosureOutcome {
    std::optional<MultSet> set;
    std::vector<Elem> zero_chain;  // non-empty iff set is empty
};

/// Closure of gens together with an already closed `base` (defaults to {1}).
ClosureOutcome try_multiplicative_closure(const FiniteRing& r, const std::vector<Elem>& gens,
                                          const ElementSet* base = nullptr);
/// Smallest multiplicative set containing gens and 1. Throws
/// ContainsZeroError with a generator word multiplying to 0.
MultSet multiplicative_closure(const FiniteRing& r, const std::vector<Elem>& gens);

enum class OreStatus { not_ore = 0, ore = 1, denominator = 2 };
std::string_view to_string(OreStatus s);

struct Classification {
    Side side = Side::left;
    OreStatus status = OreStatus::not_ore;
    /// ass(S) for the side: {r | sr = 0} (left) or {r | rs = 0} (right).
    /// Guaranteed to be an ideal only when the Ore condition holds.
    ElementSet ass;
    bool ass_is_ideal = false;
    /// (s, r) with the Ore condition failing.
    std::optional<std::pair<Elem, Elem>> ore_witness;
    /// r annihilated on the wrong side with no partner in S.
    std::optional<Elem> denominator_witness;
};

/// Exhaustive Ore / denominator test. side=two_sided requires both sides
/// and ass_l = ass_r.
Classification classify(const FiniteRing& r, const MultSet& s, Side side);

ElementSet left_ass(const FiniteRing& r, const ElementSet& s);   // {x | sx = 0, s in S}
ElementSet right_ass(const FiniteRing& r, const ElementSet& s);  // {x | xs = 0, s in S}

/// Multiplicative closure of S1 u S2. Throws ContainsZeroError.
MultSet join(const FiniteRing& r, const MultSet& s1, const MultSet& s2);

struct PIdealResult {
    IdealData ideal;
    std::vector<ElementSet> chain;  // p_1 < p_2 < ... (strict), last = ideal
    bool proper = true;
};

/// The least ideal modulo which S becomes a regular denominator set,
/// computed as the fixpoint of iterated annihilator absorption:
///   p_{k+1} = two-sided closure of {r | sr in p_k or rs in p_k for some s}.
/// mode selects which Ore condition is required of S.
PIdealResult p_ideal(const FiniteRing& r, const MultSet& s, Side mode);
bool is_localizable(const FiniteRing& r, const MultSet& s, Side mode);

struct LocalizationResult {
    FiniteRing quotient;
    RingMorphism map;
    ElementSet inverted_image;
    IdealData kernel;
};

/// Universal localization R -> R/p(S). Throws DegenerateLocalization when
/// p(S) = R and PreconditionError when S is not Ore for `mode`.
LocalizationResult localize(const FiniteRing& r, const MultSet& s, Side mode);

/// Checks: images of S are units; every q is map(s)^-1 map(x); kernel = expected.
bool satisfies_localization_conditions(const FiniteRing& r, const MultSet& s, const LocalizationResult& loc,
                                       const ElementSet& expected_kernel);

/// Preimage of units(R/a) if it is a denominator set with ass exactly a.
std::optional<MultSet> largest_denominator_set(const FiniteRing& r, const IdealData& a, Side side);

struct AssEntry {
    IdealData ideal;
    MultSet largest;
};
/// Ass_side(R) with the largest denominator set of each ideal, sorted by ideal.
std::vector<AssEntry> ass_with_largest(const FiniteRing& r, Side side);
std::vector<IdealData> enumerate_ass(const FiniteRing& r, Side side);

/// Maximal denominator sets, ordered by their ass ideal.
std::vector<MultSet> max_denominator_sets(const FiniteRing& r, Side side);
IdealData localization_radical(const FiniteRing& r, Side side);
bool is_localization_maximal(const FiniteRing& r, Side side);

/// Everything the brute-force oracle recomputes independently.
struct LocalizationProfile {
    std::vector<ElementSet> ass;
    std::vector<ElementSet> largest;  // parallel to ass
    std::vector<ElementSet> max_den;  // ordered by ass ideal
    ElementSet radical;
    friend bool operator==(const LocalizationProfile&, const LocalizationProfile&) = default;
};
LocalizationProfile closed_form_profile(const FiniteRing& r, Side side);
/// Orders maximal sets by their ass ideal and computes the radical.
LocalizationProfile finish_profile(const FiniteRing& r, std::vector<ElementSet> ass, std::vector<ElementSet> largest,
                                   std::vector<std::pair<ElementSet, ElementSet>> max_den_with_ass);

/// Den(R,0) at finite scale: submonoids of the unit group.
struct Den0Lattice {
    std::vector<ElementSet> nodes;
    std::vector<std::vector<std::size_t>> join;
    std::vector<std::vector<std::size_t>> meet;
    bool laws_hold = true;
    std::string failure;
};
Den0Lattice den0_lattice(const FiniteRing& r, std::size_t size_limit = 16);

}  // namespace orelab
