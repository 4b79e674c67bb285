#include "orelab/structure.hpp"

#include <algorithm>

namespace orelab {

namespace {

void sort_ideals(std::vector<IdealData>& v) {
    std::sort(v.begin(), v.end(), [](const IdealData& a, const IdealData& b) { return a.members < b.members; });
}

// {r | factor components in `mask` lie in the given per-factor sets}
ElementSet components_in(const FiniteRing& r, const std::vector<CentralFactor>& f, unsigned mask,
                         const std::vector<ElementSet>& per_factor) {
    ElementSet out(r.size());
    for (Elem x = 0; x < r.size(); ++x) {
        bool ok = true;
        for (std::size_t i = 0; i < f.size() && ok; ++i)
            if (mask >> i & 1u) ok = per_factor[i].contains(f[i].projection(x));
        if (ok) out.insert(x);
    }
    return out;
}

}  // namespace

CommProfile comm_profile(const FiniteRing& r) {
    if (!r.is_commutative()) throw PreconditionError("comm_profile requires a commutative ring: " + r.label());
    CommProfile p;
    p.factors = central_idempotent_decomposition(r);
    const std::size_t s = p.factors.size();
    p.local = s == 1;
    std::vector<ElementSet> maximal, unit_sets, zero_sets;
    for (const auto& f : p.factors) {
        ElementSet u = units(f.factor);
        maximal.push_back(u.complement());
        unit_sets.push_back(u);
        ElementSet z(f.factor.size());
        z.insert(f.factor.zero());
        zero_sets.push_back(z);
    }
    for (std::size_t i = 0; i < s; ++i)
        p.minimal_primes.push_back(
            ideal_from_members(r, p.factors[i].projection.preimage(maximal[i]), IdealKind::two_sided));

    const unsigned full = (1u << s) - 1;
    for (unsigned mask = 1; mask <= full; ++mask) {
        p.ass_of[mask] = components_in(r, p.factors, mask, zero_sets);
        p.predicted_largest[mask] = components_in(r, p.factors, mask, unit_sets);
        // For s = 1 only the full mask occurs, giving {0} and the units.
        p.predicted_ass.push_back(ideal_from_members(r, p.ass_of[mask], IdealKind::two_sided));
    }
    sort_ideals(p.predicted_ass);
    return p;
}

SemisimpleProfile semisimple_profile(const FiniteRing& r) {
    if (!is_semisimple(r)) throw PreconditionError("semisimple_profile requires a semisimple ring: " + r.label());
    SemisimpleProfile p;
    p.simple_factors = central_idempotent_decomposition(r);
    const std::size_t s = p.simple_factors.size();
    std::vector<ElementSet> zero_sets;
    for (const auto& f : p.simple_factors) {
        ElementSet z(f.factor.size());
        z.insert(f.factor.zero());
        zero_sets.push_back(z);
    }
    const unsigned full = (1u << s) - 1;
    for (unsigned mask = 1; mask <= full; ++mask)
        p.predicted_ass.push_back(
            ideal_from_members(r, components_in(r, p.simple_factors, mask, zero_sets), IdealKind::two_sided));
    sort_ideals(p.predicted_ass);
    for (std::size_t i = 0; i < s; ++i)
        p.predicted_max_ass.push_back(
            ideal_from_members(r, components_in(r, p.simple_factors, 1u << i, zero_sets), IdealKind::two_sided));
    return p;
}

GoldieReport goldie_report(const FiniteRing& r) {
    GoldieReport g;
    const ElementSet regular = regular_elements(r, Side::two_sided);
    ElementSet zero(r.size());
    zero.insert(r.zero());

    auto s0 = largest_denominator_set(r, ideal_from_members(r, zero, IdealKind::two_sided), Side::left);
    if (s0) {
        g.s0_equals_regular = s0->members == regular;
        g.ql_semisimple = is_semisimple(localize(r, *s0, Side::left).quotient);
    } else {
        g.notes += "S_0 missing; ";
    }

    const MultSet c{regular};
    const Classification cc = classify(r, c, Side::left);
    if (cc.status == OreStatus::denominator && cc.ass.size() == 1)
        g.qcl_semisimple = is_semisimple(localize(r, c, Side::left).quotient);
    g.left_order = cc.status != OreStatus::not_ore && jacobson_radical(r).size() == 1;
    g.semiprime = is_semiprime(r).semiprime;

    const auto ideals = left_ideals(r);
    g.essential_iff_regular = true;
    for (const auto& l : ideals) {
        bool essential = true;
        for (const auto& m : ideals)
            if (m.size() > 1 && (l.members & m.members).size() == 1) essential = false;
        const bool has_regular = l.members.intersects(regular);
        if (essential != has_regular) {
            g.essential_iff_regular = false;
            g.notes += "left ideal " + l.members.to_string() + (essential ? " essential without" : " has") +
                       " a regular element; ";
            break;
        }
    }
    return g;
}

}  // namespace orelab
