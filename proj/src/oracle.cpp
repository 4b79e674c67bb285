#include "orelab/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <unordered_set>

#include "orelab/structure.hpp"

namespace orelab {

std::string_view to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::skip: return "SKIP";
    case CheckStatus::info: return "INFO";
    }
    return "?";
}

bool VerificationReport::passed() const { return count(CheckStatus::fail) == 0; }

std::size_t VerificationReport::count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

Enumeration enumerate_mult_sets(const FiniteRing& r, const EnumerationBudget& budget) {
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<MultSet> found;
    auto add = [&](MultSet s) {
        if (seen.insert(s.members).second) found.push_back(std::move(s));
    };
    Enumeration e;
    e.full = budget.full_for(r);
    if (e.full) {
        add(multiplicative_closure(r, {}));
        for (std::size_t i = 0; i < found.size(); ++i)
            for (Elem x = 0; x < r.size(); ++x) {
                if (found[i].contains(x) || x == r.zero()) continue;
                auto c = try_multiplicative_closure(r, {x}, &found[i].members);
                if (c.set) add(std::move(*c.set));
            }
    } else {
        add(multiplicative_closure(r, {}));
        add(MultSet{units(r)});
        std::mt19937_64 rng(budget.seed);
        std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(r.size() - 1));
        std::uniform_int_distribution<std::size_t> arity(1, std::max<std::size_t>(1, budget.max_generator_arity));
        for (std::size_t k = 0; k < budget.sample_count; ++k) {
            std::vector<Elem> gens(arity(rng));
            for (auto& g : gens) g = pick(rng);
            auto c = try_multiplicative_closure(r, gens);
            if (c.set) add(std::move(*c.set));
        }
    }
    std::sort(found.begin(), found.end());
    e.sets = std::move(found);
    return e;
}

BruteProfile brute_profile(const FiniteRing& r, Side side, const EnumerationBudget& budget) {
    return brute_profile(r, side, enumerate_mult_sets(r, budget));
}

BruteProfile brute_profile(const FiniteRing& r, Side side, const Enumeration& e) {
    BruteProfile out;
    out.certifying = e.full;
    std::map<ElementSet, ElementSet> union_by_ass;
    std::vector<std::pair<MultSet, ElementSet>> dens;
    for (const auto& s : e.sets) {
        Classification c = classify(r, s, side);
        if (c.status != OreStatus::denominator) continue;
        out.denominator_sets.push_back(s);
        auto [it, inserted] = union_by_ass.try_emplace(c.ass, s.members);
        if (!inserted) it->second |= s.members;
        dens.emplace_back(s, c.ass);
    }
    std::vector<ElementSet> ass, largest;
    for (const auto& [a, u] : union_by_ass) {
        ass.push_back(a);
        largest.push_back(u);
    }
    std::vector<std::pair<ElementSet, ElementSet>> maxes;
    for (const auto& [s, a] : dens) {
        bool maximal = true;
        for (const auto& [t, b] : dens)
            if (t.size() > s.size() && s.members.is_subset_of(t.members)) {
                maximal = false;
                break;
            }
        if (maximal) maxes.emplace_back(s.members, a);
    }
    out.profile = finish_profile(r, std::move(ass), std::move(largest), std::move(maxes));
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string side_tag(Side s) { return std::string(to_string(s)); }

std::string sets_string(const std::vector<ElementSet>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
    return out + "]";
}

ElementSet zero_set(const FiniteRing& r) {
    ElementSet z(r.size());
    z.insert(r.zero());
    return z;
}

std::vector<FiniteRing> default_targets() {
    return {zmod(2), zmod(3), zmod(4), product_ring({zmod(2), zmod(2)}), triangular_ring(zmod(2), 2)};
}

bool isomorphic(const FiniteRing& a, const FiniteRing& b) {
    if (a.size() != b.size()) return false;
    for (const auto& h : ring_homomorphisms(a, b))
        if (h.is_bijective()) return true;
    return false;
}

class Verifier {
public:
    Verifier(const FiniteRing& r, const VerifyOptions& o) : r_(r), o_(o) {
        enumeration_ = enumerate_mult_sets(r, o.budget);
        for (Side s : {Side::left, Side::right}) {
            closed_[idx(s)] = closed_form_profile(r, s);
            brute_[idx(s)] = brute_profile(r, s, enumeration_);
        }
    }

    VerificationReport run() {
        auto t0 = Clock::now();
        report_.ring_label = r_.label();
        report_.certifying = enumeration_.full;
        regular_equals_units();
        s0_equals_units();
        oracle_agreement();
        join_theorem();
        largest_equals_union();
        p_equals_ass();
        two_sided_localizable();
        maxden_nonempty();
        maximal_quotient_structure();
        saturation();
        automorphism_stability();
        product_factorization();
        universal_property();
        den0();
        goldie();
        comm_agreement();
        semisimple_case();
        ass_left_vs_right();
        non_localizable_search();
        report_.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        return report_;
    }

private:
    static std::size_t idx(Side s) { return s == Side::left ? 0 : 1; }

    void add(std::string name, CheckStatus st, std::string detail = {}) {
        report_.checks.push_back({std::move(name), st, std::move(detail)});
    }
    // One result per side, failing with the first witness.
    template <class F>
    void per_side(const std::string& name, F&& f) {
        for (Side s : {Side::left, Side::right}) {
            std::string witness;
            bool ok = f(s, witness);
            add(name + "." + side_tag(s), ok ? CheckStatus::pass : CheckStatus::fail, witness);
        }
    }

    void regular_equals_units() {
        const ElementSet u = units(r_);
        for (Side s : {Side::left, Side::right, Side::two_sided}) {
            ElementSet reg = regular_elements(r_, s);
            add("regular_equals_units." + side_tag(s), reg == u ? CheckStatus::pass : CheckStatus::fail,
                reg == u ? "" : "regular " + reg.to_string() + " units " + u.to_string());
        }
    }

    void s0_equals_units() {
        per_side("s0_equals_units", [&](Side s, std::string& w) {
            auto s0 = largest_denominator_set(r_, ideal_from_members(r_, zero_set(r_), IdealKind::two_sided), s);
            if (!s0) return w = "{0} not in Ass", false;
            if (s0->members != units(r_)) return w = "S0 = " + s0->members.to_string(), false;
            return true;
        });
    }

    void oracle_agreement() {
        if (!enumeration_.full) {
            add("oracle_agreement", CheckStatus::skip, "sampled enumeration");
            return;
        }
        per_side("oracle_agreement", [&](Side s, std::string& w) {
            const auto& c = closed_[idx(s)];
            const auto& b = brute_[idx(s)].profile;
            if (c.ass != b.ass) return w = "ass closed " + sets_string(c.ass) + " brute " + sets_string(b.ass), false;
            if (c.largest != b.largest)
                return w = "largest closed " + sets_string(c.largest) + " brute " + sets_string(b.largest), false;
            if (c.max_den != b.max_den)
                return w = "maxDen closed " + sets_string(c.max_den) + " brute " + sets_string(b.max_den), false;
            if (c.radical != b.radical)
                return w = "radical closed " + c.radical.to_string() + " brute " + b.radical.to_string(), false;
            return true;
        });
    }

    void join_theorem() {
        per_side("join_theorem", [&](Side s, std::string& w) {
            std::map<ElementSet, std::vector<const MultSet*>> by_ass;
            for (const auto& d : brute_[idx(s)].denominator_sets)
                by_ass[classify(r_, d, s).ass].push_back(&d);
            for (const auto& [a, sets] : by_ass)
                for (std::size_t i = 0; i < sets.size(); ++i)
                    for (std::size_t j = i + 1; j < sets.size(); ++j) {
                        const MultSet &s1 = *sets[i], &s2 = *sets[j];
                        auto fail = [&](const std::string& why) {
                            w = why + ": S1=" + s1.members.to_string() + " S2=" + s2.members.to_string();
                            return false;
                        };
                        MultSet jn = o_.join_override ? o_.join_override(r_, s1, s2) : join(r_, s1, s2);
                        if (!(s1.members | s2.members).is_subset_of(jn.members)) return fail("join misses S1 u S2");
                        if (!is_multiplicatively_closed(r_, jn.members)) return fail("join not closed");
                        Classification c = classify(r_, jn, s);
                        if (c.status != OreStatus::denominator || c.ass != a)
                            return fail("join not a denominator set with ass " + a.to_string());
                    }
            return true;
        });
    }

    void largest_equals_union() {
        per_side("largest_equals_union", [&](Side s, std::string& w) {
            const auto& b = brute_[idx(s)].profile;
            for (std::size_t i = 0; i < b.ass.size(); ++i) {
                auto t = largest_denominator_set(r_, ideal_from_members(r_, b.ass[i], IdealKind::two_sided), s);
                if (!t || t->members != b.largest[i]) {
                    w = "ass " + b.ass[i].to_string() + " union " + b.largest[i].to_string() + " largest " +
                        (t ? t->members.to_string() : "none");
                    return false;
                }
            }
            return true;
        });
    }

    void p_equals_ass() {
        per_side("p_equals_ass", [&](Side s, std::string& w) {
            for (const auto& d : brute_[idx(s)].denominator_sets) {
                auto p = p_ideal(r_, d, s);
                auto c = classify(r_, d, s);
                if (p.ideal.members != c.ass) {
                    w = "S=" + d.members.to_string() + " p=" + p.ideal.members.to_string() + " ass=" +
                        c.ass.to_string();
                    return false;
                }
            }
            return true;
        });
    }

    void two_sided_localizable() {
        std::size_t n = 0;
        for (const auto& s : enumeration_.sets) {
            if (classify(r_, s, Side::two_sided).status == OreStatus::not_ore) continue;
            ++n;
            if (!p_ideal(r_, s, Side::two_sided).proper) {
                add("two_sided_localizable", CheckStatus::fail, "S=" + s.members.to_string());
                return;
            }
        }
        add("two_sided_localizable", CheckStatus::pass, std::to_string(n) + " two-sided Ore sets");
    }

    void maxden_nonempty() {
        per_side("maxden_nonempty", [&](Side s, std::string& w) {
            if (closed_[idx(s)].max_den.empty()) return w = "no maximal denominator set", false;
            return true;
        });
    }

    void maximal_quotient_structure() {
        per_side("maximal_quotient_structure", [&](Side s, std::string& w) {
            for (const auto& m : closed_[idx(s)].max_den) {
                MultSet ms{m};
                auto loc = localize(r_, ms, s);
                ElementSet u = units(loc.quotient);
                if (loc.map.preimage(u) != m) return w = "S != preimage of units, S=" + m.to_string(), false;
                if (loc.map.image(m) != u) return w = "image of S != units, S=" + m.to_string(), false;
                auto a = enumerate_ass(loc.quotient, s);
                if (a.size() != 1 || a.front().size() != 1)
                    return w = "localization at " + m.to_string() + " is not localization maximal", false;
            }
            return true;
        });
    }

    void saturation() {
        per_side("saturation", [&](Side s, std::string& w) {
            const auto& c = closed_[idx(s)];
            for (const auto& big : c.largest)
                for (const auto& d : brute_[idx(s)].denominator_sets) {
                    if (!d.members.is_subset_of(big)) continue;
                    bool ok = true;
                    d.members.for_each([&](Elem t) {
                        for (Elem x = 0; x < r_.size() && ok; ++x) {
                            if (big.contains(x)) continue;
                            if (big.contains(r_.mul(t, x)) || big.contains(r_.mul(x, t))) {
                                ok = false;
                                w = "S_a=" + big.to_string() + " S=" + d.members.to_string() + " s=" +
                                    std::to_string(t) + " r=" + std::to_string(x);
                            }
                        }
                    });
                    if (!ok) return false;
                }
            return true;
        });
    }

    void automorphism_stability() {
        if (r_.size() > o_.micro_size) {
            add("automorphism_stability", CheckStatus::skip, "ring larger than micro size");
            return;
        }
        const auto autos = ring_automorphisms(r_);
        per_side("automorphism_stability", [&](Side s, std::string& w) {
            const auto& c = closed_[idx(s)];
            for (const auto& sigma : autos)
                for (std::size_t i = 0; i < c.ass.size(); ++i) {
                    ElementSet image_ass = sigma.image(c.ass[i]);
                    auto it = std::find(c.ass.begin(), c.ass.end(), image_ass);
                    if (it == c.ass.end()) return w = "sigma(a) not in Ass for a=" + c.ass[i].to_string(), false;
                    if (sigma.image(c.largest[i]) != c.largest[it - c.ass.begin()])
                        return w = "sigma(S_a) != S_sigma(a) for a=" + c.ass[i].to_string(), false;
                }
            return true;
        });
    }

    void product_factorization() {
        const auto& fs = r_.factors();
        if (fs.empty()) {
            add("product_factorization", CheckStatus::skip, "not built as a product");
            return;
        }
        per_side("product_factorization", [&](Side s, std::string& w) {
            std::vector<ElementSet> s0;
            for (const auto& f : fs) {
                auto t = largest_denominator_set(f, ideal_from_members(f, zero_set(f), IdealKind::two_sided), s);
                if (!t) return w = "factor " + f.label() + " lacks S0", false;
                s0.push_back(t->members);
            }
            ElementSet expected(r_.size());
            for (Elem x = 0; x < r_.size(); ++x) {
                Elem rest = x;
                bool in = true;
                for (std::size_t k = fs.size(); k-- > 0;) {
                    in = in && s0[k].contains(rest % fs[k].size());
                    rest /= static_cast<Elem>(fs[k].size());
                }
                if (in) expected.insert(x);
            }
            auto t = largest_denominator_set(r_, ideal_from_members(r_, zero_set(r_), IdealKind::two_sided), s);
            if (!t || t->members != expected)
                return w = "S0(R)=" + (t ? t->members.to_string() : "none") + " product " + expected.to_string(),
                       false;
            return true;
        });
    }

    void universal_property() {
        if (r_.size() > o_.micro_size) {
            add("universal_property", CheckStatus::skip, "ring larger than micro size");
            return;
        }
        std::vector<FiniteRing> targets = o_.targets.empty() ? default_targets() : o_.targets;
        targets.push_back(r_);
        std::vector<std::vector<RingMorphism>> from_r;
        for (const auto& t : targets) from_r.push_back(t.size() <= o_.micro_size ? ring_homomorphisms(r_, t)
                                                                               : std::vector<RingMorphism>{});
        std::size_t checked = 0;
        for (const auto& s : enumeration_.sets) {
            if (classify(r_, s, Side::left).status == OreStatus::not_ore) continue;
            if (!p_ideal(r_, s, Side::left).proper) continue;
            auto loc = localize(r_, s, Side::left);
            for (std::size_t k = 0; k < targets.size(); ++k) {
                if (from_r[k].empty()) continue;
                const ElementSet tu = units(targets[k]);
                const auto from_q = ring_homomorphisms(loc.quotient, targets[k]);
                for (const auto& f : from_r[k]) {
                    if (!f.image(s.members).is_subset_of(tu)) continue;
                    std::size_t factorizations = 0;
                    for (const auto& h : from_q)
                        if (compose(h, loc.map).map == f.map) ++factorizations;
                    ++checked;
                    if (factorizations != 1) {
                        add("universal_property", CheckStatus::fail,
                            "S=" + s.members.to_string() + " target " + targets[k].label() + " has " +
                                std::to_string(factorizations) + " factorizations");
                        return;
                    }
                }
            }
        }
        add("universal_property", CheckStatus::pass, std::to_string(checked) + " homomorphisms factor uniquely");
    }

    void den0() {
        const ElementSet u = units(r_);
        std::vector<ElementSet> in_units, den_zero;
        for (const auto& s : enumeration_.sets)
            if (s.members.is_subset_of(u)) in_units.push_back(s.members);
        for (const auto& d : brute_[0].denominator_sets)
            if (classify(r_, d, Side::left).ass.size() == 1) den_zero.push_back(d.members);
        add("den0_characterization", in_units == den_zero ? CheckStatus::pass : CheckStatus::fail,
            in_units == den_zero ? "" : "unit submonoids " + sets_string(in_units) + " Den(R,0) " + sets_string(den_zero));
        if (r_.size() > o_.lattice_limit) {
            add("den0_lattice", CheckStatus::skip, "ring larger than lattice limit");
            return;
        }
        auto lat = den0_lattice(r_, o_.lattice_limit);
        bool ok = lat.laws_hold && (!enumeration_.full || lat.nodes == in_units);
        add("den0_lattice", ok ? CheckStatus::pass : CheckStatus::fail,
            ok ? std::to_string(lat.nodes.size()) + " nodes" : lat.failure + " nodes " + sets_string(lat.nodes));
    }

    void goldie() {
        GoldieReport g = goldie_report(r_);
        bool ok = g.consistent() && (!g.ql_semisimple || g.s0_equals_regular);
        std::string detail = std::string("conditions ") + (g.ql_semisimple ? "hold" : "fail") + " together";
        if (!ok)
            detail = std::string("ql=") + (g.ql_semisimple ? "1" : "0") + " qcl=" + (g.qcl_semisimple ? "1" : "0") +
                     " order=" + (g.left_order ? "1" : "0") + " semiprime=" + (g.semiprime ? "1" : "0") +
                     " essential=" + (g.essential_iff_regular ? "1" : "0") + " " + g.notes;
        add("goldie_equivalence", ok ? CheckStatus::pass : CheckStatus::fail, detail);
    }

    void comm_agreement() {
        if (!r_.is_commutative()) {
            add("comm_profile_agreement", CheckStatus::skip, "not commutative");
            return;
        }
        CommProfile p = comm_profile(r_);
        std::vector<ElementSet> predicted;
        for (const auto& a : p.predicted_ass) predicted.push_back(a.members);
        std::string w;
        for (Side s : {Side::left, Side::right}) {
            if (predicted != closed_[idx(s)].ass) w = "Ass predicted " + sets_string(predicted) + " closed form " +
                                                      sets_string(closed_[idx(s)].ass);
            if (enumeration_.full && predicted != brute_[idx(s)].profile.ass)
                w = "Ass predicted " + sets_string(predicted) + " enumerated " + sets_string(brute_[idx(s)].profile.ass);
        }
        for (const auto& [mask, a] : p.ass_of) {
            if (!w.empty()) break;
            const auto& b = brute_[0].profile;
            auto t = largest_denominator_set(r_, ideal_from_members(r_, a, IdealKind::two_sided), Side::left);
            if (!t || t->members != p.predicted_largest.at(mask))
                w = "largest for " + a.to_string() + " predicted " + p.predicted_largest.at(mask).to_string();
            auto it = std::find(b.ass.begin(), b.ass.end(), a);
            if (enumeration_.full && (it == b.ass.end() || b.largest[it - b.ass.begin()] != p.predicted_largest.at(mask)))
                w = "enumerated largest for " + a.to_string() + " differs from prediction";
        }
        add("comm_profile_agreement", w.empty() ? CheckStatus::pass : CheckStatus::fail,
            w.empty() ? std::to_string(p.factors.size()) + " local factors" + (p.local ? " (local extension)" : "")
                      : w);
    }

    void semisimple_case() {
        if (!is_semisimple(r_)) {
            add("semisimple_maximal_localizations", CheckStatus::skip, "not semisimple");
            return;
        }
        SemisimpleProfile p = semisimple_profile(r_);
        std::string w;
        std::vector<ElementSet> predicted;
        for (const auto& a : p.predicted_ass) predicted.push_back(a.members);
        if (predicted != closed_[0].ass) w = "Ass predicted " + sets_string(predicted);
        std::set<ElementSet> max_ass;
        for (const auto& m : closed_[0].max_den) max_ass.insert(classify(r_, MultSet{m}, Side::left).ass);
        std::set<ElementSet> want;
        for (const auto& a : p.predicted_max_ass) want.insert(a.members);
        if (w.empty() && max_ass != want) w = "maximal ass ideals differ from omit-one-factor ideals";
        for (std::size_t i = 0; i < p.predicted_max_ass.size() && w.empty(); ++i) {
            auto t = largest_denominator_set(r_, p.predicted_max_ass[i], Side::left);
            if (!t) {
                w = "omit-one ideal not in Ass";
                break;
            }
            auto loc = localize(r_, *t, Side::left);
            if (!isomorphic(loc.quotient, p.simple_factors[i].factor))
                w = "maximal localization " + std::to_string(i) + " is not the simple factor";
        }
        add("semisimple_maximal_localizations", w.empty() ? CheckStatus::pass : CheckStatus::fail,
            w.empty() ? std::to_string(p.simple_factors.size()) + " simple factors" : w);
    }

    void ass_left_vs_right() {
        bool same = closed_[0].ass == closed_[1].ass;
        add("ass_left_vs_right", CheckStatus::info,
            same ? "Ass_l = Ass_r" : "Ass_l " + sets_string(closed_[0].ass) + " Ass_r " + sets_string(closed_[1].ass));
    }

    void non_localizable_search() {
        std::size_t ore = 0, bad = 0;
        std::string first;
        for (const auto& s : enumeration_.sets) {
            if (classify(r_, s, Side::left).status == OreStatus::not_ore) continue;
            ++ore;
            if (!p_ideal(r_, s, Side::left).proper) {
                if (!bad++) first = " first " + s.members.to_string();
            }
        }
        add("non_localizable_ore_search", CheckStatus::info,
            std::to_string(ore) + " left Ore sets, " + std::to_string(bad) + " with p(S) = R" + first +
                (enumeration_.full ? "" : " (sampled)"));
    }

    const FiniteRing& r_;
    const VerifyOptions& o_;
    Enumeration enumeration_;
    LocalizationProfile closed_[2];
    BruteProfile brute_[2];
    VerificationReport report_;
};

}  // namespace

VerificationReport verify_paper_identities(const FiniteRing& r, const VerifyOptions& options) {
    return Verifier(r, options).run();
}

}  // namespace orelab
