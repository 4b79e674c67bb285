#include "orelab/ore_sets.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace orelab {

std::string_view to_string(OreStatus s) {
    switch (s) {
    case OreStatus::not_ore: return "not-ore";
    case OreStatus::ore: return "ore";
    case OreStatus::denominator: return "denominator";
    }
    return "?";
}

bool is_multiplicatively_closed(const FiniteRing& r, const ElementSet& s) {
    if (!s.contains(r.one()) || s.contains(r.zero())) return false;
    bool ok = true;
    s.for_each([&](Elem a) {
        if (!ok) return;
        s.for_each([&](Elem b) {
            if (!s.contains(r.mul(a, b))) ok = false;
        });
    });
    return ok;
}

MultSet MultSet::checked(const FiniteRing& r, const ElementSet& members) {
    if (!is_multiplicatively_closed(r, members))
        throw ArgumentError("not a multiplicative set: " + members.to_string());
    return MultSet{members};
}

ClosureOutcome try_multiplicative_closure(const FiniteRing& r, const std::vector<Elem>& gens,
                                          const ElementSet* base) {
    // Each element remembers how it was produced so a zero can be expanded
    // into a word in the generators (base elements count as generators).
    struct Origin {
        Elem left = 0, right = 0;
        bool atom = true;
    };
    std::vector<Origin> origin(r.size());
    ElementSet members(r.size());
    std::vector<Elem> list, work;

    auto word = [&](auto&& self, Elem x, std::vector<Elem>& out) -> void {
        if (origin[x].atom) {
            out.push_back(x);
            return;
        }
        self(self, origin[x].left, out);
        self(self, origin[x].right, out);
    };
    auto zero_chain = [&](Elem a, Elem b) {
        std::vector<Elem> w;
        word(word, a, w);
        word(word, b, w);
        return ClosureOutcome{std::nullopt, std::move(w)};
    };

    auto add_atom = [&](Elem e) {
        if (!members.contains(e)) {
            members.insert(e);
            list.push_back(e);
            work.push_back(e);
        }
    };
    if (base) base->for_each([&](Elem e) { members.insert(e), list.push_back(e); });
    add_atom(r.one());
    for (Elem g : gens) {
        if (g == r.zero()) return ClosureOutcome{std::nullopt, {g}};
        add_atom(g);
    }
    while (!work.empty()) {
        Elem a = work.back();
        work.pop_back();
        for (std::size_t i = 0; i < list.size(); ++i) {
            Elem b = list[i];
            for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                Elem p = r.mul(x, y);
                if (p == r.zero()) return zero_chain(x, y);
                if (!members.contains(p)) {
                    members.insert(p);
                    origin[p] = {x, y, false};
                    list.push_back(p);
                    work.push_back(p);
                }
            }
        }
    }
    return ClosureOutcome{MultSet{std::move(members)}, {}};
}

MultSet multiplicative_closure(const FiniteRing& r, const std::vector<Elem>& gens) {
    for (Elem g : gens)
        if (g >= r.size()) throw ArgumentError("generator id out of range");
    auto out = try_multiplicative_closure(r, gens);
    if (!out.set) throw ContainsZeroError(out.zero_chain);
    return *out.set;
}

ElementSet left_ass(const FiniteRing& r, const ElementSet& s) {
    ElementSet out(r.size());
    for (Elem x = 0; x < r.size(); ++x) {
        bool hit = false;
        s.for_each([&](Elem t) { hit = hit || r.mul(t, x) == r.zero(); });
        if (hit) out.insert(x);
    }
    return out;
}

ElementSet right_ass(const FiniteRing& r, const ElementSet& s) {
    ElementSet out(r.size());
    for (Elem x = 0; x < r.size(); ++x) {
        bool hit = false;
        s.for_each([&](Elem t) { hit = hit || r.mul(x, t) == r.zero(); });
        if (hit) out.insert(x);
    }
    return out;
}

namespace {

// Left Ore: for all s in S, x in R: Sx meets Rs.
std::optional<std::pair<Elem, Elem>> left_ore_failure(const FiniteRing& r, const std::vector<Elem>& s) {
    const std::size_t n = r.size();
    std::vector<ElementSet> rs;
    rs.reserve(s.size());
    for (Elem t : s) {
        ElementSet m(n);
        for (Elem x = 0; x < n; ++x) m.insert(r.mul(x, t));
        rs.push_back(std::move(m));
    }
    for (Elem x = 0; x < n; ++x) {
        ElementSet sx(n);
        for (Elem t : s) sx.insert(r.mul(t, x));
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!sx.intersects(rs[i])) return std::pair{s[i], x};
    }
    return std::nullopt;
}

// Right Ore: for all s in S, x in R: xS meets sR.
std::optional<std::pair<Elem, Elem>> right_ore_failure(const FiniteRing& r, const std::vector<Elem>& s) {
    const std::size_t n = r.size();
    std::vector<ElementSet> sr;
    sr.reserve(s.size());
    for (Elem t : s) {
        ElementSet m(n);
        for (Elem x = 0; x < n; ++x) m.insert(r.mul(t, x));
        sr.push_back(std::move(m));
    }
    for (Elem x = 0; x < n; ++x) {
        ElementSet xs(n);
        for (Elem t : s) xs.insert(r.mul(x, t));
        for (std::size_t i = 0; i < s.size(); ++i)
            if (!xs.intersects(sr[i])) return std::pair{s[i], x};
    }
    return std::nullopt;
}

std::optional<Elem> first_outside(const ElementSet& a, const ElementSet& b) {
    std::optional<Elem> out;
    a.for_each([&](Elem e) {
        if (!out && !b.contains(e)) out = e;
    });
    return out;
}

}  // namespace

Classification classify(const FiniteRing& r, const MultSet& s, Side side) {
    const std::vector<Elem> list = s.to_vector();
    const ElementSet al = left_ass(r, s.members);
    const ElementSet ar = right_ass(r, s.members);
    Classification c;
    c.side = side;

    auto one_side = [&](Side sd, Classification& out) {
        out.ore_witness = sd == Side::left ? left_ore_failure(r, list) : right_ore_failure(r, list);
        out.ass = sd == Side::left ? al : ar;
        if (out.ore_witness) {
            out.status = OreStatus::not_ore;
            return;
        }
        out.ass_is_ideal = true;
        // left: rs = 0 must imply tr = 0; right: sr = 0 must imply rt = 0
        out.denominator_witness = sd == Side::left ? first_outside(ar, al) : first_outside(al, ar);
        out.status = out.denominator_witness ? OreStatus::ore : OreStatus::denominator;
    };

    if (side != Side::two_sided) {
        one_side(side, c);
        return c;
    }
    Classification l, rt;
    one_side(Side::left, l);
    one_side(Side::right, rt);
    c.ass = al;
    c.ass_is_ideal = l.ass_is_ideal && rt.ass_is_ideal;
    c.ore_witness = l.ore_witness ? l.ore_witness : rt.ore_witness;
    c.denominator_witness = l.denominator_witness ? l.denominator_witness : rt.denominator_witness;
    c.status = std::min(l.status, rt.status);
    if (c.status == OreStatus::denominator && al != ar) c.status = OreStatus::ore;
    return c;
}

MultSet join(const FiniteRing& r, const MultSet& s1, const MultSet& s2) {
    auto out = try_multiplicative_closure(r, s2.to_vector(), &s1.members);
    if (!out.set) throw ContainsZeroError(out.zero_chain);
    return *out.set;
}

namespace {

void require_ore(const FiniteRing& r, const MultSet& s, Side mode) {
    auto c = classify(r, s, mode);
    if (c.status == OreStatus::not_ore)
        throw PreconditionError(std::string("set is not ") + std::string(to_string(mode)) + " Ore: " +
                                s.members.to_string());
}

}  // namespace

PIdealResult p_ideal(const FiniteRing& r, const MultSet& s, Side mode) {
    require_ore(r, s, mode);
    const std::vector<Elem> list = s.to_vector();
    ElementSet current(r.size());
    current.insert(r.zero());
    PIdealResult out;
    while (true) {
        std::vector<Elem> absorbed;
        for (Elem x = 0; x < r.size(); ++x) {
            bool hit = false;
            for (Elem t : list)
                if (current.contains(r.mul(t, x)) || current.contains(r.mul(x, t))) {
                    hit = true;
                    break;
                }
            if (hit) absorbed.push_back(x);
        }
        IdealData next = ideal_generated_by(r, absorbed, IdealKind::two_sided);
        if (!out.chain.empty() && next.members == current) break;
        out.chain.push_back(next.members);
        current = next.members;
        if (current.contains(r.one())) {
            out.proper = false;
            break;
        }
        if (out.chain.size() > r.size() + 1) throw std::logic_error("p_ideal failed to stabilize");
    }
    out.ideal = ideal_from_members(r, current, IdealKind::two_sided);
    return out;
}

bool is_localizable(const FiniteRing& r, const MultSet& s, Side mode) { return p_ideal(r, s, mode).proper; }

LocalizationResult localize(const FiniteRing& r, const MultSet& s, Side mode) {
    PIdealResult p = p_ideal(r, s, mode);
    if (!p.proper) throw DegenerateLocalization("p(S) is the whole ring; the localization is zero");
    QuotientRing q = quotient_ring(r, p.ideal);
    LocalizationResult out{q.ring, q.projection, q.projection.image(s.members), p.ideal};
    // In a finite ring the image of S is regular, hence invertible.
    if (!out.inverted_image.is_subset_of(units(q.ring)))
        throw std::logic_error("localization left a non-unit image of S");
    return out;
}

bool satisfies_localization_conditions(const FiniteRing& r, const MultSet& s, const LocalizationResult& loc,
                                       const ElementSet& expected_kernel) {
    const FiniteRing& q = loc.quotient;
    const ElementSet u = units(q);
    if (!loc.map.image(s.members).is_subset_of(u)) return false;
    for (Elem y = 0; y < q.size(); ++y) {
        bool found = false;
        s.members.for_each([&](Elem t) {
            if (found) return;
            Elem qt = q.mul(loc.map(t), y);
            for (Elem x = 0; x < r.size() && !found; ++x) found = loc.map(x) == qt;
        });
        if (!found) return false;
    }
    return loc.map.kernel() == expected_kernel && loc.map.is_homomorphism();
}

std::optional<MultSet> largest_denominator_set(const FiniteRing& r, const IdealData& a, Side side) {
    if (a.contains(r.one())) return std::nullopt;
    QuotientRing q = quotient_ring(r, a);
    MultSet t{q.projection.preimage(units(q.ring))};
    Classification c = classify(r, t, side);
    if (c.status == OreStatus::denominator && c.ass == a.members) return t;
    return std::nullopt;
}

std::vector<AssEntry> ass_with_largest(const FiniteRing& r, Side side) {
    std::vector<AssEntry> out;
    for (const auto& a : two_sided_ideals(r)) {
        if (a.contains(r.one())) continue;
        if (auto t = largest_denominator_set(r, a, side)) out.push_back({a, *t});
    }
    return out;
}

std::vector<IdealData> enumerate_ass(const FiniteRing& r, Side side) {
    std::vector<IdealData> out;
    for (auto& e : ass_with_largest(r, side)) out.push_back(std::move(e.ideal));
    return out;
}

LocalizationProfile finish_profile(const FiniteRing& r, std::vector<ElementSet> ass, std::vector<ElementSet> largest,
                                   std::vector<std::pair<ElementSet, ElementSet>> max_den_with_ass) {
    std::sort(max_den_with_ass.begin(), max_den_with_ass.end(),
              [](const auto& x, const auto& y) { return x.second < y.second || (x.second == y.second && x.first < y.first); });
    LocalizationProfile p{std::move(ass), std::move(largest), {}, r.all()};
    for (auto& [set, ideal] : max_den_with_ass) {
        p.max_den.push_back(set);
        p.radical &= ideal;
    }
    return p;
}

LocalizationProfile closed_form_profile(const FiniteRing& r, Side side) {
    auto entries = ass_with_largest(r, side);
    std::vector<ElementSet> ass, largest;
    std::vector<std::pair<ElementSet, ElementSet>> maxes;
    for (const auto& e : entries) {
        ass.push_back(e.ideal.members);
        largest.push_back(e.largest.members);
    }
    for (const auto& e : entries) {
        bool maximal = true;
        for (const auto& f : entries)
            if (f.largest.size() > e.largest.size() && e.largest.members.is_subset_of(f.largest.members))
                maximal = false;
        if (maximal) maxes.emplace_back(e.largest.members, e.ideal.members);
    }
    return finish_profile(r, std::move(ass), std::move(largest), std::move(maxes));
}

std::vector<MultSet> max_denominator_sets(const FiniteRing& r, Side side) {
    std::vector<MultSet> out;
    for (auto& m : closed_form_profile(r, side).max_den) out.push_back(MultSet{std::move(m)});
    return out;
}

IdealData localization_radical(const FiniteRing& r, Side side) {
    return ideal_from_members(r, closed_form_profile(r, side).radical, IdealKind::two_sided);
}

bool is_localization_maximal(const FiniteRing& r, Side side) {
    auto ass = enumerate_ass(r, side);
    return ass.size() == 1 && ass.front().size() == 1;
}

Den0Lattice den0_lattice(const FiniteRing& r, std::size_t size_limit) {
    if (r.size() > size_limit)
        throw BudgetRefusal("den0 lattice refused: ring size " + std::to_string(r.size()) + " exceeds limit " +
                            std::to_string(size_limit));
    const ElementSet u = units(r);
    const std::vector<Elem> ulist = u.to_vector();
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> nodes;
    ElementSet bottom(r.size());
    bottom.insert(r.one());
    nodes.push_back(bottom);
    seen.insert(bottom);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (Elem x : ulist) {
            if (nodes[i].contains(x)) continue;
            auto c = try_multiplicative_closure(r, {x}, &nodes[i]);
            if (c.set && seen.insert(c.set->members).second) nodes.push_back(c.set->members);
        }
    std::sort(nodes.begin(), nodes.end());
    std::map<std::vector<Elem>, std::size_t> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i].to_vector()] = i;

    Den0Lattice lat;
    lat.nodes = nodes;
    const std::size_t k = nodes.size();
    lat.join.assign(k, std::vector<std::size_t>(k, 0));
    lat.meet.assign(k, std::vector<std::size_t>(k, 0));
    auto fail = [&](const std::string& why) {
        if (lat.laws_hold) lat.failure = why;
        lat.laws_hold = false;
    };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            auto c = try_multiplicative_closure(r, nodes[j].to_vector(), &nodes[i]);
            auto it = c.set ? index.find(c.set->to_vector()) : index.end();
            if (it == index.end()) {
                fail("join not a node");
                continue;
            }
            lat.join[i][j] = it->second;
            auto mt = index.find((nodes[i] & nodes[j]).to_vector());
            if (mt == index.end()) {
                fail("meet not a node");
                continue;
            }
            lat.meet[i][j] = mt->second;
        }
    if (!lat.laws_hold) return lat;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const auto& jn = nodes[lat.join[i][j]];
            const auto& mt = nodes[lat.meet[i][j]];
            if (!nodes[i].is_subset_of(jn) || !nodes[j].is_subset_of(jn)) fail("join is not an upper bound");
            if (!mt.is_subset_of(nodes[i]) || !mt.is_subset_of(nodes[j])) fail("meet is not a lower bound");
            for (std::size_t m = 0; m < k; ++m) {
                if (nodes[i].is_subset_of(nodes[m]) && nodes[j].is_subset_of(nodes[m]) && !jn.is_subset_of(nodes[m]))
                    fail("join is not least");
                if (nodes[m].is_subset_of(nodes[i]) && nodes[m].is_subset_of(nodes[j]) && !nodes[m].is_subset_of(mt))
                    fail("meet is not greatest");
            }
            if (lat.join[i][j] != lat.join[j][i] || lat.meet[i][j] != lat.meet[j][i]) fail("not commutative");
            if (lat.join[i][lat.meet[i][j]] != i || lat.meet[i][lat.join[i][j]] != i) fail("absorption");
        }
    for (const auto& x : nodes)
        if (!bottom.is_subset_of(x) || !x.is_subset_of(u)) fail("node outside [{1}, units]");
    if (std::find(nodes.begin(), nodes.end(), u) == nodes.end()) fail("unit group is not a node");
    return lat;
}

}  // namespace orelab
