#include "orelab/finite_ring.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace orelab {

std::string_view to_string(Side side) {
    switch (side) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::two_sided: return "two-sided";
    }
    return "?";
}

namespace {

constexpr std::size_t kExhaustiveAxiomLimit = 64;
constexpr std::size_t kSampledTriples = 10000;
constexpr std::uint64_t kAxiomSeed = 0x5eed;

// Runs `check(a, b, c)` over every triple, or over seeded random triples
// when the ring is large.
template <class F>
void for_triples(std::size_t n, F&& check) {
    if (n <= kExhaustiveAxiomLimit) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c) check(a, b, c);
        return;
    }
    std::mt19937_64 rng(kAxiomSeed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::size_t t = 0; t < kSampledTriples; ++t) check(pick(rng), pick(rng), pick(rng));
}

}  // namespace

FiniteRing FiniteRing::from_tables(std::string label, std::size_t n, std::vector<Elem> add,
                                   std::vector<Elem> mul, Elem one, std::optional<Elem> zero,
                                   std::vector<FiniteRing> factors) {
    if (n < 2) throw ArgumentError("a ring with 1 != 0 needs at least 2 elements");
    if (add.size() != n * n || mul.size() != n * n)
        throw ArgumentError("table size does not match element count");
    for (std::size_t i = 0; i < n * n; ++i) {
        if (add[i] >= n) throw RingAxiomError("addition closed", Elem(i / n), Elem(i % n), 0);
        if (mul[i] >= n) throw RingAxiomError("multiplication closed", Elem(i / n), Elem(i % n), 0);
    }
    if (one >= n) throw ArgumentError("identity id out of range");
    auto A = [&](Elem a, Elem b) { return add[a * n + b]; };
    auto M = [&](Elem a, Elem b) { return mul[a * n + b]; };

    if (!zero) {
        for (Elem z = 0; z < n && !zero; ++z) {
            bool ok = true;
            for (Elem x = 0; x < n && ok; ++x) ok = A(z, x) == x && A(x, z) == x;
            if (ok) zero = z;
        }
        if (!zero) throw RingAxiomError("additive identity exists", 0, 0, 0);
    }
    const Elem z = *zero;
    if (z >= n) throw ArgumentError("zero id out of range");
    if (one == z) throw RingAxiomError("one != zero", one, z, 0);

    std::vector<Elem> neg(n, 0);
    for (Elem x = 0; x < n; ++x) {
        if (A(z, x) != x || A(x, z) != x) throw RingAxiomError("additive identity", z, x, 0);
        if (M(one, x) != x || M(x, one) != x) throw RingAxiomError("multiplicative identity", one, x, 0);
        bool found = false;
        for (Elem y = 0; y < n && !found; ++y)
            if (A(x, y) == z) {
                neg[x] = y;
                found = true;
            }
        if (!found) throw RingAxiomError("additive inverse", x, 0, 0);
        for (Elem y = 0; y < n; ++y)
            if (A(x, y) != A(y, x)) throw RingAxiomError("addition commutative", x, y, 0);
    }
    for_triples(n, [&](Elem a, Elem b, Elem c) {
        if (A(A(a, b), c) != A(a, A(b, c))) throw RingAxiomError("addition associative", a, b, c);
        if (M(M(a, b), c) != M(a, M(b, c))) throw RingAxiomError("multiplication associative", a, b, c);
        if (M(a, A(b, c)) != A(M(a, b), M(a, c))) throw RingAxiomError("left distributive", a, b, c);
        if (M(A(a, b), c) != A(M(a, c), M(b, c))) throw RingAxiomError("right distributive", a, b, c);
    });

    auto d = std::make_shared<Data>();
    d->label = std::move(label);
    d->size = n;
    d->add = std::move(add);
    d->mul = std::move(mul);
    d->neg = std::move(neg);
    d->zero = z;
    d->one = one;
    d->factors = std::move(factors);
    return FiniteRing(std::move(d));
}

bool FiniteRing::is_commutative() const {
    for (Elem a = 0; a < size(); ++a)
        for (Elem b = a + 1; b < size(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

FiniteRing FiniteRing::with_label(std::string label) const {
    auto d = std::make_shared<Data>(*d_);
    d->label = std::move(label);
    return FiniteRing(std::move(d));
}

// ---------------------------------------------------------------------------
// Morphisms

bool RingMorphism::is_homomorphism() const {
    if (map.size() != source.size()) return false;
    if (map[source.one()] != target.one()) return false;
    for (Elem a = 0; a < source.size(); ++a)
        for (Elem b = 0; b < source.size(); ++b) {
            if (map[source.add(a, b)] != target.add(map[a], map[b])) return false;
            if (map[source.mul(a, b)] != target.mul(map[a], map[b])) return false;
        }
    return true;
}

bool RingMorphism::is_bijective() const {
    if (source.size() != target.size()) return false;
    ElementSet seen(target.size());
    for (Elem x : map) seen.insert(x);
    return seen.size() == target.size();
}

ElementSet RingMorphism::kernel() const {
    ElementSet k(source.size());
    for (Elem x = 0; x < source.size(); ++x)
        if (map[x] == target.zero()) k.insert(x);
    return k;
}

ElementSet RingMorphism::image(const ElementSet& s) const {
    ElementSet out(target.size());
    s.for_each([&](Elem x) { out.insert(map[x]); });
    return out;
}

ElementSet RingMorphism::preimage(const ElementSet& t) const {
    ElementSet out(source.size());
    for (Elem x = 0; x < source.size(); ++x)
        if (t.contains(map[x])) out.insert(x);
    return out;
}

RingMorphism identity_morphism(const FiniteRing& r) {
    std::vector<Elem> m(r.size());
    for (Elem x = 0; x < r.size(); ++x) m[x] = x;
    return {r, r, std::move(m)};
}

RingMorphism compose(const RingMorphism& second, const RingMorphism& first) {
    std::vector<Elem> m(first.source.size());
    for (Elem x = 0; x < m.size(); ++x) m[x] = second.map[first.map[x]];
    return {first.source, second.target, std::move(m)};
}

// ---------------------------------------------------------------------------
// Element classes

ElementSet units(const FiniteRing& r) {
    ElementSet u(r.size());
    for (Elem a = 0; a < r.size(); ++a)
        for (Elem x = 0; x < r.size(); ++x)
            if (r.mul(a, x) == r.one() && r.mul(x, a) == r.one()) {
                u.insert(a);
                break;
            }
    return u;
}

ElementSet regular_elements(const FiniteRing& r, Side side) {
    ElementSet out(r.size());
    for (Elem a = 0; a < r.size(); ++a) {
        bool left_ok = true, right_ok = true;
        for (Elem x = 0; x < r.size(); ++x) {
            if (x == r.zero()) continue;
            if (r.mul(a, x) == r.zero()) left_ok = false;
            if (r.mul(x, a) == r.zero()) right_ok = false;
        }
        bool keep = side == Side::left ? left_ok : side == Side::right ? right_ok : (left_ok && right_ok);
        if (keep) out.insert(a);
    }
    return out;
}

bool is_idempotent(const FiniteRing& r, Elem e) { return r.mul(e, e) == e; }

bool is_central(const FiniteRing& r, Elem e) {
    for (Elem x = 0; x < r.size(); ++x)
        if (r.mul(e, x) != r.mul(x, e)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Ideals

namespace {

ElementSet close_ideal(const FiniteRing& r, const std::vector<Elem>& gens, IdealKind kind) {
    ElementSet members(r.size());
    std::vector<Elem> list;
    std::vector<Elem> work;
    auto push = [&](Elem e) {
        if (!members.contains(e)) {
            members.insert(e);
            list.push_back(e);
            work.push_back(e);
        }
    };
    push(r.zero());
    for (Elem g : gens) push(g);
    while (!work.empty()) {
        Elem m = work.back();
        work.pop_back();
        for (std::size_t i = 0; i < list.size(); ++i) push(r.add(m, list[i]));
        for (Elem x = 0; x < r.size(); ++x) {
            if (kind != IdealKind::right) push(r.mul(x, m));
            if (kind != IdealKind::left) push(r.mul(m, x));
        }
    }
    return members;
}

ElementSet ideal_sum(const FiniteRing& r, const ElementSet& a, const ElementSet& b) {
    ElementSet out(r.size());
    a.for_each([&](Elem x) { b.for_each([&](Elem y) { out.insert(r.add(x, y)); }); });
    return out;
}

std::vector<IdealData> ideal_lattice(const FiniteRing& r, IdealKind kind) {
    std::vector<ElementSet> principal;
    for (Elem x = 0; x < r.size(); ++x) principal.push_back(close_ideal(r, {x}, kind));
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> queue{close_ideal(r, {}, kind)};
    seen.insert(queue.front());
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (const auto& p : principal) {
            if (p.is_subset_of(queue[qi])) continue;
            ElementSet j = ideal_sum(r, queue[qi], p);
            if (seen.insert(j).second) queue.push_back(j);
        }
    }
    std::sort(queue.begin(), queue.end());
    std::vector<IdealData> out;
    out.reserve(queue.size());
    for (auto& m : queue) out.push_back(ideal_from_members(r, m, kind));
    return out;
}

}  // namespace

IdealData ideal_generated_by(const FiniteRing& r, const std::vector<Elem>& gens, IdealKind kind) {
    for (Elem g : gens)
        if (g >= r.size()) throw ArgumentError("generator id out of range");
    return {kind, close_ideal(r, gens, kind), gens};
}

IdealData ideal_from_members(const FiniteRing& r, const ElementSet& members, IdealKind kind) {
    std::vector<Elem> gens;
    ElementSet cur = close_ideal(r, {}, kind);
    members.for_each([&](Elem e) {
        if (!cur.contains(e)) {
            gens.push_back(e);
            cur = close_ideal(r, gens, kind);
        }
    });
    return {kind, members, std::move(gens)};
}

bool is_ideal(const FiniteRing& r, const ElementSet& m, IdealKind kind) {
    if (!m.contains(r.zero())) return false;
    bool ok = true;
    m.for_each([&](Elem a) {
        if (!ok) return;
        m.for_each([&](Elem b) {
            if (!m.contains(r.add(a, b))) ok = false;
        });
        for (Elem x = 0; x < r.size() && ok; ++x) {
            if (kind != IdealKind::right && !m.contains(r.mul(x, a))) ok = false;
            if (kind != IdealKind::left && !m.contains(r.mul(a, x))) ok = false;
        }
    });
    return ok;
}

std::vector<IdealData> two_sided_ideals(const FiniteRing& r) { return ideal_lattice(r, IdealKind::two_sided); }
std::vector<IdealData> left_ideals(const FiniteRing& r) { return ideal_lattice(r, IdealKind::left); }

QuotientRing quotient_ring(const FiniteRing& r, const IdealData& a) {
    if (a.kind != IdealKind::two_sided || !is_ideal(r, a.members, IdealKind::two_sided))
        throw ArgumentError("quotient_ring needs a two-sided ideal");
    if (a.contains(r.one())) throw ArgumentError("quotient_ring needs a proper ideal");
    const std::size_t n = r.size();
    std::vector<Elem> rep(n, 0);
    for (Elem x = 0; x < n; ++x) {
        Elem best = x;
        a.members.for_each([&](Elem y) { best = std::min(best, r.add(x, y)); });
        rep[x] = best;
    }
    std::vector<Elem> reps;
    for (Elem x = 0; x < n; ++x)
        if (rep[x] == x) reps.push_back(x);
    std::vector<Elem> coset_of_rep(n, 0);
    for (Elem i = 0; i < reps.size(); ++i) coset_of_rep[reps[i]] = i;
    std::vector<Elem> proj(n);
    for (Elem x = 0; x < n; ++x) proj[x] = coset_of_rep[rep[x]];
    const std::size_t k = reps.size();
    std::vector<Elem> add(k * k), mul(k * k);
    for (Elem i = 0; i < k; ++i)
        for (Elem j = 0; j < k; ++j) {
            add[i * k + j] = proj[r.add(reps[i], reps[j])];
            mul[i * k + j] = proj[r.mul(reps[i], reps[j])];
        }
    std::string label = r.label() + "/" + ElementSet(a.members).to_string();
    if (a.members.size() == 1) label = r.label();
    FiniteRing q = FiniteRing::from_tables(std::move(label), k, std::move(add), std::move(mul),
                                           proj[r.one()], proj[r.zero()]);
    return {q, RingMorphism{r, q, std::move(proj)}};
}

SemiprimeResult is_semiprime(const FiniteRing& r) {
    for (Elem x = 0; x < r.size(); ++x) {
        if (x == r.zero()) continue;
        IdealData p = ideal_generated_by(r, {x}, IdealKind::two_sided);
        bool square_zero = true;
        p.members.for_each([&](Elem a) {
            if (!square_zero) return;
            p.members.for_each([&](Elem b) {
                if (r.mul(a, b) != r.zero()) square_zero = false;
            });
        });
        if (square_zero) return {false, p};
    }
    return {true, std::nullopt};
}

std::vector<CentralFactor> central_idempotent_decomposition(const FiniteRing& r) {
    std::vector<Elem> central;
    for (Elem e = 0; e < r.size(); ++e)
        if (e != r.zero() && is_idempotent(r, e) && is_central(r, e)) central.push_back(e);
    std::vector<Elem> primitive;
    for (Elem e : central) {
        bool prim = true;
        for (Elem f : central) {
            Elem ef = r.mul(e, f);
            if (ef != r.zero() && ef != e) prim = false;
        }
        if (prim) primitive.push_back(e);
    }
    std::vector<CentralFactor> out;
    for (Elem e : primitive) {
        ElementSet block(r.size());
        for (Elem x = 0; x < r.size(); ++x) block.insert(r.mul(e, x));
        std::vector<Elem> members = block.to_vector();
        std::vector<Elem> index(r.size(), 0);
        for (Elem i = 0; i < members.size(); ++i) index[members[i]] = i;
        const std::size_t k = members.size();
        std::vector<Elem> add(k * k), mul(k * k);
        for (Elem i = 0; i < k; ++i)
            for (Elem j = 0; j < k; ++j) {
                add[i * k + j] = index[r.add(members[i], members[j])];
                mul[i * k + j] = index[r.mul(members[i], members[j])];
            }
        FiniteRing f = FiniteRing::from_tables(r.label() + "[e=" + std::to_string(e) + "]", k,
                                               std::move(add), std::move(mul), index[e], index[r.zero()]);
        std::vector<Elem> proj(r.size());
        for (Elem x = 0; x < r.size(); ++x) proj[x] = index[r.mul(e, x)];
        out.push_back({e, f, RingMorphism{r, f, std::move(proj)}});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Homomorphism search

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

struct HomSearch {
    const FiniteRing& src;
    const FiniteRing& dst;
    std::vector<RingMorphism> found;

    bool assign(std::vector<Elem>& img, std::vector<Elem>& assigned, Elem x, Elem y) {
        std::vector<Elem> work;
        auto set = [&](Elem a, Elem b) {
            if (img[a] == kUnset) {
                img[a] = b;
                assigned.push_back(a);
                work.push_back(a);
                return true;
            }
            return img[a] == b;
        };
        if (!set(x, y)) return false;
        while (!work.empty()) {
            Elem a = work.back();
            work.pop_back();
            for (std::size_t i = 0; i < assigned.size(); ++i) {
                Elem b = assigned[i];
                if (!set(src.add(a, b), dst.add(img[a], img[b]))) return false;
                if (!set(src.mul(a, b), dst.mul(img[a], img[b]))) return false;
                if (!set(src.mul(b, a), dst.mul(img[b], img[a]))) return false;
            }
        }
        return true;
    }

    void run(std::vector<Elem> img, std::vector<Elem> assigned) {
        Elem next = kUnset;
        for (Elem x = 0; x < src.size(); ++x)
            if (img[x] == kUnset) {
                next = x;
                break;
            }
        if (next == kUnset) {
            found.push_back(RingMorphism{src, dst, img});
            return;
        }
        for (Elem y = 0; y < dst.size(); ++y) {
            auto i2 = img;
            auto a2 = assigned;
            if (assign(i2, a2, next, y)) run(std::move(i2), std::move(a2));
        }
    }
};

}  // namespace

std::vector<RingMorphism> ring_homomorphisms(const FiniteRing& source, const FiniteRing& target) {
    HomSearch s{source, target, {}};
    std::vector<Elem> img(source.size(), kUnset);
    std::vector<Elem> assigned;
    if (!s.assign(img, assigned, source.zero(), target.zero())) return {};
    if (!s.assign(img, assigned, source.one(), target.one())) return {};
    s.run(std::move(img), std::move(assigned));
    return s.found;
}

std::vector<RingMorphism> ring_automorphisms(const FiniteRing& r) {
    std::vector<RingMorphism> out;
    for (auto& h : ring_homomorphisms(r, r))
        if (h.is_bijective()) out.push_back(std::move(h));
    return out;
}

bool is_semisimple(const FiniteRing& r) {
    auto ls = left_ideals(r);
    for (const auto& l : ls) {
        bool complemented = false;
        for (const auto& c : ls) {
            if ((l.members & c.members).size() == 1 && l.size() * c.size() == r.size()) {
                complemented = true;
                break;
            }
        }
        if (!complemented) return false;
    }
    return true;
}

ElementSet jacobson_radical(const FiniteRing& r) {
    auto ls = left_ideals(r);
    ElementSet rad = r.all();
    for (const auto& l : ls) {
        if (l.contains(r.one())) continue;
        bool maximal = true;
        for (const auto& m : ls)
            if (!m.contains(r.one()) && m.size() > l.size() && l.members.is_subset_of(m.members)) {
                maximal = false;
                break;
            }
        if (maximal) rad &= l.members;
    }
    return rad;
}

}  // namespace orelab
