// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "../support/random_elements.hpp"
#include "orelab/i1/fredholm.hpp"
#include "orelab/report.hpp"
#include "orelab/structure.hpp"

namespace fs = std::filesystem;
using namespace orelab;
using namespace orelab::i1;

namespace {

constexpr std::uint64_t kSeed = 20261017;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;  // keep the first witness
        ok = ok && cond;
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trimmed(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
}

struct CorpusRing {
    std::string name;
    FiniteRing ring;
};

std::vector<CorpusRing> load_corpus() {
    std::vector<fs::path> files;
    for (const auto& f : fs::directory_iterator("corpus"))
        if (f.path().extension() == ".ring") files.push_back(f.path());
    std::sort(files.begin(), files.end());
    std::vector<CorpusRing> out;
    for (const auto& f : files) out.push_back({f.stem().string(), build_ring(trimmed(slurp(f)))});
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

EnumerationBudget full_budget(std::size_t n) {
    EnumerationBudget b;
    b.max_ring_size_full = n;
    return b;
}

const CheckResult* find_check(const VerificationReport& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::vector<std::vector<Elem>> as_vectors(const std::vector<ElementSet>& v) {
    std::vector<std::vector<Elem>> out;
    for (const auto& s : v) out.push_back(s.to_vector());
    return out;
}

// 1. Identity suite on the whole corpus, plus a fault-injection self-test
// showing the harness notices a broken join.
Outcome corpus_sweep(const std::vector<CorpusRing>& corpus, std::vector<VerificationReport>& reports) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opts;
    opts.budget = full_budget(64);
    std::size_t failures = 0, checks = 0;
    for (const auto& c : corpus) {
        reports.push_back(verify_paper_identities(c.ring, opts));
        const auto& rep = reports.back();
        checks += rep.checks.size();
        failures += rep.count(CheckStatus::fail);
        for (const auto& ch : rep.checks)
            o.require(ch.status != CheckStatus::fail, c.name + ": " + ch.name + " " + ch.detail);
        o.require(rep.certifying, c.name + ": enumeration not exhaustive");
    }
    const double secs = seconds_since(t0);
    o.require(corpus.size() >= 10, "corpus has fewer than 10 rings");
    o.require(secs <= 300, "sweep took longer than 5 minutes");

    VerifyOptions faulty = opts;
    faulty.join_override = [](const FiniteRing&, const MultSet& s1, const MultSet&) { return s1; };
    bool caught = false;
    for (const auto& c : corpus)
        if (c.name == "z6") caught = !verify_paper_identities(c.ring, faulty).passed();
    o.require(caught, "injected join fault went unnoticed");

    if (o.ok) {
        std::ostringstream os;
        os << corpus.size() << " rings, " << checks << " checks, " << failures << " failures, fault injection caught, "
           << secs << "s";
        o.detail = os.str();
    }
    return o;
}

// 2. Brute-force profile equals the closed form on both sides.
Outcome oracle_agreement(const std::vector<CorpusRing>& corpus) {
    Outcome o;
    std::size_t rings = 0;
    for (const auto& c : corpus) {
        Enumeration e = enumerate_mult_sets(c.ring, full_budget(64));
        o.require(e.full, c.name + ": enumeration not exhaustive");
        for (Side s : {Side::left, Side::right, Side::two_sided}) {
            BruteProfile b = brute_profile(c.ring, s, e);
            o.require(b.certifying && b.profile == closed_form_profile(c.ring, s),
                      c.name + ": disagreement on " + std::string(to_string(s)) + " side");
        }
        ++rings;
    }
    if (o.ok) o.detail = std::to_string(rings) + " rings, left, right and two-sided profiles identical";
    return o;
}

// 3. The Z/6 values, the commutative predictions, and the frozen golden files.
Outcome z6_and_golden(const std::vector<CorpusRing>& corpus) {
    Outcome o;
    const FiniteRing z6 = zmod(6);
    for (Side s : {Side::left, Side::right}) {
        LocalizationProfile p = closed_form_profile(z6, s);
        o.require(as_vectors(p.ass) == std::vector<std::vector<Elem>>{{0}, {0, 2, 4}, {0, 3}}, "Z/6 Ass");
        o.require(as_vectors(p.max_den) == std::vector<std::vector<Elem>>{{1, 3, 5}, {1, 2, 4, 5}}, "Z/6 maxDen");
        o.require(p.radical.to_vector() == std::vector<Elem>{0}, "Z/6 radical");
    }
    std::size_t comm = 0;
    for (const auto& c : corpus) {
        if (!c.ring.is_commutative()) continue;
        CommProfile cp = comm_profile(c.ring);
        LocalizationProfile p = closed_form_profile(c.ring, Side::left);
        std::vector<ElementSet> predicted;
        for (const auto& a : cp.predicted_ass) predicted.push_back(a.members);
        o.require(predicted == p.ass, c.name + ": predicted Ass differs");
        for (const auto& [mask, s] : cp.predicted_largest) {
            const ElementSet& ideal = cp.ass_of.at(mask);
            bool found = false;
            for (std::size_t i = 0; i < p.ass.size(); ++i) found = found || (p.ass[i] == ideal && p.largest[i] == s);
            o.require(found, c.name + ": predicted largest set " + std::to_string(mask) + " differs");
        }
        ++comm;
    }
    std::size_t golden = 0;
    for (const auto& c : corpus) {
        const fs::path g = fs::path("golden") / (c.name + ".golden");
        if (!fs::exists(g)) continue;
        o.require(golden_text(c.ring, full_budget(36)) == slurp(g), c.name + ": golden file mismatch");
        ++golden;
    }
    o.require(golden >= 10, "fewer than 10 golden files");
    if (o.ok)
        o.detail = "Z/6 fixture holds, " + std::to_string(comm) + " commutative predictions match, " +
                   std::to_string(golden) + " golden files reproduced";
    return o;
}

// 4. Universal property on the rings of size <= 8.
Outcome universal_property(const std::vector<CorpusRing>& corpus, const std::vector<VerificationReport>& reports) {
    Outcome o;
    if (reports.size() != corpus.size()) return {false, "identity sweep did not complete"};
    std::size_t rings = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        if (corpus[i].ring.size() > 8) continue;
        const CheckResult* c = find_check(reports[i], "universal_property");
        o.require(c && c->status == CheckStatus::pass,
                  corpus[i].name + ": universal_property " + (c ? c->detail : std::string("missing")));
        ++rings;
    }
    if (o.ok) o.detail = std::to_string(rings) + " rings of size <= 8, no counterexamples";
    return o;
}

// 5. Relations, involution, grading and the action on Q[x].
Outcome i1_suite() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const I1Element d = I1Element::D(), in = I1Element::I(), h = I1Element::H();
    for (long i = 0; i <= 5; ++i)
        for (long j = 0; j <= 5; ++j) {
            const I1Element eij = I1Element::e(i, j);
            for (long k = 0; k <= 5; ++k)
                for (long l = 0; l <= 5; ++l)
                    o.require(eij * I1Element::e(k, l) == (j == k ? I1Element::e(i, l) : I1Element()),
                              "e(i,j) e(k,l) relation");
            o.require((power(d, static_cast<unsigned>(i + 1)) * eij).is_zero(), "D^{i+1} e(i,j) != 0");
            o.require((eij * power(in, static_cast<unsigned>(j + 1))).is_zero(), "e(i,j) I^{j+1} != 0");
            o.require(eij == power(in, static_cast<unsigned>(i)) * power(d, static_cast<unsigned>(j)) -
                                 power(in, static_cast<unsigned>(i + 1)) * power(d, static_cast<unsigned>(j + 1)),
                      "e(i,j) definition");
        }
    const I1Element proj = I1Element(1) - in * d;
    o.require(d * in == I1Element(1), "D I = 1");
    o.require((h * in - in * h - in).is_zero(), "[H,I] = I");
    o.require((h * d - d * h + d).is_zero(), "[H,D] = -D");
    o.require(h * proj == proj && proj * h == proj, "H(1-ID) = (1-ID)H = 1-ID");

    testing::ElementSource src(kSeed);
    for (int n = 0; n < 100; ++n) {
        const I1Element a = src.element(), b = src.element();
        o.require(star(a * b) == star(b) * star(a), "(ab)* != b* a*");
        o.require(star(star(a)) == a, "a** != a");
        o.require(star(a + b) == star(a) + star(b), "star not additive");
        if (n < 20) {
            Matrix w = a.window(20, 20), ws = star(a).window(20, 20);
            for (std::size_t r = 0; r < 20; ++r)
                for (std::size_t c = 0; c < 20; ++c) o.require(ws[r][c] == w[c][r], "star is not the transpose");
        }
        I1Element sum;
        for (int deg : degrees(a)) sum += graded_component(a, deg);
        o.require(sum == a, "graded components do not sum to a");
        for (int da : degrees(a))
            for (int db : degrees(b)) {
                auto prod = graded_component(a, da) * graded_component(b, db);
                auto ds = degrees(prod);
                o.require(ds.empty() || (ds.size() == 1 && ds.front() == da + db), "grading not multiplicative");
            }
    }
    for (int n = 0; n < 200; ++n) {
        const I1Element a = src.element(), b = src.element();
        const I1Element ab = a * b;
        for (int k = 0; k <= 30; ++k) {
            const Poly xk = Poly::monomial(1, k);
            o.require(act(ab, xk) == act(a, act(b, xk)), "action of a b differs from a(b(x^k))");
        }
    }
    const double secs = seconds_since(t0);
    o.require(secs <= 120, "I_1 suite took longer than 2 minutes");
    if (o.ok) o.detail = "matrix units, relations, 100 involution pairs, 200 action products, " + std::to_string(secs) + "s";
    return o;
}

I1Element non_f_element(testing::ElementSource& src) {
    for (;;) {
        I1Element a = src.element();
        if (!in_F(a)) return a;
    }
}

// 6. Fixed Fredholm values, window stability and the two cokernel routes.
Outcome fredholm_checks() {
    Outcome o;
    auto triple = [](const I1Element& a) { return to_string(fredholm(a)); };
    o.require(triple(I1Element::D()) == "ker=1 coker=0 index=1", "fredholm(D)");
    o.require(triple(I1Element::I()) == "ker=0 coker=1 index=-1", "fredholm(I)");
    o.require(triple(I1Element::H()) == "ker=0 coker=0 index=0", "fredholm(H)");
    o.require(triple(I1Element::e(0, 0)) == "ker=inf coker=inf index=undefined", "fredholm(e(0,0))");

    testing::ElementSource src(kSeed + 6);
    for (int n = 0; n < 50; ++n) {
        const I1Element a = non_f_element(src);
        const long k = kernel_bound(a);
        o.require(kernel_dim_at(a, k) == kernel_dim_at(a, k + 10), "kernel unstable beyond K for " + to_string(a));
    }
    for (int n = 0; n < 20; ++n) {
        const I1Element a = non_f_element(src);
        const long t = kernel_bound(a) + a.max_lambda_row() + 12;
        const long direct = cokernel_dim_by_image(a, t);
        o.require(direct == cokernel_dim_by_image(a, t + 5), "image-rank cokernel not settled for " + to_string(a));
        o.require(direct == cokernel_dim_transpose(a), "cokernel routes differ for " + to_string(a));
    }
    if (o.ok) o.detail = "fixed values, 50 stability windows, 20 cokernel comparisons";
    return o;
}

// 7. S_0 membership against window invertibility, and the factorization.
Outcome membership_and_factorization() {
    Outcome o;
    testing::ElementSource src(kSeed + 7);
    std::size_t members = 0;
    for (int n = 0; n < 50; ++n) {
        // Every third element has its zero diagonal entries patched by e(r,r)
        // so members occur alongside non-members.
        I1Element u = src.kh_plus_f();
        if (n % 3 == 0 && !u.mid().is_zero())
            for (long r : u.mid().shifted(1).nonneg_integer_roots()) u += I1Element::e(r, r, Rational(src.integer(1, 3)));
        const bool member = s_membership(u, LargestSet::s0);
        o.require(member == window_invertible(u), "membership differs from window invertibility for " + to_string(u));
        if (!member) continue;
        ++members;
        MFactor f = m_factor(u);
        o.require(f.v * f.w == u, "v w != u for " + to_string(u));
        o.require(in_KH_plus_F(f.v) && fredholm(f.v).bijective(), "v not bijective in K[H]+F");
        for (const auto& [ij, c] : f.v.lam()) o.require(ij.first == ij.second, "v has an off-diagonal e(i,j)");
        o.require(in_F(f.w - I1Element(1)), "w not in 1+F");
    }
    o.require(members > 0 && members < 50, "random sample did not mix members and non-members");
    if (o.ok) o.detail = "50 elements, " + std::to_string(members) + " in S_0, all factored";
    return o;
}

// 8. Ore multipliers in B_1.
Outcome ore_solver() {
    Outcome o;
    const B1Element dd = B1Element::D(), hh = B1Element::H();
    OreMultipliers fx = ore_multipliers(dd, hh);
    o.require(!fx.u.is_zero() && fx.u * dd == fx.v * hh, "fixture (D, H)");
    testing::ElementSource src(kSeed + 8);
    int widest = 0;
    for (int n = 0; n < 50; ++n) {
        const B1Element a = src.b1(), b = src.b1();
        OreMultipliers r = ore_multipliers(a, b);
        o.require(!r.u.is_zero() && !r.v.is_zero() && r.u * a == r.v * b,
                  "u a != v b for " + to_string(a) + ", " + to_string(b));
        widest = std::max(widest, r.window + r.h_window);
    }
    if (o.ok) o.detail = "fixture and 50 random pairs, widest ansatz " + std::to_string(widest);
    return o;
}

}  // namespace

int main() {
    const auto corpus = load_corpus();
    std::vector<VerificationReport> reports;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"corpus identity sweep", [&] { return corpus_sweep(corpus, reports); }},
        {"oracle agreement", [&] { return oracle_agreement(corpus); }},
        {"Z/6 fixture and golden files", [&] { return z6_and_golden(corpus); }},
        {"universal property at micro scale", [&] { return universal_property(corpus, reports); }},
        {"I_1 exact suite", i1_suite},
        {"Fredholm correctness", fredholm_checks},
        {"S_0 membership and factorization", membership_and_factorization},
        {"B_1 Ore solver", ore_solver},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }
    return all ? 0 : 1;
}
