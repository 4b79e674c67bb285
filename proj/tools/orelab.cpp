// orelab: localization analysis of finite rings and an I_1 calculator.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "orelab/i1/expr.hpp"
#include "orelab/i1/fredholm.hpp"
#include "orelab/report.hpp"

namespace {

using namespace orelab;

enum Exit { ok = 0, verification_failed = 1, parse_error = 2, budget_refused = 3, precondition_violated = 4 };

std::string read_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ArgumentError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string s = ss.str();
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    return s;
}

std::vector<Side> sides_from(const std::string& s) {
    if (s == "left") return {Side::left};
    if (s == "right") return {Side::right};
    if (s == "two") return {Side::two_sided};
    return {Side::left, Side::right};
}

struct Common {
    std::string file;
    std::size_t max_enum = 12;
    std::uint64_t seed = 0;
    std::string out = "text";

    EnumerationBudget budget() const {
        EnumerationBudget b;
        b.max_ring_size_full = max_enum;
        b.seed = seed;
        return b;
    }
};

void add_common(CLI::App* cmd, Common& c, const char* default_out) {
    c.out = default_out;
    cmd->add_option("file", c.file, "ring spec file")->required();
    cmd->add_option("--max-enum", c.max_enum, "largest ring size enumerated exhaustively")->capture_default_str();
    cmd->add_option("--seed", c.seed, "seed for sampled enumeration")->capture_default_str();
    cmd->add_option("--out", c.out, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
}

std::string factor_text(const std::string& s) {
    const bool compound = s.find(' ') != std::string::npos || s.front() == '-';
    return compound ? "(" + s + ")" : s;
}

int run_i1(const std::string& sub, const std::vector<std::string>& args, const std::string& set_name) {
    using namespace orelab::i1;
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw ArgumentError("i1 " + sub + " expects " + std::to_string(n) + " expression(s)");
    };
    if (sub == "normalize") {
        need(1);
        std::cout << to_string(parse_i1(args[0])) << "\n";
    } else if (sub == "mul") {
        need(2);
        std::cout << to_string(parse_i1(args[0]) * parse_i1(args[1])) << "\n";
    } else if (sub == "star") {
        need(1);
        std::cout << to_string(star(parse_i1(args[0]))) << "\n";
    } else if (sub == "fredholm") {
        need(1);
        std::cout << to_string(fredholm(parse_i1(args[0]))) << "\n";
    } else if (sub == "member") {
        need(1);
        auto which = parse_largest_set(set_name);
        if (!which) throw ArgumentError("--set must be S0, Sl0 or Sr0");
        std::cout << (s_membership(parse_i1(args[0]), *which) ? "true" : "false") << "\n";
    } else if (sub == "factor") {
        need(1);
        auto f = m_factor(parse_i1(args[0]));
        std::cout << "v = " << to_string(f.v) << "\nw = " << to_string(f.w) << "\n";
    } else if (sub == "ore") {
        need(2);
        B1Element a = parse_b1(args[0]), b = parse_b1(args[1]);
        if (a.is_zero() || b.is_zero()) throw PreconditionError("ore needs nonzero elements of B1");
        auto r = ore_multipliers(a, b);
        const bool holds = r.u * a == r.v * b;
        std::cout << "u = " << to_string(r.u) << "\nv = " << to_string(r.v) << "\n"
                  << "u*" << factor_text(to_string(a)) << " == v*" << factor_text(to_string(b)) << " : "
                  << (holds ? "true" : "false") << "\n";
        return holds ? ok : verification_failed;
    } else if (sub == "b1") {
        need(1);
        std::cout << to_string(parse_b1(args[0])) << "\n";
    } else {
        throw ArgumentError("unknown i1 subcommand: " + sub);
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Localizations of finite rings and the algebra I_1"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    Common analyze_opts, verify_opts, golden_opts;
    std::string side = "both";
    bool lattice = false;
    auto* analyze = app.add_subcommand("analyze", "Ass, largest denominator sets, maxDen and radical");
    add_common(analyze, analyze_opts, "json");
    analyze->add_option("--side", side, "sides to analyze")
        ->check(CLI::IsMember({"left", "right", "both", "two"}))
        ->capture_default_str();
    analyze->add_flag("--lattice", lattice, "include the Den(R,0) lattice");

    std::string suite = "paper", fault;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "run the identity suite on a ring");
    add_common(verify, verify_opts, "text");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"paper"}))->capture_default_str();
    verify->add_option("--inject-fault", fault, "harness self-test")->check(CLI::IsMember({"join"}));
    verify->add_flag("--timing", timing, "report wall time");

    auto* golden = app.add_subcommand("golden", "print golden-file lines for a ring");
    add_common(golden, golden_opts, "text");

    std::string i1_sub, set_name = "S0";
    std::vector<std::string> i1_args;
    auto* i1 = app.add_subcommand("i1", "integro-differential operator calculator");
    i1->add_option("subcommand", i1_sub, "normalize|mul|star|fredholm|member|factor|ore|b1")
        ->required()
        ->check(CLI::IsMember({"normalize", "mul", "star", "fredholm", "member", "factor", "ore", "b1"}));
    i1->add_option("expressions", i1_args, "operator expressions");
    i1->add_option("--set", set_name, "S0|Sl0|Sr0 for member")->check(CLI::IsMember({"S0", "Sl0", "Sr0"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : parse_error;
    }

    try {
        if (*analyze) {
            const std::string spec = read_spec(analyze_opts.file);
            FiniteRing r = build_ring(spec);
            AnalyzeOptions o{sides_from(side), analyze_opts.budget(), lattice};
            auto report = analysis_report(r, spec, o);
            std::cout << (analyze_opts.out == "json" ? report.dump(2) + "\n" : analysis_text(report));
            return ok;
        }
        if (*verify) {
            FiniteRing r = build_ring(read_spec(verify_opts.file));
            VerifyOptions o;
            o.budget = verify_opts.budget();
            if (fault == "join") o.join_override = [](const FiniteRing&, const MultSet& s1, const MultSet&) { return s1; };
            auto report = verify_paper_identities(r, o);
            std::cout << (verify_opts.out == "json" ? verification_json(report, timing).dump(2) + "\n"
                                                    : verification_text(report, timing));
            return report.passed() ? ok : verification_failed;
        }
        if (*golden) {
            FiniteRing r = build_ring(read_spec(golden_opts.file));
            const auto budget = golden_opts.budget();
            if (!budget.full_for(r)) throw BudgetRefusal("golden files need full enumeration; raise --max-enum");
            for (Side s : {Side::left, Side::right})
                if (brute_profile(r, s, budget).profile != closed_form_profile(r, s)) {
                    std::cerr << "oracle disagrees with closed form on " << to_string(s) << " side\n";
                    return verification_failed;
                }
            std::cout << golden_text(r, budget);
            return ok;
        }
        if (*i1) return run_i1(i1_sub, i1_args, set_name);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return parse_error;
    } catch (const RingAxiomError& e) {
        std::cerr << "invalid ring: " << e.what() << "\n";
        return parse_error;
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return parse_error;
    } catch (const BudgetRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return budget_refused;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return precondition_violated;
    } catch (const ContainsZeroError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return precondition_violated;
    }
    return ok;
}
