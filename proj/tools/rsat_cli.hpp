#pragma once

#include "rsat/rsat.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace rsat::cli {

enum Exit { kHolds = 0, kFails = 1, kError = 2 };

namespace detail {

inline std::string verdict(const std::string& kind, const std::string& params, const VerificationReport& rep)
{
    std::string line = "VERDICT " + kind;
    if (!params.empty())
        line += " " + params;
    line += rep.holds ? " holds" : " fails";
    if (!rep.holds) {
        const auto w = rep.witness.to_string();
        if (!w.empty())
            line += " witness=" + w;
    }
    return line;
}

inline Pattern load_pattern(const std::string& file, int r)
{
    if (file.empty())
        return Pattern::clique(r);
    return Pattern(underlying(read_graph_file(file)));
}

struct VerifyArgs {
    std::string kind;
    int r = 3;
    int k = 1;
    int fresh = 1;
    std::string pattern;
    std::string input;
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    const AnyGraph input = read_graph_file(a.input);
    std::string params = "r=" + std::to_string(a.r);
    VerifyOptions opt;
    opt.fresh_colors = a.fresh;
    VerificationReport rep;
    if (a.kind == "rfree") {
        rep = is_rfree(as_colored(input), a.r);
    } else if (a.kind == "rsat") {
        rep = is_rainbow_saturated(as_colored(input), a.r, opt);
    } else if (a.kind == "rsemisat") {
        rep = is_rainbow_semisaturated(as_colored(input), a.r, opt);
    } else if (a.kind == "rweak") {
        rep = is_weakly_rainbow_saturated(as_colored(input), a.r, opt);
    } else {
        const Graph g = underlying(input);
        const Pattern h = load_pattern(a.pattern, a.r);
        if (!a.pattern.empty())
            params = "pattern=" + pattern_name(h);
        if (a.kind == "sat") {
            rep = is_sat(g, h);
        } else if (a.kind == "semisat") {
            rep = is_k_semisat(g, h, 0);
        } else if (a.kind == "ksat") {
            params += " k=" + std::to_string(a.k);
            rep = is_k_sat(g, h, a.k);
        } else if (a.kind == "ksemisat") {
            params += " k=" + std::to_string(a.k);
            rep = is_k_semisat(g, h, a.k);
        } else {
            throw ParameterError("unknown kind " + a.kind);
        }
    }
    out << verdict(a.kind, params, rep) << '\n';
    return rep.holds ? kHolds : kFails;
}

struct ConstructArgs {
    std::string family;
    int n = 0;
    int r = 3;
    int k = 1;
    int m = 0;
    std::string output;
};

// The graph for the family, with the verifier it must pass.
inline std::pair<AnyGraph, VerificationReport> build(const ConstructArgs& a)
{
    const auto& f = a.family;
    const Pattern kr = Pattern::clique(std::max(a.r, 1));
    if (f == "ehm") {
        auto g = ehm_graph(a.n, a.r);
        return {g, is_sat(g, kr)};
    }
    if (f == "gsemi") {
        auto g = g_semisat(a.n, a.r);
        auto rep = is_k_semisat(g, kr, 1);
        if (rep.holds)
            rep = is_rainbow_semisaturated(ColoredGraph::rainbow(g), a.r);
        return {g, rep};
    }
    if (f == "gprime") {
        auto g = g_prime(a.n, a.r);
        return {g, is_k_sat(g, kr, 1)};
    }
    if (f == "gprime-rainbow") {
        auto g = g_prime_rainbow(a.n, a.r);
        return {g, is_rainbow_saturated(g, a.r)};
    }
    if (f == "lambda2") {
        auto g = lambda2();
        return {g, in_family_Fhat(g, 2)};
    }
    if (f == "lambda3" || f == "lambda3-alt") {
        auto g = f == "lambda3" ? lambda3() : lambda3_alt();
        return {g, in_family_Fhat(g, 3)};
    }
    if (f == "subdivision") {
        auto g = subdivision_gamma(a.k);
        return {g, in_family_Fhat(g, a.k)};
    }
    if (f == "gamma") {
        auto g = gamma_rn(a.r, a.n);
        return {g, is_rainbow_saturated(g, a.r)};
    }
    if (f == "alt-k5") {
        auto g = alt_k5(a.n);
        return {g, is_rainbow_saturated(g, 5)};
    }
    if (f == "nonstab-lambda") {
        auto g = nonstab_lambda(a.r);
        return {g, is_rfree(g, a.r)};
    }
    if (f == "nonstab") {
        auto g = nonstab_assemble(a.r, a.n, a.m);
        return {g, is_rainbow_saturated(g, a.r)};
    }
    if (f == "satk") {
        auto g = satk_upper(a.n, a.r, a.k);
        return {g, is_k_sat(g, kr, a.k)};
    }
    throw ParameterError("unknown family " + f);
}

inline int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err)
{
    AnyGraph g = Graph(0);
    VerificationReport rep;
    try {
        std::tie(g, rep) = build(a);
    } catch (const InfeasibleError& e) {
        out << "INFEASIBLE " << a.family << " r=" << a.r << " n=" << a.n << " m=" << a.m << '\n';
        err << e.what() << '\n';
        return kFails;
    }
    if (!rep.holds) {
        err << "BUG: " << a.family << " output failed self-verification: " << rep.witness.to_string() << '\n';
        return kError;
    }
    write_text_file(a.output, serialize(g));
    const Graph base = underlying(g);
    out << "CONSTRUCTED " << a.family << " n=" << base.order() << " m=" << base.size() << " file=" << a.output
        << '\n';
    return kHolds;
}

struct SearchArgs {
    std::string what;
    int k = 1;
    int n = 0;
    int n_max = kMaxFullFamilyOrder;
    int r = 3;
    std::string variant = "plain";
    int jobs = 0;
    std::string cache;
};

inline int cmd_search(const SearchArgs& a, std::ostream& out)
{
    SearchOptions opt;
    opt.jobs = a.jobs;
    const ResultCache cache(a.cache.empty() ? ResultCache::default_dir() : std::filesystem::path(a.cache));
    std::vector<ResultRecord> recs;
    if (a.what == "f") {
        recs.push_back(compute_f(a.k, a.n_max, opt));
    } else if (a.what == "g") {
        auto [g, gp] = compute_g_gprime(a.k, opt);
        recs.push_back(g);
        recs.push_back(gp);
    } else if (a.what == "sat") {
        SatVariant v;
        static const std::map<std::string, SatVariant::Kind> kinds{{"plain", SatVariant::Kind::plain},
                                                                    {"one_sat", SatVariant::Kind::one_sat},
                                                                    {"one_semisat", SatVariant::Kind::one_semisat},
                                                                    {"k_sat", SatVariant::Kind::k_sat}};
        auto it = kinds.find(a.variant);
        if (it == kinds.end())
            throw ParameterError("unknown variant " + a.variant);
        v.kind = it->second;
        v.k = a.k;
        recs.push_back(compute_sat(a.n, Pattern::clique(a.r), v, opt));
    } else if (a.what == "sat-rainbow") {
        recs.push_back(compute_sat_rainbow(a.n, a.r, opt));
    } else {
        throw ParameterError("unknown search " + a.what);
    }
    for (auto& rec : recs)
        out << cache.store(rec).line() << '\n';
    return kHolds;
}

inline int cmd_check_lemma2(const std::string& file, std::ostream& out)
{
    const Graph g = underlying(read_graph_file(file));
    const bool hyp = lemma2_hypothesis(g);
    const bool con = lemma2_conclusion(g);
    out << "VERDICT lemma2 hypothesis=" << (hyp ? "yes" : "no") << " conclusion=" << (con ? "yes" : "no")
        << ((hyp && !con) ? " fails" : " holds") << '\n';
    return hyp && !con ? kFails : kHolds;
}

inline int cmd_check_petersen(std::ostream& out)
{
    const bool ok = petersen_check();
    out << "VERDICT petersen t=2 omega=4 " << (ok ? "holds" : "fails") << '\n';
    return ok ? kHolds : kFails;
}

inline int cmd_check_comparison(int n, int r, std::ostream& out)
{
    const auto s = prop_comparison_sweep(n, r);
    out << "VERDICT prop-comparison n<=" << n << " r=" << r << " graphs=" << s.checked
        << (s.counterexample ? " fails" : " holds");
    if (s.counterexample) {
        out << " witness=graph:" << s.counterexample->order();
        for (const auto& e : s.counterexample->edges())
            out << ',' << to_string(e);
    }
    out << '\n';
    return s.counterexample ? kFails : kHolds;
}

inline int cmd_table(int r, const std::string& range, const std::string& cache_dir, std::ostream& out)
{
    const auto colon = range.find(':');
    if (colon == std::string::npos)
        throw ParameterError("range must look like A:B");
    const int lo = std::stoi(range.substr(0, colon));
    const int hi = std::stoi(range.substr(colon + 1));
    if (r < 3 || lo < 1 || hi < lo)
        throw ParameterError("table needs r >= 3 and 1 <= A <= B");
    const ResultCache cache(cache_dir.empty() ? ResultCache::default_dir() : std::filesystem::path(cache_dir));
    const auto records = cache.load();

    auto cached = [&](const std::string& q, int n) -> std::optional<ResultRecord> {
        std::optional<ResultRecord> hit;
        const std::vector<std::pair<std::string, std::string>> params{{"n", std::to_string(n)},
                                                                      {"r", std::to_string(r)}};
        for (const auto& rec : records)
            if (rec.quantity == q && rec.params == params && rec.bound == Bound::exact)
                hit = rec;
        return hit;
    };

    out << "TABLE r=" << r << " columns=sat,sat1,ssat1,sat_rainbow\n";
    for (int n = lo; n <= hi; ++n) {
        std::ostringstream row;
        bool differs = false;
        row << "ROW n=" << n;
        auto cell = [&](const std::string& q, std::optional<std::int64_t> formula) {
            row << ' ' << q << '=' << (formula ? std::to_string(*formula) : "-");
            if (auto c = cached(q, n)) {
                row << " " << q << "_computed=" << c->value;
                if (formula && *formula != c->value)
                    differs = true;
            }
        };
        cell("sat", n >= r - 2 ? std::optional<std::int64_t>(formulas::ehm(n, r)) : std::nullopt);
        cell("sat1", formulas::sat1(n, r));
        cell("ssat1", formulas::ssat1(n, r));
        cell("sat_rainbow", formulas::sat_rainbow(n, r));
        if (differs)
            row << " DIFFERS";
        out << row.str() << '\n';
    }
    return kHolds;
}

} // namespace detail

// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rainbow saturation toolkit"};
    app.require_subcommand(1);

    detail::VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check a property of a graph file");
    verify->add_option("--kind", va.kind, "Property")
        ->required()
        ->check(CLI::IsMember({"rfree", "rsat", "rsemisat", "rweak", "sat", "semisat", "ksat", "ksemisat"}));
    verify->add_option("--r", va.r, "Clique order")->check(CLI::Range(1, 64));
    verify->add_option("--k", va.k, "Edges swapped")->check(CLI::NonNegativeNumber);
    verify->add_option("--fresh", va.fresh, "Fresh candidate colors")->check(CLI::Range(1, 8));
    verify->add_option("--pattern", va.pattern, "Pattern graph file (default K_r)");
    verify->add_option("input", va.input, "Graph file")->required();

    detail::ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Write a named construction");
    construct->add_option("--family", ca.family, "Construction")
        ->required()
        ->check(CLI::IsMember({"ehm", "gsemi", "gprime", "gprime-rainbow", "lambda2", "lambda3", "lambda3-alt",
                               "subdivision", "gamma", "alt-k5", "nonstab-lambda", "nonstab", "satk"}));
    construct->add_option("--n", ca.n, "Vertices");
    construct->add_option("--r", ca.r, "Clique order");
    construct->add_option("--k", ca.k, "Family parameter");
    construct->add_option("--m", ca.m, "Edges (nonstab)");
    construct->add_option("-o,--output", ca.output, "Output file")->required();

    detail::SearchArgs sa;
    auto* search = app.add_subcommand("search", "Exhaustive search; records go to the cache");
    search->add_option("what", sa.what, "Quantity")->required()->check(CLI::IsMember({"f", "g", "sat", "sat-rainbow"}));
    search->add_option("--k", sa.k, "k");
    search->add_option("--n", sa.n, "Vertices");
    search->add_option("--n-max", sa.n_max, "Largest order tried by f");
    search->add_option("--r", sa.r, "Clique order");
    search->add_option("--variant", sa.variant, "plain, one_sat, one_semisat or k_sat");
    search->add_option("--jobs", sa.jobs, "Worker threads (0 = all cores)");
    search->add_option("--cache", sa.cache, "Cache directory (default $RSAT_CACHE)");

    std::string check_what, check_file;
    int check_n = 6, check_r = 3;
    auto* check = app.add_subcommand("check", "Named facts");
    check->add_option("what", check_what, "lemma2, petersen or prop-comparison")
        ->required()
        ->check(CLI::IsMember({"lemma2", "petersen", "prop-comparison"}));
    check->add_option("file", check_file, "Graph file for lemma2");
    check->add_option("--n", check_n, "Largest order for prop-comparison")->check(CLI::Range(0, 8));
    check->add_option("--r", check_r, "Clique order")->check(CLI::Range(3, 12));

    int table_r = 3;
    std::string table_range, table_cache;
    auto* table = app.add_subcommand("table", "Closed forms beside cached computed values");
    table->add_option("--r", table_r, "Clique order")->required();
    table->add_option("--n", table_range, "Range A:B")->required();
    table->add_option("--cache", table_cache, "Cache directory (default $RSAT_CACHE)");

    std::vector<std::string> argv_store{"rsat"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store)
        argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kHolds;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }

    try {
        if (*verify)
            return detail::cmd_verify(va, out);
        if (*construct)
            return detail::cmd_construct(ca, out, err);
        if (*search)
            return detail::cmd_search(sa, out);
        if (*check) {
            if (check_what == "lemma2") {
                if (check_file.empty())
                    throw ParameterError("lemma2 needs a graph file");
                return detail::cmd_check_lemma2(check_file, out);
            }
            if (check_what == "petersen")
                return detail::cmd_check_petersen(out);
            return detail::cmd_check_comparison(check_n, check_r, out);
        }
        if (*table)
            return detail::cmd_table(table_r, table_range, table_cache, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}

} // namespace rsat::cli
