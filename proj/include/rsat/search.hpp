#pragma once

#include "rsat/canonical.hpp"
#include "rsat/construct.hpp"
#include "rsat/enumerate.hpp"
#include "rsat/errors.hpp"
#include "rsat/family.hpp"
#include "rsat/graph.hpp"
#include "rsat/io.hpp"
#include "rsat/named_graphs.hpp"
#include "rsat/rainbow_detect.hpp"
#include "rsat/verify.hpp"
#include "rsat/version.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace rsat {

struct SearchOptions {
    SearchBudget budget;
    // Worker threads; 0 means the available hardware parallelism.
    int jobs = 0;
};

// Runs fn(i) for i in [0, count) on a pool of workers. The first exception
// thrown by any worker is rethrown after all of them stop.
template <class Fn>
void parallel_for(std::size_t count, int jobs, Fn fn)
{
    std::size_t workers = jobs > 0 ? static_cast<std::size_t>(jobs) : std::thread::hardware_concurrency();
    workers = std::max<std::size_t>(1, std::min(workers, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr error;
    std::mutex error_lock;
    auto body = [&] {
        while (!stop) {
            const std::size_t i = next++;
            if (i >= count)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_lock);
                if (!error)
                    error = std::current_exception();
                stop = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back(body);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

enum class Bound { exact, lower, upper };

inline std::string to_string(Bound b)
{
    switch (b) {
    case Bound::lower:
        return "lower";
    case Bound::upper:
        return "upper";
    default:
        return "exact";
    }
}

struct ResultRecord {
    std::string quantity;
    std::vector<std::pair<std::string, std::string>> params;
    std::int64_t value = 0;
    // lower: the quantity exceeds value-1 (nothing found up to value-1).
    // upper: value is achieved by the witness, minimality not certified.
    Bound bound = Bound::exact;
    // Closed-form value for comparison, when one is known.
    std::optional<std::int64_t> formula;
    std::optional<AnyGraph> witness;
    std::string witness_path;
    std::int64_t elapsed_ms = 0;
    std::string version = kVersion;

    [[nodiscard]] std::optional<std::string> param(const std::string& key) const
    {
        for (const auto& [k, v] : params)
            if (k == key)
                return v;
        return std::nullopt;
    }
    [[nodiscard]] int int_param(const std::string& key) const
    {
        auto v = param(key);
        if (!v)
            throw IntegrityError("record lacks parameter " + key);
        return std::stoi(*v);
    }
    [[nodiscard]] bool formula_mismatch() const { return formula && *formula != value; }

    // Stem used for the witness file name.
    [[nodiscard]] std::string stem() const
    {
        std::string out = quantity;
        for (const auto& [k, v] : params) {
            out += "_" + k;
            for (char c : v)
                out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '.');
        }
        return out;
    }

    [[nodiscard]] std::string line() const
    {
        std::ostringstream os;
        os << "RESULT " << quantity;
        for (const auto& [k, v] : params)
            os << ' ' << k << '=' << v;
        os << " value=" << value;
        if (bound != Bound::exact)
            os << " bound=" << to_string(bound);
        if (formula)
            os << " formula=" << *formula;
        os << " witness=" << (witness_path.empty() ? "-" : witness_path);
        os << " elapsed_ms=" << elapsed_ms << " version=" << version;
        return os.str();
    }

    static ResultRecord parse_line(const std::string& text)
    {
        std::istringstream in(text);
        std::string tag;
        ResultRecord r;
        if (!(in >> tag) || tag != "RESULT" || !(in >> r.quantity))
            throw IntegrityError("malformed result line: " + text);
        bool has_value = false;
        std::string token;
        while (in >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos)
                throw IntegrityError("malformed result token: " + token);
            const std::string key = token.substr(0, eq);
            const std::string val = token.substr(eq + 1);
            try {
                if (key == "value") {
                    r.value = std::stoll(val);
                    has_value = true;
                } else if (key == "bound") {
                    r.bound = val == "lower" ? Bound::lower : val == "upper" ? Bound::upper : Bound::exact;
                } else if (key == "formula") {
                    r.formula = std::stoll(val);
                } else if (key == "witness") {
                    r.witness_path = val == "-" ? "" : val;
                } else if (key == "elapsed_ms") {
                    r.elapsed_ms = std::stoll(val);
                } else if (key == "version") {
                    r.version = val;
                } else {
                    r.params.emplace_back(key, val);
                }
            } catch (const std::logic_error&) {
                throw IntegrityError("malformed result token: " + token);
            }
        }
        if (!has_value)
            throw IntegrityError("result line lacks a value: " + text);
        return r;
    }
};

namespace formulas {

inline std::int64_t ehm(std::int64_t n, std::int64_t r) { return (r - 2) * (n - r + 2) + (r - 2) * (r - 3) / 2; }

inline std::int64_t sat1(std::int64_t n, std::int64_t r) { return 2 * (r - 2) * (n - r + 1); }

inline std::int64_t ssat1(std::int64_t n, std::int64_t r)
{
    if (r == 3)
        return 2 * (n - 2);
    return (r - 1) * (n - r + 1) + (r - 1) * (r - 2) / 2;
}

inline std::optional<std::int64_t> sat_rainbow(std::int64_t n, std::int64_t r)
{
    switch (r) {
    case 3:
        return 2 * n - 4;
    case 4:
        return 3 * n - 6;
    case 5:
        return 5 * n - 16;
    default:
        return std::nullopt;
    }
}

inline std::int64_t satk_upper(std::int64_t n, std::int64_t r, std::int64_t k)
{
    const std::int64_t core = (k + 1) * (r - 2);
    return core * (n - core) + (k + 1) * (k + 1) * (r - 2) * (r - 3) / 2;
}

} // namespace formulas

// Pattern description used in record parameters: "K4" or an edge list.
inline std::string pattern_name(const Pattern& h)
{
    if (h.is_complete())
        return "K" + std::to_string(h.order());
    std::string out = std::to_string(h.order()) + ":";
    bool first = true;
    for (const auto& e : h.graph().edges()) {
        out += (first ? "" : ",") + to_string(e);
        first = false;
    }
    return out;
}

inline Pattern parse_pattern_name(const std::string& name)
{
    try {
        if (!name.empty() && name[0] == 'K')
            return Pattern::clique(std::stoi(name.substr(1)));
        const auto colon = name.find(':');
        Graph h(std::stoi(name.substr(0, colon)));
        std::istringstream in(name.substr(colon + 1));
        std::string item;
        while (std::getline(in, item, ',')) {
            const auto dash = item.find('-');
            h.add_edge(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
        }
        return Pattern(h);
    } catch (const std::logic_error&) {
        throw IntegrityError("malformed pattern name: " + name);
    }
}

struct SatVariant {
    enum class Kind { plain, one_sat, one_semisat, k_sat };
    Kind kind = Kind::plain;
    int k = 0;

    [[nodiscard]] std::string quantity() const
    {
        switch (kind) {
        case Kind::one_sat:
            return "sat1";
        case Kind::one_semisat:
            return "ssat1";
        case Kind::k_sat:
            return "satk";
        default:
            return "sat";
        }
    }
    [[nodiscard]] bool requires_free() const { return kind != Kind::one_semisat; }

    [[nodiscard]] VerificationReport check(const Graph& g, const Pattern& h) const
    {
        switch (kind) {
        case Kind::one_sat:
            return is_k_sat(g, h, 1);
        case Kind::one_semisat:
            return is_k_semisat(g, h, 1);
        case Kind::k_sat:
            return is_k_sat(g, h, k);
        default:
            return is_sat(g, h);
        }
    }
};

namespace detail {

inline void fill_elapsed(ResultRecord& rec, const BudgetTracker& tracker) { rec.elapsed_ms = tracker.elapsed().count(); }

// Every vertex lies in some K_k and every vertex-deleted subgraph keeps one.
inline GraphFilter family_shape_filter(int k)
{
    return {[k](const Graph& g) {
                for (Vertex v = 0; v < g.order(); ++v) {
                    VertexSet pool = g.neighbors(v);
                    if (clique_number(g, pool) < k - 1)
                        return false;
                    pool = g.vertices();
                    pool.reset(v);
                    if (clique_number(g, pool) < k)
                        return false;
                }
                return true;
            },
            false};
}

// All members of the family for k on n vertices, restricted to graphs where
// every vertex lies in a K_k (no loss when n is minimal: a vertex on no
// rainbow K_k could be deleted). Canonical forms, sorted by canonical code.
inline std::vector<ColoredGraph> family_members(int k, int n, const SearchOptions& opt, BudgetTracker& tracker)
{
    const auto graphs = enumerate_graphs(n, {family_shape_filter(k)}, &tracker);
    std::vector<std::vector<ColoredGraph>> found(graphs.size());
    parallel_for(graphs.size(), opt.jobs, [&](std::size_t i) {
        for (const auto& c : enumerate_colorings(graphs[i], &tracker))
            if (in_family_Fhat(c, k))
                found[i].push_back(c);
    });
    std::vector<std::pair<CanonicalCode, ColoredGraph>> keyed;
    for (auto& list : found)
        for (auto& c : list)
            keyed.emplace_back(canonical_code(c), canonical_form(c));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ColoredGraph> out;
    for (auto& [code, c] : keyed)
        out.push_back(std::move(c));
    return out;
}

// Least canonical code among candidates (ties broken deterministically).
template <class G>
G least_by_code(const std::vector<G>& items)
{
    std::size_t best = 0;
    CanonicalCode best_code = canonical_code(items[0]);
    for (std::size_t i = 1; i < items.size(); ++i) {
        auto c = canonical_code(items[i]);
        if (c < best_code) {
            best_code = std::move(c);
            best = i;
        }
    }
    return canonical_form(items[best]);
}

} // namespace detail

inline constexpr int kMaxFullFamilyOrder = 6;

// Least n <= n_max carrying a member of the family for k. For k >= 4 the
// subdivision construction gives an upper bound, exact when it meets k+2.
inline ResultRecord compute_f(int k, int n_max = kMaxFullFamilyOrder, const SearchOptions& opt = {})
{
    if (k < 1)
        throw ParameterError("f(k) needs k >= 1");
    BudgetTracker tracker(opt.budget);
    ResultRecord rec;
    rec.quantity = "f";
    rec.params = {{"k", std::to_string(k)}};
    if (k >= 4) {
        auto w = subdivision_gamma(k);
        rec.value = w.order();
        rec.bound = w.order() == k + 2 ? Bound::exact : Bound::upper;
        rec.witness = AnyGraph{w};
        detail::fill_elapsed(rec, tracker);
        return rec;
    }
    for (int n = k + 1; n <= std::min(n_max, kMaxFullFamilyOrder); ++n) {
        auto members = detail::family_members(k, n, opt, tracker);
        if (!members.empty()) {
            rec.value = n;
            rec.witness = AnyGraph{members.front()};
            detail::fill_elapsed(rec, tracker);
            return rec;
        }
    }
    rec.value = std::min(n_max, kMaxFullFamilyOrder) + 1;
    rec.bound = Bound::lower;
    detail::fill_elapsed(rec, tracker);
    return rec;
}

// g(k) and g'(k) over the members on f(k) vertices.
inline std::pair<ResultRecord, ResultRecord> compute_g_gprime(int k, const SearchOptions& opt = {})
{
    const ResultRecord f = compute_f(k, kMaxFullFamilyOrder, opt);
    if (f.bound != Bound::exact || f.value > kMaxFullFamilyOrder)
        throw ResourceError("g(k) needs f(k) <= " + std::to_string(kMaxFullFamilyOrder) + " by full search");
    BudgetTracker tracker(opt.budget);
    const auto members = detail::family_members(k, static_cast<int>(f.value), opt, tracker);

    auto best = [&](bool saturated) {
        std::optional<ColoredGraph> pick;
        for (const auto& c : members) {
            if (saturated && !is_rainbow_saturated(c, k + 1))
                continue;
            if (!pick || c.size() < pick->size())
                pick = c;
        }
        return pick;
    };
    auto make = [&](const std::string& name, const std::optional<ColoredGraph>& w) {
        ResultRecord rec;
        rec.quantity = name;
        rec.params = {{"k", std::to_string(k)}};
        if (!w)
            throw ResourceError("no saturated member on f(k) vertices");
        rec.value = w->size();
        rec.witness = AnyGraph{*w};
        detail::fill_elapsed(rec, tracker);
        return rec;
    };
    // members are sorted by code, so the first minimum is the least code.
    return {make("g", best(true)), make("gprime", best(false))};
}

inline constexpr int kMaxSatSearchOrder = 9;

// Least edge count of an n-vertex graph passing the variant's verifier.
inline ResultRecord compute_sat(int n, const Pattern& h, SatVariant variant = {}, const SearchOptions& opt = {})
{
    if (n < 1 || n > kMaxSatSearchOrder)
        throw ResourceError("saturation search needs 1 <= n <= " + std::to_string(kMaxSatSearchOrder));
    BudgetTracker tracker(opt.budget);
    ResultRecord rec;
    rec.quantity = variant.quantity();
    rec.params = {{"n", std::to_string(n)}};
    if (h.is_complete())
        rec.params.emplace_back("r", std::to_string(h.order()));
    else
        rec.params.emplace_back("h", pattern_name(h));
    if (variant.kind == SatVariant::Kind::k_sat)
        rec.params.emplace_back("k", std::to_string(variant.k));
    if (h.is_complete() && h.order() >= 3) {
        const int r = h.order();
        if (variant.kind == SatVariant::Kind::plain)
            rec.formula = formulas::ehm(n, r);
        else if (variant.kind == SatVariant::Kind::one_sat)
            rec.formula = formulas::sat1(n, r);
        else if (variant.kind == SatVariant::Kind::one_semisat)
            rec.formula = formulas::ssat1(n, r);
    }

    std::vector<GraphFilter> filters;
    if (variant.requires_free())
        filters.push_back({[&h](const Graph& g) { return !contains_subgraph(g, h).found; }, true});
    const int total = n * (n - 1) / 2;
    for (int m = 0; m <= total; ++m) {
        auto fs = filters;
        fs.push_back(max_edges_filter(m));
        fs.push_back(exact_edges_filter(m));
        const auto graphs = enumerate_graphs(n, fs, &tracker);
        std::vector<char> ok(graphs.size(), 0);
        parallel_for(graphs.size(), opt.jobs, [&](std::size_t i) {
            tracker.tick();
            ok[i] = variant.check(graphs[i], h).holds ? 1 : 0;
        });
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            if (!ok[i])
                continue;
            // graphs are sorted by canonical code
            rec.value = m;
            rec.witness = AnyGraph{graphs[i]};
            detail::fill_elapsed(rec, tracker);
            return rec;
        }
    }
    throw ResourceError("no graph on " + std::to_string(n) + " vertices passes the verifier");
}

inline constexpr int kMaxRainbowSatSearchOrder = 6;

// Least edge count of a rainbow-K_r-saturated colored graph on n vertices.
// Underlying graphs must be K_r-semisaturated. Past the desk-scale limit, or
// when the budget runs out, falls back to the Gamma construction as an
// upper bound.
inline ResultRecord compute_sat_rainbow(int n, int r, const SearchOptions& opt = {})
{
    if (r < 3)
        throw ParameterError("rainbow saturation search needs r >= 3");
    BudgetTracker tracker(opt.budget);
    ResultRecord rec;
    rec.quantity = "sat_rainbow";
    rec.params = {{"n", std::to_string(n)}, {"r", std::to_string(r)}};
    rec.formula = formulas::sat_rainbow(n, r);

    auto upper = [&](const std::string& why) {
        const int min_order = default_core(r).order() + 2;
        if (n < min_order)
            throw ResourceError(why);
        auto w = gamma_rn(r, n);
        rec.value = w.size();
        rec.bound = Bound::upper;
        rec.witness = AnyGraph{w};
        detail::fill_elapsed(rec, tracker);
        return rec;
    };
    if (n < 1)
        throw ParameterError("n must be positive");
    if (n > kMaxRainbowSatSearchOrder)
        return upper("n beyond the full search range");

    const Pattern kr = Pattern::clique(r);
    try {
        const int total = n * (n - 1) / 2;
        for (int m = 0; m <= total; ++m) {
            const auto graphs = enumerate_graphs(
                n,
                {max_edges_filter(m), exact_edges_filter(m),
                 {[&kr](const Graph& g) { return is_k_semisat(g, kr, 0).holds; }, false}},
                &tracker);
            std::vector<std::vector<ColoredGraph>> found(graphs.size());
            parallel_for(graphs.size(), opt.jobs, [&](std::size_t i) {
                for (const auto& c : enumerate_colorings(graphs[i], &tracker))
                    if (is_rainbow_saturated(c, r))
                        found[i].push_back(c);
            });
            std::vector<ColoredGraph> all;
            for (auto& list : found)
                all.insert(all.end(), list.begin(), list.end());
            if (!all.empty()) {
                rec.value = m;
                rec.witness = AnyGraph{detail::least_by_code(all)};
                detail::fill_elapsed(rec, tracker);
                return rec;
            }
        }
    } catch (const ResourceError& e) {
        return upper(e.what());
    }
    throw ResourceError("no saturated colored graph found");
}

// Same minimum by brute force over labeled graphs and all edge partitions,
// with no isomorphism reduction and no pre-filter.
inline int naive_sat_rainbow(int n, int r)
{
    if (n < 1 || n > 5)
        throw ResourceError("unreduced search is limited to n <= 5");
    std::vector<Edge> pairs = Graph(n).non_edges();
    const int p = static_cast<int>(pairs.size());
    for (int m = 0; m <= p; ++m) {
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << p); ++mask) {
            if (std::popcount(mask) != m)
                continue;
            Graph g(n);
            for (int i = 0; i < p; ++i)
                if (mask >> i & 1U)
                    g.add_edge(pairs[static_cast<std::size_t>(i)]);
            const auto edges = g.edges();
            bool hit = false;
            detail::for_each_rgs(edges.size(), [&](const std::vector<int>& a) {
                if (!hit && is_rainbow_saturated(detail::apply_rgs(g, edges, a), r))
                    hit = true;
            });
            if (hit)
                return m;
        }
    }
    throw ResourceError("no saturated colored graph found");
}

// Replays a record's witness against every property it claims. Witness
// files are resolved against dir when the record carries no graph.
inline VerificationReport verify_record(const ResultRecord& rec, const std::filesystem::path& dir = {})
{
    std::optional<AnyGraph> w = rec.witness;
    if (!w && !rec.witness_path.empty()) {
        try {
            w = parse(read_text_file(dir / rec.witness_path));
        } catch (const ParseError& e) {
            throw IntegrityError("corrupt witness " + rec.witness_path + ": " + e.what());
        } catch (const std::runtime_error& e) {
            throw IntegrityError("unreadable witness " + rec.witness_path + ": " + e.what());
        }
    }
    if (!w) {
        if (rec.bound == Bound::lower)
            return VerificationReport::success("lower bound without witness");
        throw IntegrityError("record has no witness");
    }

    auto fail = [](const std::string& what) {
        Witness x;
        x.note = what;
        return VerificationReport::failure(x);
    };
    const Graph base = underlying(*w);
    const ColoredGraph colored = as_colored(*w);
    const auto& q = rec.quantity;

    if (q == "f" || q == "g" || q == "gprime") {
        const int k = rec.int_param("k");
        if (auto fam = in_family_Fhat(colored, k); !fam.holds)
            return fam;
        if (q == "f" && colored.order() != rec.value)
            return fail("vertex count differs from value");
        if (q != "f" && colored.size() != rec.value)
            return fail("edge count differs from value");
        if (q == "g")
            return is_rainbow_saturated(colored, k + 1);
        return VerificationReport::success();
    }
    if (q == "sat_rainbow") {
        if (colored.order() != rec.int_param("n") || colored.size() != rec.value)
            return fail("witness size differs from record");
        return is_rainbow_saturated(colored, rec.int_param("r"));
    }
    if (q == "sat" || q == "sat1" || q == "ssat1" || q == "satk") {
        if (base.order() != rec.int_param("n") || base.size() != rec.value)
            return fail("witness size differs from record");
        const Pattern h = rec.param("r") ? Pattern::clique(rec.int_param("r")) : parse_pattern_name(*rec.param("h"));
        SatVariant v;
        v.kind = q == "sat1"    ? SatVariant::Kind::one_sat
                 : q == "ssat1" ? SatVariant::Kind::one_semisat
                 : q == "satk"  ? SatVariant::Kind::k_sat
                                : SatVariant::Kind::plain;
        if (v.kind == SatVariant::Kind::k_sat)
            v.k = rec.int_param("k");
        return v.check(base, h);
    }
    throw IntegrityError("unknown quantity " + q);
}

// Append-only result file plus witness files in one directory.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    static std::filesystem::path default_dir()
    {
        if (const char* env = std::getenv("RSAT_CACHE"); env && *env)
            return env;
        return ".rsat-cache";
    }

    [[nodiscard]] const std::filesystem::path& dir() const { return dir_; }
    [[nodiscard]] std::filesystem::path results_file() const { return dir_ / "results.txt"; }

    // Writes the witness, appends the record line; returns the stored record.
    ResultRecord store(ResultRecord rec) const
    {
        std::filesystem::create_directories(dir_);
        if (rec.witness) {
            rec.witness_path = rec.stem() + ".txt";
            write_text_file(dir_ / rec.witness_path, serialize(*rec.witness));
        }
        std::ofstream out(results_file(), std::ios::app);
        if (!out)
            throw std::runtime_error("cannot append to " + results_file().string());
        out << rec.line() << '\n';
        return rec;
    }

    // Records whose witnesses replay successfully, in file order.
    [[nodiscard]] std::vector<ResultRecord> load() const
    {
        std::vector<ResultRecord> out;
        std::ifstream in(results_file());
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty())
                continue;
            try {
                auto rec = ResultRecord::parse_line(line);
                if (verify_record(rec, dir_).holds)
                    out.push_back(std::move(rec));
            } catch (const IntegrityError&) {
            }
        }
        return out;
    }

    // The latest verified record for the quantity and parameters.
    [[nodiscard]] std::optional<ResultRecord>
    find(const std::string& quantity, const std::vector<std::pair<std::string, std::string>>& params) const
    {
        std::optional<ResultRecord> hit;
        for (auto& rec : load())
            if (rec.quantity == quantity && rec.params == params)
                hit = std::move(rec);
        return hit;
    }

private:
    std::filesystem::path dir_;
};

struct SweepResult {
    std::uint64_t checked = 0;
    std::optional<Graph> counterexample;
};

// Clique-robust graphs have complement matchings of size omega, over every
// graph on at most n_max vertices.
inline SweepResult lemma2_sweep(int n_max)
{
    SweepResult out;
    for (int n = 0; n <= n_max; ++n) {
        for (const auto& g : enumerate_graphs(n)) {
            ++out.checked;
            if (lemma2_hypothesis(g) && !lemma2_conclusion(g)) {
                out.counterexample = g;
                return out;
            }
        }
    }
    return out;
}

// The complement of the Petersen graph has clique number 4 and keeps it
// after deleting any two vertices.
inline bool petersen_check()
{
    const Graph g = complement(graphs::petersen());
    return g.order() == 10 && clique_number(g) == 4 && robust_clique_check(g, 2);
}

// Rainbow (semi)saturation of the all-distinct coloring implies (K_r,1)-
// (semi)saturation of the graph, over every graph on at most n_max vertices.
inline SweepResult prop_comparison_sweep(int n_max, int r)
{
    SweepResult out;
    const Pattern kr = Pattern::clique(r);
    for (int n = 0; n <= n_max; ++n) {
        for (const auto& g : enumerate_graphs(n)) {
            ++out.checked;
            const auto rg = ColoredGraph::rainbow(g);
            const bool semi = is_rainbow_semisaturated(rg, r).holds;
            const bool sat = semi && is_rainbow_saturated(rg, r).holds;
            if ((semi && !is_k_semisat(g, kr, 1).holds) || (sat && !is_k_sat(g, kr, 1).holds)) {
                out.counterexample = g;
                return out;
            }
        }
    }
    return out;
}

} // namespace rsat
