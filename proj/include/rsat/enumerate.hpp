#pragma once

#include "rsat/canonical.hpp"
#include "rsat/errors.hpp"
#include "rsat/graph.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace rsat {

struct SearchBudget {
    int max_vertices = 10;
    std::uint64_t max_nodes_expanded = 2'000'000'000;
    std::chrono::milliseconds wall_time_limit = std::chrono::hours(6);
};

// Counts expanded nodes against a budget; shared by concurrent workers.
class BudgetTracker {
public:
    explicit BudgetTracker(SearchBudget b = {}) : budget_(b), start_(std::chrono::steady_clock::now()) {}

    void tick(std::uint64_t nodes = 1)
    {
        const auto used = nodes_.fetch_add(nodes) + nodes;
        if (used > budget_.max_nodes_expanded)
            throw ResourceError("search exceeded its node budget of " + std::to_string(budget_.max_nodes_expanded));
        if ((used & 0x3ff) < nodes && elapsed() > budget_.wall_time_limit)
            throw ResourceError("search exceeded its wall time limit");
    }
    void check_order(int n) const
    {
        if (n > budget_.max_vertices)
            throw ResourceError("search is limited to " + std::to_string(budget_.max_vertices) + " vertices");
    }
    [[nodiscard]] std::chrono::milliseconds elapsed() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
    }
    [[nodiscard]] std::uint64_t nodes() const { return nodes_.load(); }

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> nodes_{0};
};

// A predicate on graphs. Hereditary filters are closed under vertex deletion
// and are applied at every generation level; others only to final graphs.
struct GraphFilter {
    std::function<bool(const Graph&)> accept;
    bool hereditary = false;
};

inline constexpr int kMaxEnumerationOrder = 10;

// One graph per isomorphism class on n vertices passing every filter, in
// canonical form, sorted by canonical code. Graphs grow one vertex at a time
// from the representatives one level down.
inline std::vector<Graph> enumerate_graphs(int n, const std::vector<GraphFilter>& filters = {},
                                           BudgetTracker* tracker = nullptr)
{
    if (n < 0)
        throw ParameterError("order must be nonnegative");
    if (n > kMaxEnumerationOrder)
        throw ResourceError("graph enumeration is limited to " + std::to_string(kMaxEnumerationOrder) + " vertices");
    if (tracker)
        tracker->check_order(n);

    auto passes = [&](const Graph& g, bool final_level) {
        for (const auto& f : filters)
            if ((f.hereditary || final_level) && !f.accept(g))
                return false;
        return true;
    };

    std::vector<Graph> level{Graph(0)};
    if (!passes(level.front(), n == 0))
        level.clear();
    for (int size = 1; size <= n; ++size) {
        std::map<CanonicalCode, Graph> found;
        const bool final_level = size == n;
        for (const auto& base : level) {
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (size - 1)); ++mask) {
                Graph g(size);
                for (const auto& e : base.edges())
                    g.add_edge(e);
                for (Vertex v = 0; v + 1 < size; ++v)
                    if (mask >> v & 1U)
                        g.add_edge(v, size - 1);
                if (!passes(g, final_level))
                    continue;
                if (tracker)
                    tracker->tick();
                auto code = canonical_code(g);
                if (!found.contains(code))
                    found.emplace(std::move(code), canonical_form(g));
            }
        }
        level.clear();
        for (auto& [code, g] : found)
            level.push_back(std::move(g));
    }
    return level;
}

inline GraphFilter max_edges_filter(int m)
{
    return {[m](const Graph& g) { return g.size() <= m; }, true};
}

inline GraphFilter exact_edges_filter(int m)
{
    return {[m](const Graph& g) { return g.size() == m; }, false};
}

inline constexpr int kMaxColoringEdges = 12;
inline constexpr std::size_t kMaxExplicitGroup = 50'000;

// The automorphism group of g acting on its lexicographically ordered edges,
// or nothing when it has more than `cap` distinct edge permutations.
inline std::optional<std::vector<std::vector<int>>> edge_automorphisms(const Graph& g,
                                                                       std::size_t cap = kMaxExplicitGroup)
{
    const auto edges = g.edges();
    const auto m = edges.size();
    std::map<Edge, int> index;
    for (std::size_t i = 0; i < m; ++i)
        index[edges[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> gens;
    const auto labeler = detail::label_graph(g);
    for (const auto& perm : labeler.generators()) {
        std::vector<int> act(m);
        for (std::size_t i = 0; i < m; ++i) {
            const Vertex a = perm[static_cast<std::size_t>(edges[i].u)];
            const Vertex b = perm[static_cast<std::size_t>(edges[i].v)];
            act[i] = index.at(Edge{std::min(a, b), std::max(a, b)});
        }
        gens.push_back(std::move(act));
    }

    std::vector<int> identity(m);
    for (std::size_t i = 0; i < m; ++i)
        identity[i] = static_cast<int>(i);
    std::set<std::vector<int>> seen{identity};
    std::vector<std::vector<int>> group{identity};
    for (std::size_t at = 0; at < group.size(); ++at) {
        for (const auto& s : gens) {
            std::vector<int> next(m);
            for (std::size_t i = 0; i < m; ++i)
                next[i] = s[static_cast<std::size_t>(group[at][i])];
            if (seen.insert(next).second) {
                if (group.size() >= cap)
                    return std::nullopt;
                group.push_back(std::move(next));
            }
        }
    }
    return group;
}

namespace detail {

// Whether the RGS a is lexicographically no larger than its image under p,
// re-normalized by first occurrence.
inline bool not_above_image(const std::vector<int>& a, const std::vector<int>& p)
{
    const auto m = a.size();
    std::vector<int> rename(m + 1, -1);
    int next = 0;
    // Image coloring b[p[i]] = a[i]; read it back in edge order.
    std::vector<int> b(m);
    for (std::size_t i = 0; i < m; ++i)
        b[static_cast<std::size_t>(p[i])] = a[i];
    for (std::size_t i = 0; i < m; ++i) {
        int& r = rename[static_cast<std::size_t>(b[i])];
        if (r < 0)
            r = next++;
        if (r != a[i])
            return a[i] < r;
    }
    return true;
}

template <class Visit>
void for_each_rgs(std::size_t m, Visit visit)
{
    std::vector<int> a(m, 0);
    auto rec = [&](auto&& self, std::size_t i, int top) -> void {
        if (i == m) {
            visit(a);
            return;
        }
        for (int c = 0; c <= top + 1; ++c) {
            a[i] = c;
            self(self, i + 1, std::max(top, c));
        }
    };
    if (m == 0)
        visit(a);
    else
        rec(rec, 0, -1);
}

inline ColoredGraph apply_rgs(const Graph& g, const std::vector<Edge>& edges, const std::vector<int>& a)
{
    ColoredGraph out(g.order());
    for (std::size_t i = 0; i < edges.size(); ++i)
        out.add_edge(edges[i], a[i]);
    return out;
}

} // namespace detail

// One coloring per orbit of edge partitions under Aut(g), each given by the
// lexicographically least restricted-growth string of its orbit, in
// lexicographic order.
inline std::vector<ColoredGraph> enumerate_colorings(const Graph& g, BudgetTracker* tracker = nullptr)
{
    if (g.size() > kMaxColoringEdges)
        throw ResourceError("coloring enumeration is limited to " + std::to_string(kMaxColoringEdges) + " edges");
    const auto edges = g.edges();
    std::vector<ColoredGraph> out;

    if (auto group = edge_automorphisms(g)) {
        detail::for_each_rgs(edges.size(), [&](const std::vector<int>& a) {
            if (tracker)
                tracker->tick();
            for (const auto& p : *group)
                if (!detail::not_above_image(a, p))
                    return;
            out.push_back(detail::apply_rgs(g, edges, a));
        });
        return out;
    }

    // Group too large to list: keep the first (least) string per colored class.
    std::set<CanonicalCode> seen;
    detail::for_each_rgs(edges.size(), [&](const std::vector<int>& a) {
        if (tracker)
            tracker->tick();
        auto colored = detail::apply_rgs(g, edges, a);
        if (seen.insert(canonical_code(colored)).second)
            out.push_back(std::move(colored));
    });
    return out;
}

} // namespace rsat
