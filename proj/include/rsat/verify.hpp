#pragma once

#include "rsat/errors.hpp"
#include "rsat/graph.hpp"
#include "rsat/rainbow_detect.hpp"
#include "rsat/report.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rsat {

struct VerifyOptions {
    // Fresh colors added to colors(G) when quantifying over "every color".
    // One suffices: any two absent colors are exchanged by a renaming fixing G.
    int fresh_colors = 1;
    // Elementary containment tests allowed per call.
    std::uint64_t max_tests = 100'000'000;
};

inline constexpr int kMaxWeakNonEdges = 7;

// colors(G) plus `fresh` new ids above all of them.
inline std::vector<Color> candidate_colors(const ColoredGraph& g, int fresh = 1)
{
    auto out = g.colors();
    const Color base = g.fresh_color();
    for (int i = 0; i < fresh; ++i)
        out.push_back(base + i);
    return out;
}

inline VerificationReport is_rfree(const ColoredGraph& g, int r)
{
    if (r < 1)
        throw ParameterError("clique order must be at least 1");
    if (auto c = contains_rainbow_clique(g, r); c.found) {
        Witness w;
        w.kind = Witness::Kind::clique;
        w.vertices = c.vertices;
        return VerificationReport::failure(w);
    }
    return VerificationReport::success();
}

namespace detail {

struct PairColor {
    Edge edge;
    Color color;
};

// First (non-edge, candidate color) in lexicographic order for which adding
// the pair creates no rainbow K_r through it.
inline std::optional<PairColor> first_unforced_pair(const ColoredGraph& g, int r,
                                                    const std::vector<Color>& candidates)
{
    for (const auto& e : g.non_edges()) {
        if (r <= 2)
            continue;
        // One rainbow clique through e already serves every color it avoids.
        std::vector<Color> blocking;
        bool any = false;
        for_each_clique_through(g, e, r, [&](const std::vector<Vertex>&, const std::vector<Color>& used) {
            any = true;
            blocking = used;
            return true;
        });
        if (!any)
            return PairColor{e, candidates.front()};
        for (Color c : candidates) {
            if (std::find(blocking.begin(), blocking.end(), c) == blocking.end())
                continue;
            if (!rainbow_clique_through(g, e, c, r).found)
                return PairColor{e, c};
        }
    }
    return std::nullopt;
}

inline Witness nonedge_witness(const ColoredGraph& g, const PairColor& pc)
{
    Witness w;
    w.kind = Witness::Kind::nonedge;
    w.edge = pc.edge;
    w.color = pc.color;
    w.fresh_color = pc.color >= g.fresh_color();
    return w;
}

} // namespace detail

// Adding any non-edge in any color creates a rainbow K_r through it.
inline VerificationReport is_rainbow_semisaturated(const ColoredGraph& g, int r,
                                                   const VerifyOptions& opt = {})
{
    if (r < 2)
        throw ParameterError("clique order must be at least 2");
    if (auto bad = detail::first_unforced_pair(g, r, candidate_colors(g, opt.fresh_colors)))
        return VerificationReport::failure(detail::nonedge_witness(g, *bad));
    return VerificationReport::success();
}

// Rainbow-K_r-free and semisaturated.
inline VerificationReport is_rainbow_saturated(const ColoredGraph& g, int r, const VerifyOptions& opt = {})
{
    if (r < 2)
        throw ParameterError("clique order must be at least 2");
    if (auto free = is_rfree(g, r); !free.holds)
        return free;
    return is_rainbow_semisaturated(g, r, opt);
}

// Some ordering of the t non-edges works for every list of pairwise distinct
// colors: each addition creates a new rainbow K_r through the added pair.
// Colors range over colors(G) and t fresh ids, with the fresh block taken up
// to renaming (fresh ids are introduced in increasing order).
inline VerificationReport is_weakly_rainbow_saturated(const ColoredGraph& g, int r,
                                                      const VerifyOptions& opt = {})
{
    if (r < 2)
        throw ParameterError("clique order must be at least 2");
    // Semisaturation forces every step regardless of history.
    if (is_rainbow_semisaturated(g, r, opt))
        return VerificationReport::success("semisaturated");

    const auto pairs = g.non_edges();
    const int t = static_cast<int>(pairs.size());
    if (t > kMaxWeakNonEdges)
        throw ResourceError("weak saturation check needs at most " + std::to_string(kMaxWeakNonEdges) +
                            " non-edges, got " + std::to_string(t));
    const auto palette = g.colors();
    const Color fresh0 = g.fresh_color();

    struct State {
        ColoredGraph host;
        std::vector<Color> assigned;
        int fresh_used = 0;
    };
    std::uint64_t tests = 0;
    std::optional<Witness> first_failure;
    std::vector<Edge> order;
    std::vector<bool> placed(static_cast<std::size_t>(t), false);

    // Extends every state by pair e; false if some color list fails at e.
    auto step = [&](const std::vector<State>& states, const Edge& e, std::vector<State>& next) {
        for (const auto& s : states) {
            std::vector<Color> choices;
            for (Color c : palette)
                if (std::find(s.assigned.begin(), s.assigned.end(), c) == s.assigned.end())
                    choices.push_back(c);
            choices.push_back(fresh0 + s.fresh_used);
            for (Color c : choices) {
                if (++tests > opt.max_tests)
                    throw ResourceError("weak saturation check exceeded its test budget");
                if (!rainbow_clique_through(s.host, e, c, r).found) {
                    if (!first_failure) {
                        Witness w;
                        w.kind = Witness::Kind::order;
                        w.added = order;
                        w.added.push_back(e);
                        w.colors = s.assigned;
                        w.colors.push_back(c);
                        first_failure = w;
                    }
                    return false;
                }
                State n = s;
                n.host.add_edge(e, c);
                n.assigned.push_back(c);
                if (c >= fresh0)
                    ++n.fresh_used;
                next.push_back(std::move(n));
            }
        }
        return true;
    };

    auto search = [&](auto&& self, const std::vector<State>& states) -> bool {
        if (static_cast<int>(order.size()) == t)
            return true;
        for (int i = 0; i < t; ++i) {
            if (placed[static_cast<std::size_t>(i)])
                continue;
            std::vector<State> next;
            if (!step(states, pairs[static_cast<std::size_t>(i)], next))
                continue;
            placed[static_cast<std::size_t>(i)] = true;
            order.push_back(pairs[static_cast<std::size_t>(i)]);
            const bool ok = self(self, next);
            order.pop_back();
            placed[static_cast<std::size_t>(i)] = false;
            if (ok)
                return true;
        }
        return false;
    };

    if (search(search, {State{g, {}, 0}}))
        return VerificationReport::success();
    return VerificationReport::failure(first_failure.value_or(Witness{}));
}

// H-free, and adding any non-edge creates a copy of H through it.
inline VerificationReport is_sat(const Graph& g, const Pattern& h)
{
    if (auto c = contains_subgraph(g, h); c.found) {
        Witness w;
        w.kind = h.is_complete() ? Witness::Kind::clique : Witness::Kind::embedding;
        w.vertices = c.vertices;
        return VerificationReport::failure(w);
    }
    Graph work = g;
    for (const auto& e : g.non_edges()) {
        work.add_edge(e);
        const bool made = contains_subgraph_using(work, h, {e}).found;
        work.remove_edge(e);
        if (!made) {
            Witness w;
            w.kind = Witness::Kind::nonedge;
            w.edge = e;
            return VerificationReport::failure(w);
        }
    }
    return VerificationReport::success();
}

namespace detail {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    std::uint64_t out = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        out = out * (n - k + i) / i;
        if (out > (std::uint64_t{1} << 62))
            return std::uint64_t{1} << 62;
    }
    return out;
}

// Calls visit on every k-subset of items in lexicographic order of indices;
// stops when visit returns true.
template <class T, class Visit>
bool for_each_subset(const std::vector<T>& items, int k, Visit visit)
{
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::vector<T> pick(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int pos, int from) -> bool {
        if (pos == k)
            return visit(pick);
        for (int i = from; i <= static_cast<int>(items.size()) - (k - pos); ++i) {
            pick[static_cast<std::size_t>(pos)] = items[static_cast<std::size_t>(i)];
            if (self(self, pos + 1, i + 1))
                return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace detail

// H-free, and removing any k edges then adding any k+1 pairs absent from the
// remainder (removed edges may come back) creates a copy of H. Graphs with
// fewer than k edges lose all of them instead.
inline VerificationReport is_k_sat(const Graph& g, const Pattern& h, int k, const VerifyOptions& opt = {})
{
    if (k < 0)
        throw ParameterError("k must be nonnegative");
    if (g.size() > 64)
        throw ResourceError("k-saturation check is limited to 64 edges");
    const auto edges = g.edges();
    const auto missing = g.non_edges();
    // With fewer than k edges, remove them all.
    k = std::min(k, static_cast<int>(edges.size()));
    const std::uint64_t total = detail::binomial(edges.size(), static_cast<std::uint64_t>(k)) *
                                detail::binomial(missing.size() + static_cast<std::size_t>(k),
                                                 static_cast<std::uint64_t>(k + 1));
    if (total > opt.max_tests)
        throw ResourceError("k-saturation check needs " + std::to_string(total) +
                            " containment tests, budget is " + std::to_string(opt.max_tests));
    if (auto free = is_sat(g, h); !free.holds && free.witness.kind != Witness::Kind::nonedge)
        return free;

    std::optional<Witness> bad;
    detail::for_each_subset(edges, k, [&](const std::vector<Edge>& removed) {
        Graph base = g;
        for (const auto& e : removed)
            base.remove_edge(e);
        std::vector<Edge> pool = missing;
        pool.insert(pool.end(), removed.begin(), removed.end());
        std::sort(pool.begin(), pool.end());
        return detail::for_each_subset(pool, k + 1, [&](const std::vector<Edge>& added) {
            Graph work = base;
            for (const auto& e : added)
                work.add_edge(e);
            if (contains_subgraph_using(work, h, added).found)
                return false;
            Witness w;
            w.kind = Witness::Kind::swap;
            w.removed = removed;
            w.added = added;
            bad = w;
            return true;
        });
    });
    if (bad)
        return VerificationReport::failure(*bad);
    return VerificationReport::success();
}

// k = 0: adding any absent pair creates a copy of H through it.
// k = 1: additionally, removing any edge and adding any two absent pairs
// creates a copy of H using at least one added pair.
inline VerificationReport is_k_semisat(const Graph& g, const Pattern& h, int k)
{
    if (k != 0 && k != 1)
        throw ParameterError("semisaturation variant supports k in {0, 1}");
    Graph work = g;
    for (const auto& e : g.non_edges()) {
        work.add_edge(e);
        const bool made = contains_subgraph_using(work, h, {e}).found;
        work.remove_edge(e);
        if (!made) {
            Witness w;
            w.kind = Witness::Kind::nonedge;
            w.edge = e;
            return VerificationReport::failure(w);
        }
    }
    if (k == 0)
        return VerificationReport::success();

    const auto missing = g.non_edges();
    std::optional<Witness> bad;
    for (const auto& e : g.edges()) {
        Graph base = g;
        base.remove_edge(e);
        std::vector<Edge> pool = missing;
        pool.push_back(e);
        std::sort(pool.begin(), pool.end());
        detail::for_each_subset(pool, 2, [&](const std::vector<Edge>& added) {
            Graph w2 = base;
            for (const auto& a : added)
                w2.add_edge(a);
            if (contains_subgraph_using(w2, h, added).found)
                return false;
            Witness w;
            w.kind = Witness::Kind::swap;
            w.removed = {e};
            w.added = added;
            bad = w;
            return true;
        });
        if (bad)
            return VerificationReport::failure(*bad);
    }
    return VerificationReport::success();
}

} // namespace rsat
