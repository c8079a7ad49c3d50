#pragma once

// Naive reference implementations used only by the tests. Nothing here
// shares code with the library beyond the value types.

#include "rsat/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using rsat::Color;
using rsat::ColoredGraph;
using rsat::Edge;
using rsat::Graph;
using rsat::Vertex;

inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit)
{
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == k) {
            visit(pick);
            return;
        }
        for (int v = from; v < n; ++v) {
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

inline bool is_clique(const Graph& g, const std::vector<int>& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j]))
                return false;
    return true;
}

inline bool is_rainbow_clique(const ColoredGraph& g, const std::vector<int>& s)
{
    if (!is_clique(g.graph(), s))
        return false;
    std::set<Color> seen;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!seen.insert(g.color(s[i], s[j])).second)
                return false;
    return true;
}

inline std::vector<std::vector<int>> rainbow_cliques(const ColoredGraph& g, int k)
{
    std::vector<std::vector<int>> out;
    for_each_subset(g.order(), k, [&](const std::vector<int>& s) {
        if (is_rainbow_clique(g, s))
            out.push_back(s);
    });
    return out;
}

inline int clique_number(const Graph& g)
{
    int best = 0;
    for (int k = 1; k <= g.order(); ++k) {
        bool any = false;
        for_each_subset(g.order(), k, [&](const std::vector<int>& s) { any = any || is_clique(g, s); });
        if (!any)
            break;
        best = k;
    }
    return best;
}

inline int rainbow_clique_number(const ColoredGraph& g)
{
    int best = 0;
    for (int k = 1; k <= g.order(); ++k) {
        if (rainbow_cliques(g, k).empty())
            break;
        best = k;
    }
    return best;
}

// Injective maps of h into g preserving edges.
inline bool contains_subgraph(const Graph& g, const Graph& h)
{
    if (h.order() > g.order())
        return false;
    std::vector<int> map(static_cast<std::size_t>(h.order()), -1);
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    std::function<bool(int)> rec = [&](int i) {
        if (i == h.order())
            return true;
        for (int v = 0; v < g.order(); ++v) {
            if (used[static_cast<std::size_t>(v)])
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (h.adjacent(i, j) && !g.adjacent(v, map[static_cast<std::size_t>(j)]))
                    ok = false;
            if (!ok)
                continue;
            used[static_cast<std::size_t>(v)] = true;
            map[static_cast<std::size_t>(i)] = v;
            if (rec(i + 1))
                return true;
            used[static_cast<std::size_t>(v)] = false;
        }
        return false;
    };
    return rec(0);
}

// Isomorphism of colored graphs by trying every vertex permutation and
// checking that the induced color correspondence is a bijection.
inline bool isomorphic(const ColoredGraph& a, const ColoredGraph& b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    std::vector<int> p(static_cast<std::size_t>(a.order()));
    std::iota(p.begin(), p.end(), 0);
    do {
        std::map<Color, Color> fwd, back;
        bool ok = true;
        for (const auto& e : a.edges()) {
            const int u = p[static_cast<std::size_t>(e.u)];
            const int v = p[static_cast<std::size_t>(e.v)];
            if (!b.adjacent(u, v)) {
                ok = false;
                break;
            }
            const Color ca = a.color(e), cb = b.color(u, v);
            auto [it, fresh] = fwd.emplace(ca, cb);
            auto [jt, fresh2] = back.emplace(cb, ca);
            if (it->second != cb || jt->second != ca) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline bool isomorphic(const Graph& a, const Graph& b)
{
    return isomorphic(ColoredGraph::monochrome(a), ColoredGraph::monochrome(b));
}

// Adding non-edge e in color c creates a rainbow K_r containing e.
inline bool creates_rainbow(const ColoredGraph& g, const Edge& e, Color c, int r)
{
    ColoredGraph h = g;
    h.add_edge(e, c);
    bool hit = false;
    for_each_subset(g.order(), r, [&](const std::vector<int>& s) {
        if (hit)
            return;
        if (std::find(s.begin(), s.end(), e.u) == s.end() || std::find(s.begin(), s.end(), e.v) == s.end())
            return;
        hit = is_rainbow_clique(h, s);
    });
    return hit;
}

inline bool rainbow_semisaturated(const ColoredGraph& g, int r, int fresh)
{
    std::set<Color> colors;
    for (const auto& e : g.edges())
        colors.insert(g.color(e));
    Color top = colors.empty() ? 0 : *colors.rbegin() + 1;
    std::vector<Color> cand(colors.begin(), colors.end());
    for (int i = 0; i < fresh; ++i)
        cand.push_back(top + i);
    for (const auto& e : g.non_edges())
        for (Color c : cand)
            if (!creates_rainbow(g, e, c, r))
                return false;
    return true;
}

inline bool rainbow_saturated(const ColoredGraph& g, int r, int fresh = 1)
{
    return rainbow_cliques(g, r).empty() && rainbow_semisaturated(g, r, fresh);
}

inline bool in_fhat(const ColoredGraph& g, int k)
{
    if (!rainbow_cliques(g, k + 1).empty())
        return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        bool found = false;
        for (const auto& s : rainbow_cliques(g, k))
            if (std::find(s.begin(), s.end(), v) == s.end())
                found = true;
        if (!found)
            return false;
    }
    std::set<Color> colors;
    for (const auto& e : g.edges())
        colors.insert(g.color(e));
    for (Color c : colors) {
        bool found = false;
        for (const auto& s : rainbow_cliques(g, k)) {
            bool uses = false;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    uses = uses || g.color(s[i], s[j]) == c;
            found = found || !uses;
        }
        if (!found)
            return false;
    }
    return true;
}

inline int max_matching(const Graph& g)
{
    std::function<int(std::vector<bool>&, int)> rec = [&](std::vector<bool>& used, int from) {
        int v = from;
        while (v < g.order() && used[static_cast<std::size_t>(v)])
            ++v;
        if (v >= g.order())
            return 0;
        used[static_cast<std::size_t>(v)] = true;
        int best = rec(used, v + 1);
        for (int w = v + 1; w < g.order(); ++w) {
            if (used[static_cast<std::size_t>(w)] || !g.adjacent(v, w))
                continue;
            used[static_cast<std::size_t>(w)] = true;
            best = std::max(best, 1 + rec(used, v + 1));
            used[static_cast<std::size_t>(w)] = false;
        }
        used[static_cast<std::size_t>(v)] = false;
        return best;
    };
    std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
    return rec(used, 0);
}

inline Graph random_graph(std::mt19937& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                g.add_edge(u, v);
    return g;
}

inline ColoredGraph random_colored(std::mt19937& rng, int n, double p, int colors)
{
    const Graph g = random_graph(rng, n, p);
    std::uniform_int_distribution<int> pick(0, colors - 1);
    ColoredGraph out(n);
    for (const auto& e : g.edges())
        out.add_edge(e, pick(rng));
    return out;
}

inline std::vector<int> random_permutation(std::mt19937& rng, int n)
{
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Every labeled graph on n vertices.
inline std::vector<Graph> all_labeled_graphs(int n)
{
    const auto pairs = Graph(n).non_edges();
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1U)
                g.add_edge(pairs[i]);
        out.push_back(g);
    }
    return out;
}

} // namespace oracle
