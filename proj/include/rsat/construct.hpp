#pragma once

#include "rsat/errors.hpp"
#include "rsat/family.hpp"
#include "rsat/graph.hpp"
#include "rsat/named_graphs.hpp"
#include "rsat/rainbow_detect.hpp"
#include "rsat/verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rsat {

// Shared color of non-stability and dominant-vertex edges.
inline constexpr Color kRed = 0;

namespace detail {

inline std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

inline void require(bool ok, const std::string& msg)
{
    if (!ok)
        throw ParameterError(msg);
}

} // namespace detail

// K_{r-2} + independent set of size n-r+2.
inline Graph ehm_graph(int n, int r)
{
    detail::require(r >= 3 && n >= r - 2, "ehm_graph needs n >= r-2 >= 1");
    return join(graphs::complete(r - 2), graphs::empty(n - r + 2));
}

// K_{2,n-2} for r = 3, K_{r-1} + independent set otherwise.
inline Graph g_semisat(int n, int r)
{
    detail::require(r >= 3, "g_semisat needs r >= 3");
    if (r == 3) {
        detail::require(n >= 3, "g_semisat needs n >= 3 for r = 3");
        return graphs::complete_bipartite(2, n - 2);
    }
    detail::require(n >= r, "g_semisat needs n >= r");
    return join(graphs::complete(r - 1), graphs::empty(n - r + 1));
}

inline ColoredGraph g_semisat_rainbow(int n, int r) { return ColoredGraph::rainbow(g_semisat(n, r)); }

// Complement of a perfect matching on 2(r-2) vertices, joined with an
// independent set of size n-2(r-2).
inline Graph g_prime(int n, int r)
{
    detail::require(r >= 3 && n >= 2 * r - 4, "g_prime needs r >= 3 and n >= 2r-4");
    const Graph core = complement(graphs::copies(r - 2, graphs::complete(2)));
    return join(core, graphs::empty(n - 2 * (r - 2)));
}

inline ColoredGraph g_prime_rainbow(int n, int r) { return ColoredGraph::rainbow(g_prime(n, r)); }

// Triangle with two edges of one color.
inline ColoredGraph lambda2()
{
    ColoredGraph g(3);
    g.add_edge(0, 1, 0);
    g.add_edge(0, 2, 0);
    g.add_edge(1, 2, 1);
    return g;
}

inline ColoredGraph lambda3() { return complete_join(lambda2(), ColoredGraph(2), true); }

// Vertices x=0, v1=1, v2=2, u1=3, u2=4; x misses v1 and v2; v1u1 and v2u2
// share a color.
inline ColoredGraph lambda3_alt()
{
    ColoredGraph g(5);
    Color next = 1;
    for (const auto& e : graphs::complete(5).edges()) {
        if (e == Edge{0, 1} || e == Edge{0, 2})
            continue;
        if (e == Edge{1, 3} || e == Edge{2, 4})
            g.add_edge(e, 0);
        else
            g.add_edge(e, next++);
    }
    return g.normalized();
}

// Complete graph on K_t plus subdivision vertices; the end edges of every
// subdivided path share a color private to that path.
inline ColoredGraph subdivision_gamma(int k)
{
    detail::require(k >= 4, "subdivision_gamma needs k >= 4");
    int t = 1;
    while ((2 * t - 1) * (2 * t - 1) < 4 * k - 3)
        ++t;
    const int ell = t * (t - 1) - (k - 1);
    const int twice = (k - 1 - ell) / 2;
    const int n = t + k - 1;

    ColoredGraph g(n);
    Color next = 0;
    Vertex fresh_vertex = t;
    int index = 0;
    for (const auto& e : graphs::complete(t).edges()) {
        const Color shared = next++;
        if (index++ < twice) {
            const Vertex s1 = fresh_vertex++;
            const Vertex s2 = fresh_vertex++;
            g.add_edge(e.u, s1, shared);
            g.add_edge(s2, e.v, shared);
            g.add_edge(s1, s2, next++);
        } else {
            const Vertex s = fresh_vertex++;
            g.add_edge(e.u, s, shared);
            g.add_edge(s, e.v, shared);
        }
    }
    for (const auto& e : g.non_edges())
        g.add_edge(e, next++);
    return g;
}

// Adds non-edges in lexicographic (edge, color) order whenever that creates
// no rainbow K_{k+1}; the result is rainbow-K_{k+1}-saturated.
inline ColoredGraph saturate_completion(ColoredGraph g, int k)
{
    detail::require(k >= 1, "saturate_completion needs k >= 1");
    for (const auto& e : g.non_edges()) {
        for (Color c : candidate_colors(g)) {
            if (!rainbow_clique_through(g, e, c, k + 1).found) {
                g.add_edge(e, c);
                break;
            }
        }
    }
    return g;
}

// Saturated member of the family for k = r-2 used as the core of gamma_rn.
inline ColoredGraph default_core(int r)
{
    detail::require(r >= 3, "core needs r >= 3");
    if (r == 3)
        return ColoredGraph(2);
    if (r == 4)
        return lambda2();
    if (r == 5)
        return lambda3();
    return saturate_completion(subdivision_gamma(r - 2), r - 2);
}

// Core joined with an independent set, cross edges in distinct new colors.
inline ColoredGraph gamma_rn(int r, int n, const std::optional<ColoredGraph>& core = std::nullopt)
{
    detail::require(r >= 3, "gamma_rn needs r >= 3");
    const ColoredGraph c = core ? *core : default_core(r);
    if (core) {
        if (!in_family_Fhat(c, r - 2))
            throw ParameterError("supplied core is not in the family for k = r-2");
    }
    detail::require(n >= c.order() + 2, "gamma_rn needs n >= |core| + 2");
    return complete_join(c, ColoredGraph(n - c.order()), true);
}

// Lambda'_3 with z1=5, z2=6 complete to everything, plus n-7 vertices
// attached to the first five in fresh colors.
inline ColoredGraph alt_k5(int n)
{
    detail::require(n >= 9, "alt_k5 needs n >= 9");
    const ColoredGraph base = lambda3_alt();
    ColoredGraph g(n);
    for (const auto& e : base.edges())
        g.add_edge(e, base.color(e));
    Color next = base.fresh_color();
    const Color a = next++;
    const Color b = next++;
    g.add_edge(5, 6, next++);
    for (Vertex z : {5, 6}) {
        for (Vertex w = 0; w < 5; ++w) {
            if ((z == 5 && w == 1) || (z == 6 && w == 2))
                g.add_edge(w, z, a);
            else if ((z == 5 && w == 3) || (z == 6 && w == 4))
                g.add_edge(w, z, b);
            else
                g.add_edge(w, z, next++);
        }
    }
    for (Vertex v = 7; v < n; ++v)
        for (Vertex w = 0; w < 5; ++w)
            g.add_edge(w, v, next++);
    return g;
}

// The gadget with exactly one non-edge, which no color can fill.
inline ColoredGraph nonstab_lambda(int r)
{
    detail::require(r >= 3, "nonstab_lambda needs r >= 3");
    if (r == 3) {
        const Color red = 0, blue = 1, green = 2;
        ColoredGraph g(5);
        g.add_edge(0, 3, red);
        g.add_edge(2, 3, red);
        g.add_edge(0, 4, blue);
        g.add_edge(1, 4, blue);
        for (const auto& e : std::vector<Edge>{{1, 2}, {1, 3}, {2, 4}, {0, 1}, {0, 2}})
            g.add_edge(e, green);
        return g;
    }
    const int q = r - 2;
    ColoredGraph g(2 * r - 2);
    Color next = 1;
    auto in_a = [&](Vertex v) { return v >= 2 && v < 2 + q; };
    for (const auto& e : graphs::complete(2 * r - 2).edges()) {
        if (e == Edge{0, 1})
            continue;
        const bool cross = e.u >= 2 && in_a(e.u) != in_a(e.v);
        g.add_edge(e, cross ? kRed : next++);
    }
    return g;
}

namespace detail {

// Adds d vertices adjacent to everything in red.
inline ColoredGraph add_dominant(const ColoredGraph& g, int d)
{
    ColoredGraph out(g.order() + d);
    for (const auto& e : g.edges())
        out.add_edge(e, g.color(e));
    for (Vertex v = g.order(); v < out.order(); ++v)
        for (Vertex w = 0; w < v; ++w)
            out.add_edge(w, v, kRed);
    return out;
}

// Shifts every color up by one so that kRed is unused.
inline ColoredGraph free_red(const ColoredGraph& g)
{
    ColoredGraph out(g.order());
    for (const auto& e : g.edges())
        out.add_edge(e, g.color(e) + 1);
    return out;
}

// `copies` gadgets red-joined, then d dominant vertices.
inline ColoredGraph nonstab_case2(int r, int copies, int d)
{
    const ColoredGraph gadget = nonstab_lambda(r);
    const int s = gadget.order();
    ColoredGraph g(s * copies);
    Color offset = 0;
    for (int i = 0; i < copies; ++i) {
        for (const auto& e : gadget.edges()) {
            const Color c = gadget.color(e);
            g.add_edge(e.u + i * s, e.v + i * s, c == kRed ? kRed : c + offset);
        }
        offset += gadget.fresh_color();
    }
    for (int i = 0; i < copies; ++i)
        for (int j = i + 1; j < copies; ++j)
            for (Vertex u = 0; u < s; ++u)
                for (Vertex v = 0; v < s; ++v)
                    g.add_edge(i * s + u, j * s + v, kRed);
    return add_dominant(g, d);
}

// Gamma_{r,n0}; x independent vertices each cloned three times into a red
// K_4, y more cloned once with a red edge; then d dominant vertices.
inline ColoredGraph nonstab_case1(int r, int n0, int x, int y, int d)
{
    const ColoredGraph base = free_red(gamma_rn(r, n0));
    const int f = default_core(r).order();
    const int n1 = n0 + 3 * x + y;
    ColoredGraph g(n1);
    for (const auto& e : base.edges())
        g.add_edge(e, base.color(e));
    Vertex next = n0;
    auto clone = [&](Vertex v) {
        const Vertex u = next++;
        for (Vertex s = 0; s < f; ++s)
            g.add_edge(s, u, base.color(s, v));
        return u;
    };
    for (int i = 0; i < x; ++i) {
        const Vertex v = f + i;
        std::vector<Vertex> group{v};
        for (int j = 0; j < 3; ++j)
            group.push_back(clone(v));
        for (std::size_t a = 0; a < group.size(); ++a)
            for (std::size_t b = a + 1; b < group.size(); ++b)
                g.add_edge(group[a], group[b], kRed);
    }
    for (int i = 0; i < y; ++i) {
        const Vertex v = f + x + i;
        g.add_edge(v, clone(v), kRed);
    }
    return add_dominant(g, d);
}

inline std::int64_t case1_edges(int r, int n0, int x, int y, int d)
{
    const std::int64_t f = default_core(r).order();
    const std::int64_t core_edges = default_core(r).size();
    const std::int64_t n1 = n0 + 3 * x + y;
    return core_edges + f * (n0 - f) + x * (3 * f + 6) + y * (f + 1) + d * n1 + choose2(d);
}

} // namespace detail

// An n-vertex, m-edge rainbow-K_r-saturated graph, or InfeasibleError.
// Tries red-joined gadget copies first, then clone-extended Gamma graphs;
// every candidate is verified before it is returned.
inline ColoredGraph nonstab_assemble(int r, int n, int m)
{
    detail::require(r >= 3 && n >= 1, "nonstab_assemble needs r >= 3");
    const std::int64_t total = detail::choose2(n);
    detail::require(m >= 0 && m <= total, "edge count outside [0, C(n,2)]");
    const std::int64_t missing = total - m;

    auto accept = [&](const ColoredGraph& g) { return g.size() == m && is_rainbow_saturated(g, r); };

    const int s = nonstab_lambda(r).order();
    if (missing * s <= n) {
        const int copies = static_cast<int>(missing);
        auto g = detail::nonstab_case2(r, copies, n - copies * s);
        if (accept(g))
            return g;
    }

    const int f = default_core(r).order();
    for (int n0 = n; n0 >= f + 2; --n0) {
        for (int x = 0; 3 * x <= n - n0; ++x) {
            for (int y = 0; 3 * x + y <= n - n0; ++y) {
                if (x + y > n0 - f)
                    break;
                const int d = n - n0 - 3 * x - y;
                if (detail::case1_edges(r, n0, x, y, d) != m)
                    continue;
                auto g = detail::nonstab_case1(r, n0, x, y, d);
                if (accept(g))
                    return g;
            }
        }
    }
    throw InfeasibleError("no verified construction with r=" + std::to_string(r) + ", n=" + std::to_string(n) +
                          ", m=" + std::to_string(m));
}

// Independent set of size n-(k+1)(r-2) joined with the complete
// (r-2)-partite graph with parts of size k+1.
inline Graph satk_upper(int n, int r, int k)
{
    detail::require(r >= 3 && k >= 0 && n >= (k + 1) * (r - 2), "satk_upper needs r >= 3, k >= 0, n >= (k+1)(r-2)");
    const Graph core = complement(graphs::copies(r - 2, graphs::complete(k + 1)));
    return join(core, graphs::empty(n - (k + 1) * (r - 2)));
}

} // namespace rsat
