#pragma once

#include "rsat/errors.hpp"
#include "rsat/vertex_set.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace rsat {

using Color = int;
inline constexpr Color kNoColor = -1;

// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e)
{
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : adj_(check_order(n)) {}

    [[nodiscard]] int order() const { return static_cast<int>(adj_.size()); }
    [[nodiscard]] int size() const { return edges_; }

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return adj_[u].test(v); }
    [[nodiscard]] const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    [[nodiscard]] int degree(Vertex v) const { return adj_[v].count(); }
    [[nodiscard]] VertexSet vertices() const { return VertexSet::range(order()); }

    void add_edge(Vertex u, Vertex v)
    {
        check_pair(u, v);
        if (adj_[u].test(v))
            return;
        adj_[u].set(v);
        adj_[v].set(u);
        ++edges_;
    }

    void remove_edge(Vertex u, Vertex v)
    {
        check_pair(u, v);
        if (!adj_[u].test(v))
            return;
        adj_[u].reset(v);
        adj_[v].reset(u);
        --edges_;
    }

    void add_edge(const Edge& e) { add_edge(e.u, e.v); }
    void remove_edge(const Edge& e) { remove_edge(e.u, e.v); }

    // Lexicographically sorted.
    [[nodiscard]] std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(edges_));
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
                out.emplace_back(u, v);
        return out;
    }

    [[nodiscard]] std::vector<Edge> non_edges() const
    {
        std::vector<Edge> out;
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v = u + 1; v < order(); ++v)
                if (!adj_[u].test(v))
                    out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static std::size_t check_order(int n)
    {
        if (n < 0)
            throw ParameterError("negative vertex count");
        if (n > kMaxVertices)
            throw ResourceError("graph order " + std::to_string(n) + " exceeds limit " +
                                std::to_string(kMaxVertices));
        return static_cast<std::size_t>(n);
    }

    void check_pair(Vertex u, Vertex v) const
    {
        if (u < 0 || v < 0 || u >= order() || v >= order())
            throw ParameterError("vertex out of range");
        if (u == v)
            throw ParameterError("loops are not allowed");
    }

    std::vector<VertexSet> adj_;
    int edges_ = 0;
};

// A graph with a total coloring of its edges. Only the partition of the edge
// set into color classes carries meaning; ids are arbitrary nonnegative ints.
class ColoredGraph {
public:
    ColoredGraph() = default;

    explicit ColoredGraph(int n)
        : graph_(n), color_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kNoColor)
    {
    }

    // R(G): every edge gets its own color, numbered in lexicographic edge order.
    static ColoredGraph rainbow(const Graph& g)
    {
        ColoredGraph out(g.order());
        Color c = 0;
        for (const auto& e : g.edges())
            out.add_edge(e.u, e.v, c++);
        return out;
    }

    // Every edge of g gets color c.
    static ColoredGraph monochrome(const Graph& g, Color c = 0)
    {
        ColoredGraph out(g.order());
        for (const auto& e : g.edges())
            out.add_edge(e.u, e.v, c);
        return out;
    }

    [[nodiscard]] const Graph& graph() const { return graph_; }
    [[nodiscard]] int order() const { return graph_.order(); }
    [[nodiscard]] int size() const { return graph_.size(); }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
    [[nodiscard]] const VertexSet& neighbors(Vertex v) const { return graph_.neighbors(v); }

    [[nodiscard]] Color color(Vertex u, Vertex v) const { return color_[index(u, v)]; }
    [[nodiscard]] Color color(const Edge& e) const { return color(e.u, e.v); }

    void add_edge(Vertex u, Vertex v, Color c)
    {
        if (c < 0)
            throw ParameterError("colors must be nonnegative");
        graph_.add_edge(u, v);
        color_[index(u, v)] = c;
        color_[index(v, u)] = c;
    }
    void add_edge(const Edge& e, Color c) { add_edge(e.u, e.v, c); }

    void remove_edge(Vertex u, Vertex v)
    {
        graph_.remove_edge(u, v);
        color_[index(u, v)] = kNoColor;
        color_[index(v, u)] = kNoColor;
    }
    void remove_edge(const Edge& e) { remove_edge(e.u, e.v); }

    [[nodiscard]] std::vector<Edge> edges() const { return graph_.edges(); }
    [[nodiscard]] std::vector<Edge> non_edges() const { return graph_.non_edges(); }

    // Distinct colors in increasing order.
    [[nodiscard]] std::vector<Color> colors() const
    {
        std::vector<Color> out;
        for (const auto& e : edges())
            out.push_back(color(e));
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    [[nodiscard]] int color_count() const { return static_cast<int>(colors().size()); }

    // Smallest id above every color in use; 0 for an edgeless graph.
    [[nodiscard]] Color fresh_color() const
    {
        Color top = -1;
        for (const auto& e : edges())
            top = std::max(top, color(e));
        return top + 1;
    }

    // Re-index color classes 0..c-1 by first occurrence in lexicographic edge order.
    [[nodiscard]] ColoredGraph normalized() const
    {
        ColoredGraph out(order());
        std::map<Color, Color> rename;
        for (const auto& e : edges()) {
            auto [it, inserted] = rename.try_emplace(color(e), static_cast<Color>(rename.size()));
            out.add_edge(e.u, e.v, it->second);
        }
        return out;
    }

    [[nodiscard]] bool is_normalized() const { return *this == normalized(); }

    friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

private:
    [[nodiscard]] std::size_t index(Vertex u, Vertex v) const
    {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(order()) +
               static_cast<std::size_t>(v);
    }

    Graph graph_;
    std::vector<Color> color_;
};

// Equality of colorings as edge partitions.
inline bool same_partition(const ColoredGraph& a, const ColoredGraph& b)
{
    return a.normalized() == b.normalized();
}

inline Graph complement(const Graph& g)
{
    Graph out(g.order());
    for (const auto& e : g.non_edges())
        out.add_edge(e);
    return out;
}

inline Graph disjoint_union(const Graph& a, const Graph& b)
{
    Graph out(a.order() + b.order());
    for (const auto& e : a.edges())
        out.add_edge(e);
    for (const auto& e : b.edges())
        out.add_edge(e.u + a.order(), e.v + a.order());
    return out;
}

// a + b: disjoint union plus every cross pair.
inline Graph join(const Graph& a, const Graph& b)
{
    Graph out = disjoint_union(a, b);
    for (Vertex u = 0; u < a.order(); ++u)
        for (Vertex v = 0; v < b.order(); ++v)
            out.add_edge(u, a.order() + v);
    return out;
}

// Complete join of colored graphs. b's classes are shifted past a's so the two
// partitions stay separate. Cross edges each get a brand-new color when fresh,
// otherwise they share a single new color.
inline ColoredGraph complete_join(const ColoredGraph& a, const ColoredGraph& b, bool fresh = true)
{
    const int n = a.order() + b.order();
    ColoredGraph out(n);
    const Color shift = a.fresh_color();
    for (const auto& e : a.edges())
        out.add_edge(e.u, e.v, a.color(e));
    for (const auto& e : b.edges())
        out.add_edge(e.u + a.order(), e.v + a.order(), b.color(e) + shift);
    Color next = shift + b.fresh_color();
    for (Vertex u = 0; u < a.order(); ++u)
        for (Vertex v = 0; v < b.order(); ++v)
            out.add_edge(u, a.order() + v, fresh ? next++ : next);
    return out;
}

// Subgraph induced on `keep`, relabeled 0.. in increasing vertex order.
inline Graph induced(const Graph& g, const std::vector<Vertex>& keep)
{
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return out;
}

inline ColoredGraph induced(const ColoredGraph& g, const std::vector<Vertex>& keep)
{
    ColoredGraph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j),
                             g.color(keep[i], keep[j]));
    return out;
}

inline std::vector<Vertex> all_but(int n, const VertexSet& drop)
{
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (!drop.test(v))
            keep.push_back(v);
    return keep;
}

inline Graph remove_vertices(const Graph& g, const VertexSet& drop)
{
    return induced(g, all_but(g.order(), drop));
}

inline ColoredGraph remove_vertices(const ColoredGraph& g, const VertexSet& drop)
{
    return induced(g, all_but(g.order(), drop));
}

// g with vertex v mapped to perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm)
{
    Graph out(g.order());
    for (const auto& e : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return out;
}

inline ColoredGraph relabel(const ColoredGraph& g, const std::vector<Vertex>& perm)
{
    ColoredGraph out(g.order());
    for (const auto& e : g.edges())
        out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)],
                     g.color(e));
    return out;
}

} // namespace rsat
