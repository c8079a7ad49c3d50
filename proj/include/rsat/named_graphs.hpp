#pragma once

#include "rsat/graph.hpp"

namespace rsat::graphs {

inline Graph empty(int n) { return Graph(n); }

inline Graph complete(int n)
{
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

inline Graph path(int n)
{
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n)
{
    Graph g = path(n);
    if (n >= 3)
        g.add_edge(0, n - 1);
    return g;
}

// K_{1,leaves}, center 0.
inline Graph star(int leaves)
{
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v)
        g.add_edge(0, v);
    return g;
}

inline Graph complete_bipartite(int a, int b) { return join(empty(a), empty(b)); }

// copies disjoint copies of g.
inline Graph copies(int count, const Graph& g)
{
    Graph out(0);
    for (int i = 0; i < count; ++i)
        out = disjoint_union(out, g);
    return out;
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen()
{
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    return g;
}

} // namespace rsat::graphs
