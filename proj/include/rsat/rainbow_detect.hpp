#pragma once

#include "rsat/errors.hpp"
#include "rsat/graph.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace rsat {

inline constexpr int kMaxPatternOrder = 12;

// Forbidden pattern H for subgraph containment.
class Pattern {
public:
    explicit Pattern(Graph h) : graph_(std::move(h))
    {
        if (graph_.order() > kMaxPatternOrder)
            throw ResourceError("pattern has " + std::to_string(graph_.order()) +
                                " vertices, limit is " + std::to_string(kMaxPatternOrder));
        const int n = graph_.order();
        complete_ = graph_.size() == n * (n - 1) / 2;
    }

    static Pattern clique(int r)
    {
        Graph k(r);
        for (Vertex u = 0; u < r; ++u)
            for (Vertex v = u + 1; v < r; ++v)
                k.add_edge(u, v);
        return Pattern(std::move(k));
    }

    [[nodiscard]] const Graph& graph() const { return graph_; }
    [[nodiscard]] int order() const { return graph_.order(); }
    [[nodiscard]] bool is_complete() const { return complete_; }

private:
    Graph graph_;
    bool complete_ = false;
};

struct RainbowCliqueQuery {
    int k = 1;
    std::optional<Vertex> forbidden_vertex;
    std::optional<Color> forbidden_color;
};

struct Containment {
    bool found = false;
    // Clique vertex set, or the embedding pattern-vertex -> host-vertex.
    std::vector<Vertex> vertices;
};

namespace detail {

// Enumerates rainbow cliques extending `clique`. Candidates are kept filtered
// so that each one is compatible with the current clique: adjacent to every
// member, with pairwise distinct edge colors into it, none already used.
template <class Visit>
class RainbowCliqueWalker {
public:
    RainbowCliqueWalker(const ColoredGraph& g, int k, Visit& visit) : g_(g), k_(k), visit_(visit) {}

    bool run(std::vector<Vertex> clique, std::vector<Color> used, VertexSet pool)
    {
        clique_ = std::move(clique);
        used_ = std::move(used);
        VertexSet cand;
        for (Vertex x = pool.first(); x != -1; x = pool.next(x))
            if (compatible(x))
                cand.set(x);
        return expand(cand);
    }

private:
    [[nodiscard]] bool is_used(Color c) const
    {
        return std::find(used_.begin(), used_.end(), c) != used_.end();
    }

    [[nodiscard]] bool compatible(Vertex x) const
    {
        bool ok = true;
        std::vector<Color> mine;
        mine.reserve(clique_.size());
        for (Vertex y : clique_) {
            if (!g_.adjacent(x, y)) {
                ok = false;
                break;
            }
            const Color c = g_.color(x, y);
            if (is_used(c) || std::find(mine.begin(), mine.end(), c) != mine.end()) {
                ok = false;
                break;
            }
            mine.push_back(c);
        }
        return ok;
    }

    bool expand(const VertexSet& cand)
    {
        if (static_cast<int>(clique_.size()) == k_)
            return visit_(clique_, used_);
        if (static_cast<int>(clique_.size()) + cand.count() < k_)
            return false;
        for (Vertex x = cand.first(); x != -1; x = cand.next(x)) {
            const std::size_t used_before = used_.size();
            for (Vertex y : clique_)
                used_.push_back(g_.color(x, y));
            clique_.push_back(x);

            VertexSet next;
            const VertexSet later = (cand & g_.neighbors(x)).after(x);
            for (Vertex y = later.first(); y != -1; y = later.next(y))
                if (compatible(y))
                    next.set(y);
            const bool stop = expand(next);

            clique_.pop_back();
            used_.resize(used_before);
            if (stop)
                return true;
        }
        return false;
    }

    const ColoredGraph& g_;
    int k_;
    Visit& visit_;
    std::vector<Vertex> clique_;
    std::vector<Color> used_;
};

// Seeded enumeration in lexicographic order of the added vertices. `seed`
// must already be a rainbow clique whose internal colors are listed in
// `used` (which may also hold banned colors). Return true from visit to stop.
template <class Visit>
bool for_each_rainbow_clique(const ColoredGraph& g, int k, std::vector<Vertex> seed,
                             std::vector<Color> used, VertexSet pool, Visit visit)
{
    for (Vertex s : seed)
        pool.reset(s);
    if (static_cast<int>(seed.size()) > k)
        return false;
    RainbowCliqueWalker<Visit> walker(g, k, visit);
    return walker.run(std::move(seed), std::move(used), pool);
}

} // namespace detail

// Rainbow K_k avoiding the optional vertex and color; witness is the
// lexicographically first such vertex set.
inline Containment contains_rainbow_clique(const ColoredGraph& g, const RainbowCliqueQuery& q)
{
    if (q.k < 1)
        throw ParameterError("rainbow clique order must be at least 1");
    if (q.forbidden_vertex && (*q.forbidden_vertex < 0 || *q.forbidden_vertex >= g.order()))
        throw ParameterError("forbidden vertex out of range");
    VertexSet pool = g.graph().vertices();
    if (q.forbidden_vertex)
        pool.reset(*q.forbidden_vertex);
    std::vector<Color> banned;
    if (q.forbidden_color)
        banned.push_back(*q.forbidden_color);
    Containment out;
    detail::for_each_rainbow_clique(g, q.k, {}, banned, pool,
                                    [&](const std::vector<Vertex>& c, const std::vector<Color>&) {
                                        out.found = true;
                                        out.vertices = c;
                                        return true;
                                    });
    return out;
}

inline Containment contains_rainbow_clique(const ColoredGraph& g, int k)
{
    return contains_rainbow_clique(g, RainbowCliqueQuery{k, std::nullopt, std::nullopt});
}

inline std::vector<std::vector<Vertex>> list_rainbow_cliques(const ColoredGraph& g, int k)
{
    if (k < 1)
        throw ParameterError("rainbow clique order must be at least 1");
    std::vector<std::vector<Vertex>> out;
    detail::for_each_rainbow_clique(g, k, {}, {}, g.graph().vertices(),
                                    [&](const std::vector<Vertex>& c, const std::vector<Color>&) {
                                        out.push_back(c);
                                        return false;
                                    });
    return out;
}

inline int rainbow_clique_number(const ColoredGraph& g)
{
    int k = 0;
    while (k < g.order() && contains_rainbow_clique(g, k + 1).found)
        ++k;
    return k;
}

// Does adding pair e in color c create a rainbow K_r through e? Witness is
// the clique's vertex set.
inline Containment rainbow_clique_through(const ColoredGraph& g, const Edge& e, Color c, int r)
{
    Containment out;
    if (r < 2)
        return out;
    VertexSet pool = g.neighbors(e.u) & g.neighbors(e.v);
    detail::for_each_rainbow_clique(g, r, {e.u, e.v}, {c}, pool,
                                    [&](const std::vector<Vertex>& cl, const std::vector<Color>&) {
                                        out.found = true;
                                        out.vertices = cl;
                                        std::sort(out.vertices.begin(), out.vertices.end());
                                        return true;
                                    });
    return out;
}

// All rainbow K_{r-2} in the common neighborhood of e that together with the
// endpoints form a rainbow K_r minus the pair e. Visit receives the set of
// colors such a clique uses; return true to stop.
template <class Visit>
void for_each_clique_through(const ColoredGraph& g, const Edge& e, int r, Visit visit)
{
    VertexSet pool = g.neighbors(e.u) & g.neighbors(e.v);
    detail::for_each_rainbow_clique(
        g, r, {e.u, e.v}, {}, pool,
        [&](const std::vector<Vertex>& cl, const std::vector<Color>& used) { return visit(cl, used); });
}

namespace detail {

class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(const Graph& g) : g_(g) {}

    int run(const VertexSet& pool)
    {
        best_ = 0;
        expand(0, pool);
        return best_;
    }

private:
    // Greedy coloring bound: vertices in order with their color numbers.
    void color_order(const VertexSet& p, std::vector<Vertex>& order, std::vector<int>& bound) const
    {
        order.clear();
        bound.clear();
        VertexSet left = p;
        int color = 0;
        while (!left.empty()) {
            ++color;
            VertexSet avail = left;
            while (!avail.empty()) {
                const Vertex v = avail.first();
                avail.reset(v);
                avail -= g_.neighbors(v);
                left.reset(v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    void expand(int size, VertexSet p)
    {
        std::vector<Vertex> order;
        std::vector<int> bound;
        color_order(p, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (size + bound[i] <= best_)
                return;
            const Vertex v = order[i];
            const VertexSet next = p & g_.neighbors(v);
            if (next.empty())
                best_ = std::max(best_, size + 1);
            else
                expand(size + 1, next);
            p.reset(v);
        }
    }

    const Graph& g_;
    int best_ = 0;
};

} // namespace detail

inline int clique_number(const Graph& g, const VertexSet& pool)
{
    return detail::MaxCliqueSearch(g).run(pool);
}

inline int clique_number(const Graph& g) { return clique_number(g, g.vertices()); }

namespace detail {

inline bool find_clique(const Graph& g, int k, std::vector<Vertex>& clique, VertexSet cand)
{
    if (static_cast<int>(clique.size()) == k)
        return true;
    if (static_cast<int>(clique.size()) + cand.count() < k)
        return false;
    for (Vertex x = cand.first(); x != -1; x = cand.next(x)) {
        clique.push_back(x);
        const VertexSet next = (cand & g.neighbors(x)).after(x);
        if (find_clique(g, k, clique, next))
            return true;
        clique.pop_back();
    }
    return false;
}

// Subgraph embedding by backtracking over pattern vertices.
class Embedder {
public:
    Embedder(const Graph& host, const Graph& pattern) : g_(host), h_(pattern)
    {
        order_ = search_order();
    }

    // Extends a partial assignment (pattern vertex -> host vertex, -1 free).
    bool run(std::vector<Vertex> partial)
    {
        map_ = std::move(partial);
        used_ = VertexSet();
        for (Vertex x : map_)
            if (x != -1)
                used_.set(x);
        return extend(0);
    }

    [[nodiscard]] const std::vector<Vertex>& embedding() const { return map_; }

private:
    std::vector<Vertex> search_order() const
    {
        const int n = h_.order();
        std::vector<Vertex> order;
        VertexSet placed;
        while (static_cast<int>(order.size()) < n) {
            // Most already-placed neighbors first, then highest degree.
            Vertex pick = -1;
            int best_links = -1;
            int best_deg = -1;
            for (Vertex v = 0; v < n; ++v) {
                if (placed.test(v))
                    continue;
                const int links = h_.neighbors(v).intersection_count(placed);
                const int deg = h_.degree(v);
                if (links > best_links || (links == best_links && deg > best_deg)) {
                    pick = v;
                    best_links = links;
                    best_deg = deg;
                }
            }
            placed.set(pick);
            order.push_back(pick);
        }
        return order;
    }

    bool extend(std::size_t i)
    {
        if (i == order_.size())
            return true;
        const Vertex x = order_[i];
        if (map_[static_cast<std::size_t>(x)] != -1) {
            // Pre-assigned: check consistency with earlier placements.
            const Vertex gx = map_[static_cast<std::size_t>(x)];
            for (Vertex y = h_.neighbors(x).first(); y != -1; y = h_.neighbors(x).next(y)) {
                const Vertex gy = map_[static_cast<std::size_t>(y)];
                if (gy != -1 && !g_.adjacent(gx, gy))
                    return false;
            }
            return extend(i + 1);
        }
        VertexSet cand = g_.vertices() - used_;
        for (Vertex y = h_.neighbors(x).first(); y != -1; y = h_.neighbors(x).next(y)) {
            const Vertex gy = map_[static_cast<std::size_t>(y)];
            if (gy != -1)
                cand &= g_.neighbors(gy);
        }
        const int need = h_.degree(x);
        for (Vertex c = cand.first(); c != -1; c = cand.next(c)) {
            if (g_.degree(c) < need)
                continue;
            map_[static_cast<std::size_t>(x)] = c;
            used_.set(c);
            if (extend(i + 1))
                return true;
            used_.reset(c);
            map_[static_cast<std::size_t>(x)] = -1;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<Vertex> order_;
    std::vector<Vertex> map_;
    VertexSet used_;
};

} // namespace detail

inline Containment find_clique(const Graph& g, int k)
{
    Containment out;
    std::vector<Vertex> clique;
    if (detail::find_clique(g, k, clique, g.vertices())) {
        out.found = true;
        out.vertices = clique;
    }
    return out;
}

// Not necessarily induced. Witness maps pattern vertices to host vertices.
inline Containment contains_subgraph(const Graph& g, const Pattern& h)
{
    Containment out;
    if (h.order() > g.order())
        return out;
    if (h.is_complete()) {
        auto c = find_clique(g, h.order());
        if (c.found) {
            out.found = true;
            out.vertices = c.vertices;
        }
        return out;
    }
    detail::Embedder emb(g, h.graph());
    if (emb.run(std::vector<Vertex>(static_cast<std::size_t>(h.order()), -1))) {
        out.found = true;
        out.vertices = emb.embedding();
    }
    return out;
}

// A copy of h in g whose image uses at least one of the listed host edges.
inline Containment contains_subgraph_using(const Graph& g, const Pattern& h, const std::vector<Edge>& through)
{
    Containment out;
    if (h.order() > g.order())
        return out;
    if (h.is_complete()) {
        const int r = h.order();
        for (const auto& e : through) {
            if (!g.adjacent(e.u, e.v))
                continue;
            std::vector<Vertex> clique{e.u, e.v};
            if (r < 2)
                continue;
            if (detail::find_clique(g, r, clique, g.neighbors(e.u) & g.neighbors(e.v))) {
                out.found = true;
                out.vertices = clique;
                std::sort(out.vertices.begin(), out.vertices.end());
                return out;
            }
        }
        return out;
    }
    detail::Embedder emb(g, h.graph());
    const auto pattern_edges = h.graph().edges();
    for (const auto& e : through) {
        if (!g.adjacent(e.u, e.v))
            continue;
        for (const auto& f : pattern_edges) {
            for (int flip = 0; flip < 2; ++flip) {
                std::vector<Vertex> partial(static_cast<std::size_t>(h.order()), -1);
                partial[static_cast<std::size_t>(f.u)] = flip ? e.v : e.u;
                partial[static_cast<std::size_t>(f.v)] = flip ? e.u : e.v;
                if (emb.run(partial)) {
                    out.found = true;
                    out.vertices = emb.embedding();
                    return out;
                }
            }
        }
    }
    return out;
}

} // namespace rsat
