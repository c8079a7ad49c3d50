#pragma once

#include "rsat/errors.hpp"
#include "rsat/graph.hpp"
#include "rsat/rainbow_detect.hpp"
#include "rsat/report.hpp"

#include <vector>

namespace rsat {

// Membership in F-hat_k:
//   P1  no rainbow K_{k+1};
//   P2  every vertex-deleted subgraph has a rainbow K_k;
//   P3  every color present is avoided by some rainbow K_k.
// Colors absent from the graph satisfy P3 trivially.
inline VerificationReport in_family_Fhat(const ColoredGraph& g, int k)
{
    if (k < 1)
        throw ParameterError("F-hat index must be at least 1");
    if (auto big = contains_rainbow_clique(g, k + 1); big.found) {
        Witness w;
        w.property = 1;
        w.kind = Witness::Kind::clique;
        w.vertices = big.vertices;
        return VerificationReport::failure(w);
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!contains_rainbow_clique(g, RainbowCliqueQuery{k, v, std::nullopt}).found) {
            Witness w;
            w.property = 2;
            w.kind = Witness::Kind::vertex;
            w.vertices = {v};
            return VerificationReport::failure(w);
        }
    }
    for (Color c : g.colors()) {
        if (!contains_rainbow_clique(g, RainbowCliqueQuery{k, std::nullopt, c}).found) {
            Witness w;
            w.property = 3;
            w.kind = Witness::Kind::color;
            w.color = c;
            return VerificationReport::failure(w);
        }
    }
    return VerificationReport::success();
}

inline constexpr int kMaxMatchingOrder = 24;

// Maximum matching size in a general graph, by memoized exhaustion over
// vertex subsets.
inline int maximum_matching_size(const Graph& g)
{
    const int n = g.order();
    if (n > kMaxMatchingOrder)
        throw ResourceError("matching search is limited to " + std::to_string(kMaxMatchingOrder) +
                            " vertices");
    std::vector<signed char> memo(std::size_t{1} << n, -1);
    auto solve = [&](auto&& self, std::uint32_t mask) -> int {
        if (mask == 0)
            return 0;
        auto& slot = memo[mask];
        if (slot >= 0)
            return slot;
        const int v = std::countr_zero(mask);
        const std::uint32_t rest = mask & ~(std::uint32_t{1} << v);
        int best = self(self, rest);
        for (Vertex u = g.neighbors(v).first(); u != -1; u = g.neighbors(v).next(u))
            if (rest >> u & 1U)
                best = std::max(best, 1 + self(self, rest & ~(std::uint32_t{1} << u)));
        slot = static_cast<signed char>(best);
        return best;
    };
    const std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    return solve(solve, all);
}

// F''_r: 2(r-2) vertices, clique number r-2, complement has a perfect matching.
inline bool in_family_F_doubleprime(const Graph& g, int r)
{
    if (r < 3)
        throw ParameterError("F'' requires r >= 3");
    if (g.order() != 2 * (r - 2))
        return false;
    if (clique_number(g) != r - 2)
        return false;
    return 2 * maximum_matching_size(complement(g)) == g.order();
}

// omega(G - v) = omega(G) for every vertex v.
inline bool lemma2_hypothesis(const Graph& g)
{
    const int omega = clique_number(g);
    for (Vertex v = 0; v < g.order(); ++v) {
        VertexSet pool = g.vertices();
        pool.reset(v);
        if (clique_number(g, pool) != omega)
            return false;
    }
    return true;
}

// The complement contains a matching of size omega(G).
inline bool lemma2_conclusion(const Graph& g)
{
    return maximum_matching_size(complement(g)) >= clique_number(g);
}

// omega(G - S) = omega(G) for every S with |S| <= t.
inline bool robust_clique_check(const Graph& g, int t)
{
    if (t < 0)
        throw ParameterError("robustness parameter must be nonnegative");
    const int omega = clique_number(g);
    VertexSet pool = g.vertices();
    auto rec = [&](auto&& self, Vertex from, int left) -> bool {
        if (clique_number(g, pool) != omega)
            return false;
        if (left == 0)
            return true;
        for (Vertex v = from; v < g.order(); ++v) {
            pool.reset(v);
            const bool ok = self(self, v + 1, left - 1);
            pool.set(v);
            if (!ok)
                return false;
        }
        return true;
    };
    return rec(rec, 0, t);
}

} // namespace rsat
