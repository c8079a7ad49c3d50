#pragma once

#include "rsat/errors.hpp"
#include "rsat/graph.hpp"

#include <compare>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace rsat {

inline constexpr int kMaxCanonicalOrder = 12;

// Totally ordered key; equal keys iff isomorphic (vertex relabeling composed
// with color renaming for colored graphs).
struct CanonicalCode {
    std::string bytes;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

namespace detail {

// Individualization-refinement canonical labeling of a graph whose nodes carry
// an ordered initial partition. Exhaustive over the search tree, pruned only
// by automorphisms discovered along the way.
class CanonicalLabeler {
public:
    using Cells = std::vector<std::vector<int>>;

    CanonicalLabeler(std::vector<VertexSet> adj, Cells initial)
        : adj_(std::move(adj)), n_(static_cast<int>(adj_.size()))
    {
        Cells cells;
        for (auto& c : initial)
            if (!c.empty())
                cells.push_back(std::move(c));
        std::vector<VertexSet> queue;
        for (const auto& c : cells)
            queue.push_back(as_set(c));
        refine(cells, std::move(queue));
        std::vector<int> path;
        search(cells, path);
    }

    // node -> canonical position
    [[nodiscard]] const std::vector<int>& labeling() const { return best_->lab; }
    [[nodiscard]] const std::string& code() const { return best_->code; }
    [[nodiscard]] const std::vector<std::vector<int>>& generators() const { return generators_; }

private:
    struct Leaf {
        std::vector<int> lab;
        std::vector<int> path;
        std::string code;
    };

    static VertexSet as_set(const std::vector<int>& cell)
    {
        VertexSet s;
        for (int x : cell)
            s.set(x);
        return s;
    }

    void refine(Cells& cells, std::vector<VertexSet> queue) const
    {
        for (std::size_t q = 0; q < queue.size(); ++q) {
            const VertexSet splitter = queue[q];
            for (std::size_t j = 0; j < cells.size(); ++j) {
                auto& cell = cells[j];
                if (cell.size() < 2)
                    continue;
                std::vector<std::pair<int, int>> keyed;
                keyed.reserve(cell.size());
                for (int x : cell)
                    keyed.emplace_back(adj_[static_cast<std::size_t>(x)].intersection_count(splitter), x);
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                if (keyed.front().first == keyed.back().first)
                    continue;
                Cells fragments;
                int last = -1;
                for (const auto& [count, x] : keyed) {
                    if (fragments.empty() || count != last)
                        fragments.emplace_back();
                    fragments.back().push_back(x);
                    last = count;
                }
                for (const auto& f : fragments)
                    queue.push_back(as_set(f));
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(j));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(j), fragments.begin(),
                             fragments.end());
                j += fragments.size() - 1;
            }
        }
    }

    [[nodiscard]] std::string leaf_code(const std::vector<int>& at) const
    {
        std::string code;
        unsigned char byte = 0;
        int bits = 0;
        for (int i = 0; i < n_; ++i) {
            const auto& row = adj_[static_cast<std::size_t>(at[static_cast<std::size_t>(i)])];
            for (int j = i + 1; j < n_; ++j) {
                byte = static_cast<unsigned char>(
                    (byte << 1) | (row.test(at[static_cast<std::size_t>(j)]) ? 1 : 0));
                if (++bits == 8) {
                    code.push_back(static_cast<char>(byte));
                    byte = 0;
                    bits = 0;
                }
            }
        }
        if (bits)
            code.push_back(static_cast<char>(byte << (8 - bits)));
        return code;
    }

    // Returns the tree depth to unwind to, or -1.
    int search(const Cells& cells, std::vector<int>& path)
    {
        const int depth = static_cast<int>(path.size());
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size())
            return visit_leaf(cells, path);

        std::vector<int> explored;
        for (int x : sorted(cells[target])) {
            if (!explored.empty()) {
                const auto orbit = orbits_fixing(path);
                bool equivalent = false;
                for (int y : explored)
                    if (orbit[static_cast<std::size_t>(y)] == orbit[static_cast<std::size_t>(x)]) {
                        equivalent = true;
                        break;
                    }
                if (equivalent)
                    continue;
            }
            explored.push_back(x);

            Cells child = cells;
            auto& cell = child[target];
            std::vector<int> rest;
            for (int y : cell)
                if (y != x)
                    rest.push_back(y);
            cell = {x};
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
            refine(child, {as_set({x}), as_set(rest)});

            path.push_back(x);
            const int unwind = search(child, path);
            path.pop_back();
            if (unwind != -1 && unwind < depth)
                return unwind;
        }
        return -1;
    }

    static std::vector<int> sorted(std::vector<int> v)
    {
        std::sort(v.begin(), v.end());
        return v;
    }

    [[nodiscard]] std::vector<int> orbits_fixing(const std::vector<int>& path) const
    {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x)
                x = parent[static_cast<std::size_t>(x)] =
                    parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            return x;
        };
        for (const auto& g : generators_) {
            bool fixes = true;
            for (int p : path)
                if (g[static_cast<std::size_t>(p)] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes)
                continue;
            for (int x = 0; x < n_; ++x) {
                const int a = find(x);
                const int b = find(g[static_cast<std::size_t>(x)]);
                if (a != b)
                    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
        std::vector<int> orbit(static_cast<std::size_t>(n_));
        for (int x = 0; x < n_; ++x)
            orbit[static_cast<std::size_t>(x)] = find(x);
        return orbit;
    }

    int visit_leaf(const Cells& cells, const std::vector<int>& path)
    {
        Leaf leaf;
        leaf.path = path;
        leaf.lab.assign(static_cast<std::size_t>(n_), 0);
        std::vector<int> at(static_cast<std::size_t>(n_));
        for (std::size_t i = 0; i < cells.size(); ++i) {
            at[i] = cells[i].front();
            leaf.lab[static_cast<std::size_t>(cells[i].front())] = static_cast<int>(i);
        }
        leaf.code = leaf_code(at);

        if (!first_) {
            first_ = leaf;
            best_ = std::move(leaf);
            return -1;
        }
        for (const Leaf* other : {&*first_, &*best_}) {
            if (other->code != leaf.code)
                continue;
            // gamma maps this leaf's labeling onto the earlier one.
            std::vector<int> at_other(static_cast<std::size_t>(n_));
            for (int x = 0; x < n_; ++x)
                at_other[static_cast<std::size_t>(other->lab[static_cast<std::size_t>(x)])] = x;
            std::vector<int> gamma(static_cast<std::size_t>(n_));
            for (int x = 0; x < n_; ++x)
                gamma[static_cast<std::size_t>(x)] =
                    at_other[static_cast<std::size_t>(leaf.lab[static_cast<std::size_t>(x)])];
            generators_.push_back(gamma);

            std::size_t common = 0;
            while (common < leaf.path.size() && common < other->path.size() &&
                   leaf.path[common] == other->path[common])
                ++common;
            if (common >= leaf.path.size() || common >= other->path.size())
                return -1;
            for (std::size_t j = 0; j < common; ++j)
                if (gamma[static_cast<std::size_t>(leaf.path[j])] != leaf.path[j])
                    return -1;
            if (gamma[static_cast<std::size_t>(leaf.path[common])] != other->path[common])
                return -1;
            return static_cast<int>(common);
        }
        if (leaf.code < best_->code)
            best_ = std::move(leaf);
        return -1;
    }

    std::vector<VertexSet> adj_;
    int n_;
    std::optional<Leaf> first_;
    std::optional<Leaf> best_;
    std::vector<std::vector<int>> generators_;
};

inline void check_canonical_order(int n)
{
    if (n > kMaxCanonicalOrder)
        throw ResourceError("canonical labeling is limited to " + std::to_string(kMaxCanonicalOrder) +
                            " vertices, got " + std::to_string(n));
}

inline CanonicalLabeler label_graph(const Graph& g)
{
    std::vector<VertexSet> adj;
    for (Vertex v = 0; v < g.order(); ++v)
        adj.push_back(g.neighbors(v));
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    return CanonicalLabeler(std::move(adj), {all});
}

inline void append_int(std::string& out, int x)
{
    for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<char>((x >> shift) & 0xff));
}

} // namespace detail

// v -> canonical label.
inline std::vector<Vertex> canonical_labeling(const Graph& g)
{
    detail::check_canonical_order(g.order());
    return detail::label_graph(g).labeling();
}

inline Graph canonical_form(const Graph& g) { return relabel(g, canonical_labeling(g)); }

inline CanonicalCode canonical_code(const Graph& g)
{
    detail::check_canonical_order(g.order());
    CanonicalCode code;
    code.bytes.push_back('G');
    detail::append_int(code.bytes, g.order());
    code.bytes += detail::label_graph(g).code();
    return code;
}

namespace detail {

// Auxiliary graph: vertex nodes, one node per edge joined to its endpoints,
// one node per color class joined to its edges. Color nodes may be permuted
// freely, so labeling it is invariant under color renaming.
inline CanonicalLabeler label_colored(const ColoredGraph& g)
{
    const auto edges = g.edges();
    const auto colors = g.colors();
    const int n = g.order();
    const int m = static_cast<int>(edges.size());
    const int c = static_cast<int>(colors.size());
    std::vector<VertexSet> adj(static_cast<std::size_t>(n + m + c));
    auto link = [&](int a, int b) {
        adj[static_cast<std::size_t>(a)].set(b);
        adj[static_cast<std::size_t>(b)].set(a);
    };
    for (int i = 0; i < m; ++i) {
        const auto& e = edges[static_cast<std::size_t>(i)];
        link(n + i, e.u);
        link(n + i, e.v);
        const auto pos = std::lower_bound(colors.begin(), colors.end(), g.color(e)) - colors.begin();
        link(n + i, n + m + static_cast<int>(pos));
    }
    CanonicalLabeler::Cells cells(3);
    for (int x = 0; x < n + m + c; ++x)
        cells[x < n ? 0 : x < n + m ? 1 : 2].push_back(x);
    return CanonicalLabeler(std::move(adj), std::move(cells));
}

} // namespace detail

inline CanonicalCode canonical_code(const ColoredGraph& g)
{
    detail::check_canonical_order(g.order());
    const auto labeler = detail::label_colored(g);
    CanonicalCode code;
    code.bytes.push_back('C');
    detail::append_int(code.bytes, g.order());
    detail::append_int(code.bytes, g.size());
    detail::append_int(code.bytes, g.color_count());
    code.bytes += labeler.code();
    return code;
}

// Relabels vertices canonically and normalizes colors; isomorphic inputs give
// identical outputs.
inline ColoredGraph canonical_form(const ColoredGraph& g)
{
    detail::check_canonical_order(g.order());
    const auto labeler = detail::label_colored(g);
    std::vector<Vertex> perm(labeler.labeling().begin(), labeler.labeling().begin() + g.order());
    return relabel(g, perm).normalized();
}

} // namespace rsat
