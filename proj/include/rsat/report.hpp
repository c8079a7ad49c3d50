#pragma once

#include "rsat/graph.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace rsat {

// Counterexample or certificate attached to a verdict.
struct Witness {
    enum class Kind {
        none,
        clique,       // vertex set of a (rainbow) clique
        embedding,    // pattern vertex -> host vertex
        nonedge,      // non-edge, with a color for the rainbow variants
        vertex,       // a vertex violating a property
        color,        // a color violating a property
        swap,         // removed edges + added pairs
        order,        // ordering of non-edges plus a failing color prefix
    };

    Kind kind = Kind::none;
    int property = 0; // F-hat property number, 0 when not applicable
    std::vector<Vertex> vertices;
    std::optional<Edge> edge;
    std::optional<Color> color;
    bool fresh_color = false;
    std::vector<Edge> removed;
    std::vector<Edge> added;
    std::vector<Color> colors;
    std::string note;

    [[nodiscard]] std::string to_string() const
    {
        std::ostringstream out;
        auto list = [&](const auto& xs, auto fmt) {
            for (std::size_t i = 0; i < xs.size(); ++i)
                out << (i ? "," : "") << fmt(xs[i]);
        };
        auto vtx = [](Vertex v) { return std::to_string(v); };
        auto edge_str = [](const Edge& e) { return rsat::to_string(e); };
        auto col = [](Color c) { return std::to_string(c); };
        if (property)
            out << 'P' << property << '/';
        switch (kind) {
        case Kind::none:
            break;
        case Kind::clique:
            out << "clique:";
            list(vertices, vtx);
            break;
        case Kind::embedding:
            out << "embedding:";
            list(vertices, vtx);
            break;
        case Kind::nonedge:
            out << "nonedge:" << rsat::to_string(*edge);
            if (color)
                out << "/color:" << *color << (fresh_color ? "(fresh)" : "");
            break;
        case Kind::vertex:
            out << "vertex:" << vertices.front();
            break;
        case Kind::color:
            out << "color:" << *color;
            break;
        case Kind::swap:
            out << "removed:";
            list(removed, edge_str);
            out << "/added:";
            list(added, edge_str);
            break;
        case Kind::order:
            out << "order:";
            list(added, edge_str);
            out << "/colors:";
            list(colors, col);
            break;
        }
        if (!note.empty())
            out << (kind == Kind::none && !property ? "" : "/") << note;
        return out.str();
    }
};

struct VerificationReport {
    bool holds = false;
    Witness witness;

    explicit operator bool() const { return holds; }

    static VerificationReport success(std::string note = {})
    {
        VerificationReport r;
        r.holds = true;
        r.witness.note = std::move(note);
        return r;
    }

    static VerificationReport failure(Witness w)
    {
        VerificationReport r;
        r.holds = false;
        r.witness = std::move(w);
        return r;
    }
};

} // namespace rsat
