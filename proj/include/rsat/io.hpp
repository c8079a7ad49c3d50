#pragma once

#include "rsat/errors.hpp"
#include "rsat/graph.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

namespace rsat {

// Line-oriented text format. '#' starts a comment line.
//   graph <n> <m>     followed by m lines "u v"   (u < v)
//   ecg <n> <m>       followed by m lines "u v c" (u < v, c >= 0)
using AnyGraph = std::variant<Graph, ColoredGraph>;

namespace detail {

inline std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

inline long long parse_int(const std::string& tok, int line, const char* what)
{
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + tok + "'");
    return value;
}

} // namespace detail

inline AnyGraph parse(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    bool colored = false;
    long long n = 0;
    long long m = 0;
    long long seen = 0;
    Graph g;
    ColoredGraph cg;
    std::set<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        auto tok = detail::tokens(line);
        if (tok.empty() || tok.front().front() == '#')
            continue;
        if (!have_header) {
            if (tok.size() != 3 || (tok[0] != "graph" && tok[0] != "ecg"))
                throw ParseError(lineno, "malformed header, expected 'graph <n> <m>' or 'ecg <n> <m>'");
            colored = tok[0] == "ecg";
            n = detail::parse_int(tok[1], lineno, "vertex count");
            m = detail::parse_int(tok[2], lineno, "edge count");
            if (n < 0 || m < 0)
                throw ParseError(lineno, "malformed header, negative count");
            if (n > kMaxVertices)
                throw ParseError(lineno, "vertex count exceeds limit " + std::to_string(kMaxVertices));
            if (m > n * (n - 1) / 2)
                throw ParseError(lineno, "malformed header, more edges than vertex pairs");
            if (colored)
                cg = ColoredGraph(static_cast<int>(n));
            else
                g = Graph(static_cast<int>(n));
            have_header = true;
            continue;
        }
        const std::size_t want = colored ? 3 : 2;
        if (tok.size() < want)
            throw ParseError(lineno, colored ? "missing color" : "expected 'u v'");
        if (tok.size() > want)
            throw ParseError(lineno, "unexpected trailing tokens");
        if (seen == m)
            throw ParseError(lineno, "more edge lines than declared");
        const auto u = detail::parse_int(tok[0], lineno, "vertex");
        const auto v = detail::parse_int(tok[1], lineno, "vertex");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lineno, "vertex out of range");
        if (u >= v)
            throw ParseError(lineno, "edge endpoints must satisfy u < v");
        const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
        if (!edges.insert(e).second)
            throw ParseError(lineno, "duplicate edge " + to_string(e));
        if (colored) {
            const auto c = detail::parse_int(tok[2], lineno, "color");
            if (c < 0 || c > 1'000'000'000)
                throw ParseError(lineno, "color out of range");
            cg.add_edge(e, static_cast<Color>(c));
        } else {
            g.add_edge(e);
        }
        ++seen;
    }
    if (!have_header)
        throw ParseError(lineno + 1, "missing header");
    if (seen != m)
        throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edge lines, found " +
                                         std::to_string(seen));
    if (colored)
        return cg;
    return g;
}

inline std::string serialize(const Graph& g)
{
    std::ostringstream out;
    out << "graph " << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

// Colors are normalized on output.
inline std::string serialize(const ColoredGraph& x)
{
    const ColoredGraph g = x.normalized();
    std::ostringstream out;
    out << "ecg " << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << ' ' << g.color(e) << '\n';
    return out.str();
}

inline std::string serialize(const AnyGraph& x)
{
    return std::visit([](const auto& g) { return serialize(g); }, x);
}

inline Graph underlying(const AnyGraph& x)
{
    if (const auto* g = std::get_if<Graph>(&x))
        return *g;
    return std::get<ColoredGraph>(x).graph();
}

// Uncolored input is read as its rainbow coloring.
inline ColoredGraph as_colored(const AnyGraph& x)
{
    if (const auto* g = std::get_if<ColoredGraph>(&x))
        return *g;
    return ColoredGraph::rainbow(std::get<Graph>(x));
}

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out)
        throw std::runtime_error("write failed for '" + path + "'");
}

inline AnyGraph read_graph_file(const std::string& path) { return parse(read_text_file(path)); }

} // namespace rsat
