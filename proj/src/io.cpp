#include "fallgraph/io.hpp"

#include <istream>
#include <sstream>

#include "fallgraph/errors.hpp"

namespace fallgraph {

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
    throw InputError("parse error: " + what);
}

// Next non-comment, non-blank line; false at end of input.
bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        return true;
    }
    return false;
}

bool parse_int(std::istream& in, int& out) { return static_cast<bool>(in >> out); }

} // namespace

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line))
        parse_fail("missing graph header line \"n m\"");
    int n = 0, m = 0;
    {
        std::istringstream hdr(line);
        if (!parse_int(hdr, n) || !parse_int(hdr, m))
            parse_fail("bad graph header line: " + line);
        std::string rest;
        if (hdr >> rest)
            parse_fail("trailing tokens on graph header line: " + line);
    }
    if (n < 0 || m < 0)
        parse_fail("negative counts in graph header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            parse_fail("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        std::istringstream row(line);
        int u = 0, v = 0;
        if (!parse_int(row, u) || !parse_int(row, v))
            parse_fail("bad edge line: " + line);
        std::string rest;
        if (row >> rest)
            parse_fail("trailing tokens on edge line: " + line);
        if (!(0 <= u && u < v && v < n))
            parse_fail("edge line must satisfy 0 <= u < v < n: " + line);
        edges.emplace_back(u, v);
    }
    if (next_data_line(in, line))
        parse_fail("unexpected extra line after edges: " + line);
    return Graph(n, edges);
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

std::string serialize_coloring(const Coloring& c) {
    std::ostringstream out;
    out << c.size() << ' ' << c.k << '\n';
    for (int v = 0; v < c.size(); ++v) {
        out << v << ' ';
        if (c.assigned(v))
            out << c.assignment[v];
        else
            out << '-';
        out << '\n';
    }
    return out.str();
}

Coloring parse_coloring(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line))
        parse_fail("missing coloring header line \"n k\"");
    int n = 0, k = 0;
    {
        std::istringstream hdr(line);
        if (!parse_int(hdr, n) || !parse_int(hdr, k))
            parse_fail("bad coloring header line: " + line);
        std::string rest;
        if (hdr >> rest)
            parse_fail("trailing tokens on coloring header line: " + line);
    }
    if (n < 0 || k < 0)
        parse_fail("negative counts in coloring header");
    std::vector<int> assignment(n, kUncolored);
    for (int i = 0; i < n; ++i) {
        if (!next_data_line(in, line))
            parse_fail("expected " + std::to_string(n) + " vertex lines, found " +
                       std::to_string(i));
        std::istringstream row(line);
        int v = 0;
        std::string token;
        if (!parse_int(row, v) || !(row >> token))
            parse_fail("bad coloring line: " + line);
        std::string rest;
        if (row >> rest)
            parse_fail("trailing tokens on coloring line: " + line);
        if (v != i)
            parse_fail("vertex lines must appear in order 0..n-1, got: " + line);
        if (token == "-")
            continue;
        try {
            size_t used = 0;
            int color = std::stoi(token, &used);
            if (used != token.size())
                parse_fail("bad color token: " + token);
            if (color < 0 || color >= k)
                parse_fail("color outside palette on line: " + line);
            assignment[v] = color;
        } catch (const std::logic_error&) {
            parse_fail("bad color token: " + token);
        }
    }
    if (next_data_line(in, line))
        parse_fail("unexpected extra line after coloring: " + line);
    return Coloring(k, std::move(assignment));
}

Coloring parse_coloring_text(const std::string& text) {
    std::istringstream in(text);
    return parse_coloring(in);
}

} // namespace fallgraph
