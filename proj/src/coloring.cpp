#include "fallgraph/coloring.hpp"

#include <algorithm>
#include <sstream>

#include "fallgraph/errors.hpp"

namespace fallgraph {

namespace {

void check_sizes(const Graph& g, const Coloring& c, const char* where) {
    if (c.size() != g.order()) {
        std::ostringstream msg;
        msg << where << ": SIZE_MISMATCH (coloring has " << c.size() << " entries, graph has "
            << g.order() << " vertices)";
        throw InputError(msg.str());
    }
}

GoodnessReport ball_report(const Graph& g, const Coloring& c, int d) {
    if (d < 0)
        throw InputError("goodness: d must be >= 0");
    const auto& dm = g.distances();
    int n = g.order();
    GoodnessReport rep;
    rep.d = d;
    rep.missing.resize(n);
    std::vector<char> seen(c.k);
    for (int v = 0; v < n; ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int u = 0; u < n; ++u) {
            int duv = dm.dist(v, u);
            if (duv != kUnreachable && duv <= d && c.assigned(u))
                seen[c.assignment[u]] = 1;
        }
        for (int color = 0; color < c.k; ++color)
            if (!seen[color])
                rep.missing[v].push_back(color);
        if (!rep.missing[v].empty())
            rep.bad_vertices.push_back(v);
    }
    rep.bad_count = static_cast<int>(rep.bad_vertices.size());
    return rep;
}

} // namespace

Coloring::Coloring(int k, std::vector<int> assignment) : k(k), assignment(std::move(assignment)) {
    if (k < 0)
        throw InputError("Coloring: negative palette size");
    for (int a : this->assignment)
        if (a != kUncolored && (a < 0 || a >= k)) {
            std::ostringstream msg;
            msg << "Coloring: color " << a << " outside palette 0.." << k - 1;
            throw InputError(msg.str());
        }
}

Coloring Coloring::all_uncolored(int n, int k) {
    return Coloring(k, std::vector<int>(n, kUncolored));
}

bool Coloring::total() const {
    return std::all_of(assignment.begin(), assignment.end(),
                       [](int a) { return a != kUncolored; });
}

bool is_proper(const Graph& g, const Coloring& c) {
    check_sizes(g, c, "is_proper");
    for (const auto& [u, v] : g.edges())
        if (c.assigned(u) && c.assigned(v) && c.assignment[u] == c.assignment[v])
            return false;
    return true;
}

GoodnessReport goodness(const Graph& g, const Coloring& c, int d) {
    check_sizes(g, c, "goodness");
    if (!c.total())
        throw InputError("goodness: coloring is not total (use goodness_partial)");
    return ball_report(g, c, d);
}

GoodnessReport goodness_partial(const Graph& g, const Coloring& c, int d) {
    check_sizes(g, c, "goodness_partial");
    return ball_report(g, c, d);
}

bool is_distance_fall(const Graph& g, const Coloring& c, int d) {
    check_sizes(g, c, "is_distance_fall");
    return is_proper(g, c) && goodness_partial(g, c, d).bad_count == 0;
}

std::vector<std::vector<int>> color_classes(const Coloring& c) {
    std::vector<std::vector<int>> classes(c.k);
    for (int v = 0; v < c.size(); ++v)
        if (c.assigned(v))
            classes[c.assignment[v]].push_back(v);
    return classes;
}

bool is_independent_distance_dominating(const Graph& g, const std::vector<int>& s, int kdist) {
    if (kdist < 0)
        throw InputError("is_independent_distance_dominating: kdist must be >= 0");
    std::vector<int> members(s);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int v : members)
        if (v < 0 || v >= g.order()) {
            std::ostringstream msg;
            msg << "is_independent_distance_dominating: OUT_OF_RANGE vertex " << v;
            throw InputError(msg.str());
        }
    for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
            if (g.adjacent(members[i], members[j]))
                return false;
    const auto& dm = g.distances();
    for (int v = 0; v < g.order(); ++v) {
        bool covered = false;
        for (int m : members) {
            int d = dm.dist(v, m);
            if (d != kUnreachable && d <= kdist) {
                covered = true;
                break;
            }
        }
        if (!covered)
            return false;
    }
    return true;
}

} // namespace fallgraph
