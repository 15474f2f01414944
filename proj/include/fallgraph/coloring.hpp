#pragma once

#include <vector>

#include "fallgraph/graph.hpp"

namespace fallgraph {

/// Assignment value for vertices a partial coloring leaves uncolored.
inline constexpr int kUncolored = -1;

/// Total or partial assignment of vertices to colors 0..k-1. The palette size
/// k is carried explicitly so "color never used" is detectable.
struct Coloring {
    int k = 0;
    std::vector<int> assignment;

    Coloring() = default;
    Coloring(int k, std::vector<int> assignment); // validates entries

    static Coloring all_uncolored(int n, int k);

    int size() const { return static_cast<int>(assignment.size()); }
    bool assigned(int v) const { return assignment[v] != kUncolored; }
    bool total() const;

    bool operator==(const Coloring& other) const {
        return k == other.k && assignment == other.assignment;
    }
};

/// Per-vertex diagnosis of which colors are absent from the closed
/// distance-d ball. A vertex is d-bad iff its missing set is non-empty.
struct GoodnessReport {
    int d = 0;
    std::vector<std::vector<int>> missing; // per vertex, ascending
    std::vector<int> bad_vertices;         // ascending
    int bad_count = 0;
};

/// True iff no edge joins two vertices assigned the same color. Uncolored
/// endpoints never conflict.
bool is_proper(const Graph& g, const Coloring& c);

/// Missing colors within distance d of each vertex; requires a total coloring.
GoodnessReport goodness(const Graph& g, const Coloring& c, int d);

/// As goodness, but defined for partial colorings: every vertex (colored or
/// not) needs all k colors nearby, and only colored vertices represent colors.
/// Coincides with goodness on total colorings.
GoodnessReport goodness_partial(const Graph& g, const Coloring& c, int d);

/// Proper and no d-bad vertex. For partial colorings properness is checked on
/// colored pairs only and goodness_partial supplies the ball check.
bool is_distance_fall(const Graph& g, const Coloring& c, int d);

/// The k color classes; uncolored vertices belong to none.
std::vector<std::vector<int>> color_classes(const Coloring& c);

/// True iff no two members of s are adjacent and every vertex of g is within
/// distance kdist of some member.
bool is_independent_distance_dominating(const Graph& g, const std::vector<int>& s, int kdist);

} // namespace fallgraph
