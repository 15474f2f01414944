#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fallgraph/coloring.hpp"
#include "fallgraph/graph.hpp"
#include "fallgraph/solvers.hpp"

namespace fallgraph {

enum class OracleKind { exists, not_exists, optimum };

struct OracleResult {
    OracleKind kind = OracleKind::not_exists;
    std::optional<Coloring> witness_coloring;
    std::optional<std::vector<int>> witness_set;
    std::optional<int> value;
    long nodes_explored = 0;
};

/// Exhaustive search for a distance-d fall k-coloring. DFS over partial
/// assignments in vertex order, with properness checks against earlier
/// vertices, first occurrences of new colors forced ascending (symmetry
/// pruning), and a dead-end cut once some vertex's fully assigned ball lacks
/// a color. Throws CapError when node_cap attempts are exhausted.
OracleResult exists_distance_fall(const Graph& g, int k, int d, long node_cap = kDefaultNodeCap);

/// Exact minimum independent distance-kdist dominating set, searching
/// independent sets in ascending size (lexicographic within a size) with
/// ball-coverage pruning. A maximal independent set always dominates, so an
/// optimum exists for every kdist >= 1.
OracleResult min_independent_distance_dominating(const Graph& g, int kdist,
                                                 long node_cap = kDefaultNodeCap);

enum class InstanceKind { labeled_connected_graphs, labeled_trees };

/// Streams every labeled instance exactly once in a deterministic order:
/// connected graphs (n <= 7) by ascending edge-subset bitmask over the
/// lexicographic pair list, trees (n <= 8) by ascending Prüfer sequence.
/// Return false from visit to stop early.
void enumerate_instances(InstanceKind kind, int n,
                         const std::function<bool(const Graph&)>& visit);

} // namespace fallgraph
