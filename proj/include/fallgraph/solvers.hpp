#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fallgraph/coloring.hpp"
#include "fallgraph/graph.hpp"

namespace fallgraph {

/// Default node budget for exhaustive searches (overridable per call).
inline constexpr long kDefaultNodeCap = 100'000'000;

struct RepairStep {
    int vertex = 0;
    int old_color = 0;
    int new_color = 0;
    int bad_count_after = 0;
};

/// Ordered log of recoloring steps. The 2-bad vertex count after each step is
/// recorded and must strictly decrease; that is the termination monovariant,
/// asserted at runtime.
struct RepairTrace {
    int initial_bad_count = 0;
    std::vector<RepairStep> steps;

    std::string to_string() const;
};

/// Backtracking search for a total proper k-coloring. Vertices are tried in
/// degeneracy order with colors ascending and first occurrences of new colors
/// forced in ascending order, so the result is deterministic. Returns nullopt
/// only when exhaustive search proves no proper k-coloring exists; throws
/// CapError if the node budget runs out first (inconclusive).
std::optional<Coloring> find_proper_k_coloring(const Graph& g, int k,
                                               long node_budget = kDefaultNodeCap);

/// Turns a total proper 3-coloring of a connected graph (n >= 3) into one
/// with zero 2-bad vertices. While a 2-bad vertex exists, the smallest-id one
/// is fixed: its unique missing color goes to a degree-1 neighbor if there is
/// one, otherwise to the vertex itself. Each step must strictly shrink the
/// set of 2-bad vertices; violations throw ProofViolation with the trace.
std::pair<Coloring, RepairTrace> repair_distance2_fall(const Graph& g, const Coloring& c0);

/// find_proper_k_coloring(g, 3) followed by repair_distance2_fall; the result
/// is verified distance-2 fall before returning. Throws InputError
/// (NOT_3_COLORABLE) when the search proves no proper 3-coloring exists.
std::pair<Coloring, RepairTrace> distance2_fall_3coloring(const Graph& g,
                                                          long node_budget = kDefaultNodeCap);

/// Proper k-coloring of a tree with n >= k in which every vertex has every
/// color within distance k-1, built from a diametral decomposition (or DFS
/// preorder when the diameter is below k). Verified before returning.
Coloring tree_k_coloring(const Graph& tree, int k);

/// Smallest color class of tree_k_coloring(tree, kdist+1): an independent
/// distance-kdist dominating set of size at most floor(n/(kdist+1)).
std::vector<int> tree_idd_witness(const Graph& tree, int kdist);

/// Partial proper 3-coloring of a connected graph (n >= 3) in which every
/// uncolored vertex has all three colors among its neighbors and every vertex
/// has all three colors within distance 3. Local search: greedily color
/// vertices while any has a free color, then repair the smallest-id colored
/// 2-bad vertex whose closed distance-2 ball is fully colored, repeating
/// until neither step applies. Verified before returning.
Coloring partial_3coloring_distance3(const Graph& g);

} // namespace fallgraph
