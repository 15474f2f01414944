#pragma once

#include <map>
#include <string>
#include <vector>

#include "fallgraph/solvers.hpp"

namespace fallgraph {

/// Outcome of an exhaustive theorem sweep. Failure lines carry a reason tag
/// and a one-line serialization of the offending instance; the stored list is
/// capped but the counts are exact.
struct SweepReport {
    long checked = 0;
    long failed = 0;
    std::map<std::string, long> failures_by_reason;
    std::vector<std::string> failure_lines;
    size_t max_failure_lines = 200;

    void fail(const std::string& reason, const std::string& instance);
    std::string summary_line() const; // "checked=N failed=M"
};

/// One-line graph serialization used in failure lines: "n=N m=M edges=u-v;..".
std::string describe_graph(const Graph& g);

/// Every connected 3-colorable labeled graph with 3 <= n <= max_n gets a
/// verified distance-2 fall 3-coloring with a strictly decreasing repair
/// trace, and its smallest color class is an independent distance-2
/// dominating set of size at most n/3. Reasons tagged class_* belong to the
/// n/3 corollary, the rest to the repair theorem.
SweepReport sweep_theorem1(int max_n, long node_budget = kDefaultNodeCap);

/// Every labeled tree with 2 <= n <= max_n and every palette 2 <= k <= n:
/// tree_k_coloring output is proper, uses palette k, and has zero (k-1)-bad
/// vertices. Checked instances are (tree, k) pairs.
SweepReport sweep_theorem2(int max_n);

/// Independent distance domination bound on trees: for every labeled tree
/// n <= max_n and every 1 <= kdist <= n-1, the exact oracle optimum is at
/// most floor(n/(kdist+1)) and tree_idd_witness returns a verified set within
/// the same bound. Checked instances are (tree, kdist) pairs.
SweepReport sweep_conjecture(int max_n, long node_cap = kDefaultNodeCap);

/// Every connected labeled graph with 3 <= n <= max_n gets a partial proper
/// 3-coloring with every vertex 3-good and every uncolored vertex blocked.
SweepReport sweep_theorem3(int max_n);

} // namespace fallgraph
