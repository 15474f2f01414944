#include "fallgraph/sweep.hpp"

#include <algorithm>
#include <sstream>

#include "fallgraph/errors.hpp"
#include "fallgraph/oracle.hpp"

namespace fallgraph {

void SweepReport::fail(const std::string& reason, const std::string& instance) {
    ++failed;
    ++failures_by_reason[reason];
    if (failure_lines.size() < max_failure_lines)
        failure_lines.push_back(reason + " " + instance);
}

std::string SweepReport::summary_line() const {
    std::ostringstream out;
    out << "checked=" << checked << " failed=" << failed;
    return out.str();
}

std::string describe_graph(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.order() << " m=" << g.edge_count() << " edges=";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        if (!first)
            out << ';';
        out << u << '-' << v;
        first = false;
    }
    return out.str();
}

SweepReport sweep_theorem1(int max_n, long node_budget) {
    SweepReport report;
    for (int n = 3; n <= max_n; ++n) {
        enumerate_instances(InstanceKind::labeled_connected_graphs, n, [&](const Graph& g) {
            auto seed = find_proper_k_coloring(g, 3, node_budget);
            if (!seed)
                return true; // not 3-colorable: outside the theorem
            ++report.checked;
            try {
                auto [c, trace] = repair_distance2_fall(g, *seed);
                if (!is_distance_fall(g, c, 2))
                    report.fail("not_distance2_fall", describe_graph(g));
                int bad = trace.initial_bad_count;
                for (const auto& step : trace.steps) {
                    if (step.bad_count_after >= bad) {
                        report.fail("trace_not_strictly_decreasing", describe_graph(g));
                        break;
                    }
                    bad = step.bad_count_after;
                }
                if (!trace.steps.empty() && trace.steps.back().bad_count_after != 0)
                    report.fail("trace_did_not_reach_zero", describe_graph(g));

                auto classes = color_classes(c);
                auto smallest = std::min_element(
                    classes.begin(), classes.end(),
                    [](const auto& a, const auto& b) { return a.size() < b.size(); });
                if (static_cast<int>(smallest->size()) > g.order() / 3)
                    report.fail("class_bound_exceeded", describe_graph(g));
                if (!is_independent_distance_dominating(g, *smallest, 2))
                    report.fail("class_not_idd", describe_graph(g));
            } catch (const ProofViolation&) {
                report.fail("proof_violation", describe_graph(g));
            }
            return true;
        });
    }
    return report;
}

SweepReport sweep_theorem2(int max_n) {
    SweepReport report;
    for (int n = 2; n <= max_n; ++n) {
        enumerate_instances(InstanceKind::labeled_trees, n, [&](const Graph& t) {
            for (int k = 2; k <= n; ++k) {
                ++report.checked;
                try {
                    Coloring c = tree_k_coloring(t, k);
                    if (!is_proper(t, c) || c.k != k || !c.total())
                        report.fail("improper_or_wrong_palette",
                                    describe_graph(t) + " k=" + std::to_string(k));
                    else if (goodness(t, c, k - 1).bad_count != 0)
                        report.fail("bad_vertex_within_k_minus_1",
                                    describe_graph(t) + " k=" + std::to_string(k));
                } catch (const ProofViolation&) {
                    report.fail("proof_violation", describe_graph(t) + " k=" + std::to_string(k));
                }
            }
            return true;
        });
    }
    return report;
}

SweepReport sweep_conjecture(int max_n, long node_cap) {
    SweepReport report;
    for (int n = 2; n <= max_n; ++n) {
        enumerate_instances(InstanceKind::labeled_trees, n, [&](const Graph& t) {
            for (int kdist = 1; kdist <= n - 1; ++kdist) {
                ++report.checked;
                int bound = n / (kdist + 1);
                std::string tag = describe_graph(t) + " kdist=" + std::to_string(kdist);
                try {
                    auto oracle = min_independent_distance_dominating(t, kdist, node_cap);
                    if (*oracle.value > bound)
                        report.fail("oracle_optimum_above_bound", tag);
                    auto witness = tree_idd_witness(t, kdist);
                    if (static_cast<int>(witness.size()) > bound)
                        report.fail("witness_above_bound", tag);
                    if (!is_independent_distance_dominating(t, witness, kdist))
                        report.fail("witness_not_idd", tag);
                    if (static_cast<int>(witness.size()) < *oracle.value)
                        report.fail("witness_below_optimum", tag);
                } catch (const ProofViolation&) {
                    report.fail("proof_violation", tag);
                }
            }
            return true;
        });
    }
    return report;
}

SweepReport sweep_theorem3(int max_n) {
    SweepReport report;
    for (int n = 3; n <= max_n; ++n) {
        enumerate_instances(InstanceKind::labeled_connected_graphs, n, [&](const Graph& g) {
            ++report.checked;
            try {
                Coloring c = partial_3coloring_distance3(g);
                if (!is_proper(g, c))
                    report.fail("improper", describe_graph(g));
                if (goodness_partial(g, c, 3).bad_count != 0)
                    report.fail("vertex_3bad", describe_graph(g));
                for (int v = 0; v < g.order(); ++v) {
                    if (c.assigned(v))
                        continue;
                    bool seen[3] = {false, false, false};
                    for (int w : g.neighbors(v))
                        if (c.assigned(w))
                            seen[c.assignment[w]] = true;
                    if (!(seen[0] && seen[1] && seen[2])) {
                        report.fail("uncolored_not_blocked", describe_graph(g));
                        break;
                    }
                }
            } catch (const ProofViolation&) {
                report.fail("proof_violation", describe_graph(g));
            }
            return true;
        });
    }
    return report;
}

} // namespace fallgraph
