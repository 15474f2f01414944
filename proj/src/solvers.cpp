#include "fallgraph/solvers.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "fallgraph/errors.hpp"
#include "fallgraph/io.hpp"

namespace fallgraph {

namespace {

// Reverse removal order of repeated minimum-degree deletion (smallest id on
// ties), so each vertex sees as many already-colored neighbors as possible.
std::vector<int> degeneracy_order(const Graph& g) {
    int n = g.order();
    std::vector<int> deg(n), removal;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v)
        deg[v] = g.degree(v);
    removal.reserve(n);
    for (int round = 0; round < n; ++round) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best]))
                best = v;
        removed[best] = 1;
        removal.push_back(best);
        for (int w : g.neighbors(best))
            if (!removed[w])
                --deg[w];
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
}

[[noreturn]] void proof_violation(const std::string& what, const Graph& g, const Coloring& c,
                                  const RepairTrace& trace) {
    std::ostringstream msg;
    msg << "PROOF_VIOLATION: " << what << "\ngraph:\n"
        << serialize_graph(g) << "coloring:\n"
        << serialize_coloring(c) << "trace: " << trace.to_string();
    throw ProofViolation(msg.str());
}

void require_connected_order3(const Graph& g, const char* where) {
    if (g.order() < 3)
        throw InputError(std::string(where) + ": PRECONDITION (order must be >= 3)");
    if (!structure_queries(g).is_connected)
        throw InputError(std::string(where) + ": PRECONDITION (graph must be connected)");
}

// Smallest-id degree-1 neighbor of v, or v itself. This is the recoloring
// target shared by the distance-2 repair and the partial-coloring repair.
int repair_target(const Graph& g, int v) {
    for (int w : g.neighbors(v))
        if (g.degree(w) == 1)
            return w;
    return v;
}

// The unique color absent from the closed distance-2 ball of a 2-bad vertex,
// plus the monochromatic-neighborhood check both repair procedures rely on.
int checked_missing_color(const Graph& g, const Coloring& c, const GoodnessReport& rep, int v,
                          const RepairTrace& trace) {
    if (rep.missing[v].size() != 1)
        proof_violation("2-bad vertex must miss exactly one color", g, c, trace);
    int nb_color = kUncolored;
    for (int w : g.neighbors(v)) {
        if (!c.assigned(w))
            continue;
        if (nb_color == kUncolored)
            nb_color = c.assignment[w];
        else if (c.assignment[w] != nb_color)
            proof_violation("neighborhood of a 2-bad vertex must be monochromatic", g, c, trace);
    }
    return rep.missing[v].front();
}

} // namespace

std::string RepairTrace::to_string() const {
    std::ostringstream out;
    out << "initial_bad=" << initial_bad_count;
    for (const auto& s : steps)
        out << " [v" << s.vertex << " " << s.old_color << "->" << s.new_color
            << " bad=" << s.bad_count_after << "]";
    return out.str();
}

std::optional<Coloring> find_proper_k_coloring(const Graph& g, int k, long node_budget) {
    if (k < 1)
        throw InputError("find_proper_k_coloring: k must be >= 1");
    int n = g.order();
    std::vector<int> order = degeneracy_order(g);
    std::vector<int> color(n, kUncolored);
    long nodes = 0;

    std::function<bool(int, int)> assign = [&](int idx, int used) -> bool {
        if (idx == n)
            return true;
        int v = order[idx];
        int max_color = std::min(k - 1, used); // color == used opens a new color
        for (int c = 0; c <= max_color; ++c) {
            if (++nodes > node_budget)
                throw CapError("find_proper_k_coloring: BUDGET_EXCEEDED (search inconclusive)");
            bool clash = false;
            for (int w : g.neighbors(v))
                if (color[w] == c) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            color[v] = c;
            if (assign(idx + 1, std::max(used, c + 1)))
                return true;
            color[v] = kUncolored;
        }
        return false;
    };

    if (!assign(0, 0))
        return std::nullopt;
    return Coloring(k, std::move(color));
}

std::pair<Coloring, RepairTrace> repair_distance2_fall(const Graph& g, const Coloring& c0) {
    require_connected_order3(g, "repair_distance2_fall");
    if (c0.k != 3)
        throw InputError("repair_distance2_fall: PRECONDITION (palette must be 3)");
    if (c0.size() != g.order() || !c0.total())
        throw InputError("repair_distance2_fall: PRECONDITION (coloring must be total)");
    if (!is_proper(g, c0))
        throw InputError("repair_distance2_fall: PRECONDITION (coloring must be proper)");

    Coloring c = c0;
    RepairTrace trace;
    GoodnessReport rep = goodness(g, c, 2);
    trace.initial_bad_count = rep.bad_count;
    while (rep.bad_count > 0) {
        if (static_cast<int>(trace.steps.size()) >= g.order())
            proof_violation("repair did not terminate within n steps", g, c, trace);
        int v = rep.bad_vertices.front();
        int mu = checked_missing_color(g, c, rep, v, trace);
        int target = repair_target(g, v);
        RepairStep step{target, c.assignment[target], mu, 0};
        c.assignment[target] = mu;
        if (!is_proper(g, c))
            proof_violation("recoloring broke properness", g, c, trace);
        GoodnessReport next = goodness(g, c, 2);
        if (next.bad_count >= rep.bad_count)
            proof_violation("2-bad vertex count did not strictly decrease", g, c, trace);
        step.bad_count_after = next.bad_count;
        trace.steps.push_back(step);
        rep = std::move(next);
    }
    return {std::move(c), std::move(trace)};
}

std::pair<Coloring, RepairTrace> distance2_fall_3coloring(const Graph& g, long node_budget) {
    require_connected_order3(g, "distance2_fall_3coloring");
    auto seed = find_proper_k_coloring(g, 3, node_budget);
    if (!seed)
        throw InputError("distance2_fall_3coloring: NOT_3_COLORABLE");
    auto [c, trace] = repair_distance2_fall(g, *seed);
    if (!is_distance_fall(g, c, 2))
        proof_violation("result is not distance-2 fall", g, c, trace);
    return {std::move(c), std::move(trace)};
}

Coloring tree_k_coloring(const Graph& tree, int k) {
    auto s = structure_queries(tree);
    if (!s.is_tree)
        throw InputError("tree_k_coloring: NOT_A_TREE");
    if (k < 2)
        throw InputError("tree_k_coloring: PRECONDITION (k must be >= 2)");
    int n = tree.order();
    if (n < k)
        throw InputError("tree_k_coloring: ORDER_TOO_SMALL (need n >= k)");

    std::vector<int> color(n, kUncolored);
    int d = *s.diameter;
    if (d >= k) {
        // Color every vertex by its mirror position on the diametral path:
        // path vertex v_i keeps i mod k, an off-path vertex at distance j
        // from its side's anchor copies the path vertex j steps outward from
        // the central edge.
        auto dec = diametral_decomposition(tree);
        int m = dec.central_index;
        for (int v = 0; v < n; ++v) {
            int pos = dec.side[v] == Side::U ? m - dec.anchor_distance[v]
                                             : m + 1 + dec.anchor_distance[v];
            color[v] = pos % k;
        }
    } else {
        // Diameter below k: any proper coloring using all k colors works.
        // DFS preorder from vertex 0, first k vertices get fresh colors.
        std::vector<int> stack{0};
        std::vector<int> parent(n, -1);
        std::vector<char> seen(n, 0);
        seen[0] = 1;
        int preorder = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            color[v] = preorder < k ? preorder : (color[parent[v]] + 1) % k;
            ++preorder;
            const auto& nb = tree.neighbors(v);
            for (auto it = nb.rbegin(); it != nb.rend(); ++it)
                if (!seen[*it]) {
                    seen[*it] = 1;
                    parent[*it] = v;
                    stack.push_back(*it);
                }
        }
    }

    Coloring c(k, std::move(color));
    if (!is_proper(tree, c) || goodness(tree, c, k - 1).bad_count != 0)
        proof_violation("tree coloring is not distance-(k-1) fall", tree, c, RepairTrace{});
    return c;
}

std::vector<int> tree_idd_witness(const Graph& tree, int kdist) {
    if (kdist < 1)
        throw InputError("tree_idd_witness: PRECONDITION (kdist must be >= 1)");
    int k = kdist + 1;
    Coloring c = tree_k_coloring(tree, k);
    auto classes = color_classes(c);
    size_t best = 0;
    for (size_t i = 1; i < classes.size(); ++i)
        if (classes[i].size() < classes[best].size())
            best = i;
    const auto& witness = classes[best];
    int bound = tree.order() / k;
    if (static_cast<int>(witness.size()) > bound ||
        !is_independent_distance_dominating(tree, witness, kdist))
        proof_violation("smallest color class is not an independent distance-k dominating set "
                        "within n/(k+1)",
                        tree, c, RepairTrace{});
    return witness;
}

Coloring partial_3coloring_distance3(const Graph& g) {
    require_connected_order3(g, "partial_3coloring_distance3");
    int n = g.order();
    const auto& dm = g.distances();
    Coloring c = Coloring::all_uncolored(n, 3);
    RepairTrace trace; // recoloring steps only; extensions tracked separately

    auto smallest_free_color = [&](int v) -> int {
        bool used[3] = {false, false, false};
        for (int w : g.neighbors(v))
            if (c.assigned(w))
                used[c.assignment[w]] = true;
        for (int color = 0; color < 3; ++color)
            if (!used[color])
                return color;
        return kUncolored;
    };

    auto ball2_colored = [&](int v) {
        for (int u = 0; u < n; ++u) {
            int d = dm.dist(v, u);
            if (d != kUnreachable && d <= 2 && !c.assigned(u))
                return false;
        }
        return true;
    };

    // Colored 2-bad vertices whose closed distance-2 ball is fully colored;
    // the second component of the lexicographic potential.
    auto repairable = [&](const GoodnessReport& rep) {
        std::vector<int> out;
        for (int v : rep.bad_vertices)
            if (c.assigned(v) && ball2_colored(v))
                out.push_back(v);
        return out;
    };

    long colored_count = 0;
    const long step_cap = static_cast<long>(n) * (n + 2);
    for (long iter = 0;; ++iter) {
        if (iter > step_cap)
            proof_violation("local search exceeded its step cap", g, c, trace);

        int extend = -1;
        for (int v = 0; v < n && extend == -1; ++v)
            if (!c.assigned(v) && smallest_free_color(v) != kUncolored)
                extend = v;
        if (extend != -1) {
            c.assignment[extend] = smallest_free_color(extend);
            ++colored_count; // first potential component strictly increases
            continue;
        }

        GoodnessReport rep = goodness_partial(g, c, 2);
        auto candidates = repairable(rep);
        if (candidates.empty())
            break;
        int v = candidates.front();
        int mu = checked_missing_color(g, c, rep, v, trace);
        int target = repair_target(g, v);
        RepairStep step{target, c.assignment[target], mu, 0};
        c.assignment[target] = mu;
        if (!is_proper(g, c))
            proof_violation("recoloring broke properness", g, c, trace);
        auto after = repairable(goodness_partial(g, c, 2));
        if (after.size() >= candidates.size())
            proof_violation("repairable 2-bad count did not strictly decrease", g, c, trace);
        step.bad_count_after = static_cast<int>(after.size());
        trace.steps.push_back(step);
    }

    if (!is_proper(g, c))
        proof_violation("final partial coloring is improper", g, c, trace);
    for (int v = 0; v < n; ++v)
        if (!c.assigned(v) && smallest_free_color(v) != kUncolored)
            proof_violation("uncolored vertex is not blocked", g, c, trace);
    if (goodness_partial(g, c, 3).bad_count != 0)
        proof_violation("some vertex is 3-bad in the final partial coloring", g, c, trace);
    return c;
}

} // namespace fallgraph
