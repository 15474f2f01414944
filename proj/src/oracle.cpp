#include "fallgraph/oracle.hpp"

#include <algorithm>
#include <string>

#include "fallgraph/errors.hpp"
#include "fallgraph/generate.hpp"

namespace fallgraph {

namespace {

[[noreturn]] void cap_exceeded(const char* where) {
    throw CapError(std::string(where) + ": CAP_EXCEEDED");
}

} // namespace

OracleResult exists_distance_fall(const Graph& g, int k, int d, long node_cap) {
    if (k < 1)
        throw InputError("exists_distance_fall: k must be >= 1");
    if (d < 0)
        throw InputError("exists_distance_fall: d must be >= 0");
    int n = g.order();
    OracleResult result;
    if (n == 0) {
        result.kind = OracleKind::exists;
        result.witness_coloring = Coloring(k, {});
        return result;
    }
    if (k > 31)
        cap_exceeded("exists_distance_fall (palette above bitmask width)");
    const unsigned full_palette = (1u << k) - 1;

    const auto& dm = g.distances();
    // ball[v]: vertices within distance d; last_ball_of[i]: the balls whose
    // final member (largest id) is i, complete once vertex i is assigned.
    std::vector<std::vector<int>> ball(n), last_ball_of(n);
    for (int v = 0; v < n; ++v) {
        int last = v;
        for (int u = 0; u < n; ++u) {
            int duv = dm.dist(v, u);
            if (duv != kUnreachable && duv <= d) {
                ball[v].push_back(u);
                last = std::max(last, u);
            }
        }
        last_ball_of[last].push_back(v);
    }

    std::vector<int> color(n, kUncolored);
    long nodes = 0;

    std::function<bool(int, int)> assign = [&](int v, int used) -> bool {
        if (v == n)
            return true;
        int max_color = std::min(k - 1, used);
        for (int c = 0; c <= max_color; ++c) {
            if (++nodes > node_cap)
                cap_exceeded("exists_distance_fall");
            bool ok = true;
            for (int w : g.neighbors(v))
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            color[v] = c;
            // Any ball completed by this assignment must already contain all
            // k colors; it can never gain one later.
            for (int b : last_ball_of[v]) {
                unsigned present = 0;
                for (int u : ball[b])
                    present |= 1u << color[u];
                if (present != full_palette) {
                    ok = false;
                    break;
                }
            }
            if (ok && assign(v + 1, std::max(used, c + 1)))
                return true;
            color[v] = kUncolored;
        }
        return false;
    };

    if (assign(0, 0)) {
        result.kind = OracleKind::exists;
        result.witness_coloring = Coloring(k, color);
        result.nodes_explored = nodes;
        if (!is_distance_fall(g, *result.witness_coloring, d))
            throw ProofViolation("exists_distance_fall: witness failed re-verification");
        return result;
    }
    result.kind = OracleKind::not_exists;
    result.nodes_explored = nodes;
    return result;
}

OracleResult min_independent_distance_dominating(const Graph& g, int kdist, long node_cap) {
    if (kdist < 1)
        throw InputError("min_independent_distance_dominating: kdist must be >= 1");
    int n = g.order();
    if (n > 62)
        cap_exceeded("min_independent_distance_dominating (order above bitmask width)");
    OracleResult result;
    if (n == 0) {
        result.kind = OracleKind::optimum;
        result.witness_set = std::vector<int>{};
        result.value = 0;
        return result;
    }

    const auto& dm = g.distances();
    using Mask = unsigned long long;
    const Mask all = (1ull << n) - 1;
    std::vector<Mask> ball(n, 0), adj(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int u = 0; u < n; ++u) {
            int duv = dm.dist(v, u);
            if (duv != kUnreachable && duv <= kdist)
                ball[v] |= 1ull << u;
        }
        for (int w : g.neighbors(v))
            adj[v] |= 1ull << w;
    }
    // suffix_cover[i]: union of balls of candidates i..n-1.
    std::vector<Mask> suffix_cover(n + 1, 0);
    for (int v = n - 1; v >= 0; --v)
        suffix_cover[v] = suffix_cover[v + 1] | ball[v];

    long nodes = 0;
    std::vector<int> chosen;

    std::function<bool(int, int, Mask, Mask)> extend =
        [&](int start, int remaining, Mask covered, Mask forbidden) -> bool {
        if (remaining == 0)
            return covered == all;
        if ((covered | suffix_cover[start]) != all)
            return false;
        for (int v = start; v + remaining <= n; ++v) {
            if (++nodes > node_cap)
                cap_exceeded("min_independent_distance_dominating");
            if (forbidden & (1ull << v))
                continue;
            chosen.push_back(v);
            if (extend(v + 1, remaining - 1, covered | ball[v], forbidden | adj[v]))
                return true;
            chosen.pop_back();
        }
        return false;
    };

    for (int size = 1; size <= n; ++size) {
        chosen.clear();
        if (extend(0, size, 0, 0)) {
            result.kind = OracleKind::optimum;
            result.value = size;
            result.witness_set = chosen;
            result.nodes_explored = nodes;
            if (!is_independent_distance_dominating(g, chosen, kdist))
                throw ProofViolation(
                    "min_independent_distance_dominating: witness failed re-verification");
            return result;
        }
    }
    // Unreachable for kdist >= 1: any maximal independent set dominates.
    throw ProofViolation("min_independent_distance_dominating: no independent dominating set found");
}

void enumerate_instances(InstanceKind kind, int n,
                         const std::function<bool(const Graph&)>& visit) {
    if (n < 1)
        throw InputError("enumerate_instances: n must be >= 1");
    if (kind == InstanceKind::labeled_connected_graphs) {
        if (n > 7)
            cap_exceeded("enumerate_instances(labeled_connected_graphs)");
        std::vector<std::pair<int, int>> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                pairs.emplace_back(u, v);
        const unsigned long long total = 1ull << pairs.size();
        std::vector<int> parent(n);
        std::vector<std::pair<int, int>> edges;
        std::function<int(int)> find = [&](int v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        for (unsigned long long mask = 0; mask < total; ++mask) {
            edges.clear();
            for (int v = 0; v < n; ++v)
                parent[v] = v;
            int components = n;
            for (size_t i = 0; i < pairs.size(); ++i)
                if (mask >> i & 1) {
                    edges.push_back(pairs[i]);
                    int a = find(pairs[i].first), b = find(pairs[i].second);
                    if (a != b) {
                        parent[a] = b;
                        --components;
                    }
                }
            if (components != 1)
                continue;
            if (!visit(Graph(n, edges)))
                return;
        }
    } else {
        if (n > 8)
            cap_exceeded("enumerate_instances(labeled_trees)");
        if (n <= 2) {
            visit(n == 1 ? Graph(1, {}) : Graph(2, {{0, 1}}));
            return;
        }
        std::vector<int> seq(n - 2, 0);
        for (;;) {
            if (!visit(prufer_decode(n, seq)))
                return;
            int i = n - 3;
            while (i >= 0 && seq[i] == n - 1)
                seq[i--] = 0;
            if (i < 0)
                return;
            ++seq[i];
        }
    }
}

} // namespace fallgraph
