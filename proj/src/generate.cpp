#include "fallgraph/generate.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>

#include "fallgraph/errors.hpp"

namespace fallgraph {

namespace {

[[noreturn]] void bad_params(const std::string& what) {
    throw InputError("BAD_PARAMS: " + what);
}

// Unbiased draw in [0, bound); mt19937_64 output is standardized, so results
// are stable across platforms (std::uniform_int_distribution is not).
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - bound + 1;
    limit -= limit % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit || limit == 0)
            return x % bound;
    }
}

double next_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "star") return Family::star;
    if (name == "petersen") return Family::petersen;
    if (name == "path_complete") return Family::path_complete;
    if (name == "random_tree") return Family::random_tree;
    if (name == "random_tripartite_connected") return Family::random_tripartite_connected;
    return std::nullopt;
}

std::string family_name(Family family) {
    switch (family) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::petersen: return "petersen";
    case Family::path_complete: return "path_complete";
    case Family::random_tree: return "random_tree";
    case Family::random_tripartite_connected: return "random_tripartite_connected";
    }
    return "?";
}

Graph make_path(int n) {
    if (n < 1)
        bad_params("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph make_cycle(int n) {
    if (n < 3)
        bad_params("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph make_complete(int n) {
    if (n < 1)
        bad_params("complete needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph make_star(int n) {
    if (n < 2)
        bad_params("star needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(0, v);
    return Graph(n, edges);
}

Graph make_petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5); // outer cycle
        edges.emplace_back(i, i + 5);       // spoke
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return Graph(10, edges);
}

Graph make_path_complete(int clique, int tail) {
    if (clique < 1 || tail < 1)
        bad_params("path_complete needs clique >= 1 and tail >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < clique; ++u)
        for (int v = u + 1; v < clique; ++v)
            edges.emplace_back(u, v);
    edges.emplace_back(0, clique);
    for (int v = clique; v + 1 < clique + tail; ++v)
        edges.emplace_back(v, v + 1);
    return Graph(clique + tail, edges);
}

Graph prufer_decode(int n, const std::vector<int>& seq) {
    if (n < 1)
        bad_params("prufer_decode needs n >= 1");
    if (n == 1) {
        if (!seq.empty())
            bad_params("prufer_decode: sequence must be empty for n=1");
        return Graph(1, {});
    }
    if (static_cast<int>(seq.size()) != n - 2)
        bad_params("prufer_decode: sequence length must be n-2");
    std::vector<int> degree(n, 1);
    for (int s : seq) {
        if (s < 0 || s >= n)
            bad_params("prufer_decode: sequence entry out of range");
        ++degree[s];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1)
            leaves.push(v);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int s : seq) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        if (--degree[s] == 1)
            leaves.push(s);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return Graph(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1)
        bad_params("random_tree needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<int> seq;
    for (int i = 0; i + 2 < n; ++i)
        seq.push_back(static_cast<int>(next_below(rng, n)));
    return prufer_decode(n, seq);
}

Graph random_tripartite_connected(int n, double p, std::uint64_t seed) {
    if (n < 1)
        bad_params("random_tripartite_connected needs n >= 1");
    if (p < 0.0 || p > 1.0)
        bad_params("random_tripartite_connected needs 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    auto cls = [](int v) { return v % 3; };
    std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
    std::vector<std::pair<int, int>> edges;
    auto add = [&](int u, int v) {
        present[u][v] = present[v][u] = 1;
        edges.emplace_back(std::min(u, v), std::max(u, v));
    };
    // Spanning tree: each vertex attaches to a random earlier vertex of a
    // different class (one always exists since classes interleave).
    for (int v = 1; v < n; ++v) {
        std::vector<int> candidates;
        for (int u = 0; u < v; ++u)
            if (cls(u) != cls(v))
                candidates.push_back(u);
        add(candidates[next_below(rng, candidates.size())], v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (cls(u) == cls(v) || present[u][v])
                continue;
            if (next_unit(rng) < p)
                add(u, v);
        }
    return Graph(n, edges);
}

Graph generate(Family family, const GenParams& params) {
    switch (family) {
    case Family::path: return make_path(params.n);
    case Family::cycle: return make_cycle(params.n);
    case Family::complete: return make_complete(params.n);
    case Family::star: return make_star(params.n);
    case Family::petersen: return make_petersen();
    case Family::path_complete: return make_path_complete(params.clique, params.tail);
    case Family::random_tree:
        if (!params.seed)
            bad_params("random_tree requires a seed");
        return random_tree(params.n, *params.seed);
    case Family::random_tripartite_connected:
        if (!params.seed)
            bad_params("random_tripartite_connected requires a seed");
        return random_tripartite_connected(params.n, params.edge_probability, *params.seed);
    }
    bad_params("unknown family");
}

} // namespace fallgraph
