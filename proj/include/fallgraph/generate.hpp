#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fallgraph/graph.hpp"

namespace fallgraph {

enum class Family {
    path,
    cycle,
    complete,
    star,
    petersen,
    path_complete,
    random_tree,
    random_tripartite_connected,
};

std::optional<Family> family_from_name(std::string_view name);
std::string family_name(Family family);

struct GenParams {
    int n = 0;
    int clique = 0; // path_complete
    int tail = 0;   // path_complete
    double edge_probability = 0.0; // random_tripartite_connected
    std::optional<std::uint64_t> seed; // required for random families
};

/// Deterministic dispatcher over the named families; throws InputError
/// (BAD_PARAMS) on invalid parameters or a missing seed.
Graph generate(Family family, const GenParams& params);

Graph make_path(int n);     // n >= 1
Graph make_cycle(int n);    // n >= 3
Graph make_complete(int n); // n >= 1
Graph make_star(int n);     // n >= 2 vertices total, center 0
Graph make_petersen();

/// K_c plus a path on t vertices, one path endpoint joined to clique vertex 0.
/// Clique is 0..c-1, path is c..c+t-1, joining edge (0, c).
Graph make_path_complete(int clique, int tail);

/// Uniform labeled tree via a random Prüfer sequence.
Graph random_tree(int n, std::uint64_t seed);

/// Random connected graph whose edges all join two of the three classes
/// {v : v mod 3 == i}; a random spanning tree guarantees connectivity and
/// each remaining cross-class pair is added with probability p.
Graph random_tripartite_connected(int n, double p, std::uint64_t seed);

/// Decode a Prüfer sequence over {0..n-1} (length n-2) into a labeled tree.
Graph prufer_decode(int n, const std::vector<int>& seq);

} // namespace fallgraph
