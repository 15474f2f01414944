#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace fallgraph {

/// Marker for "no path" entries in DistanceMatrix.
inline constexpr int kUnreachable = -1;

/// Default cap on constructed instance sizes (vertex count), a resource guard
/// for products and enumeration.
inline constexpr int kDefaultSizeCap = 4096;

class Graph;

/// Exact hop distances between all vertex pairs, one BFS per source.
class DistanceMatrix {
public:
    explicit DistanceMatrix(const Graph& g);

    int order() const { return n_; }
    int dist(int u, int v) const;
    bool reachable(int u, int v) const { return dist(u, v) != kUnreachable; }

    /// Max distance from v, kUnreachable if some vertex is out of reach.
    int eccentricity(int v) const;
    /// Max eccentricity; kUnreachable if the graph is disconnected, 0 for K1.
    int diameter() const;

private:
    int n_ = 0;
    std::vector<int> d_;
};

/// Immutable simple undirected graph on vertices 0..n-1. Adjacency lists are
/// kept sorted. All-pairs distances are computed once on first use and shared
/// between copies; concurrent reads are safe.
class Graph {
public:
    Graph();
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const { return edge_count_; }
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;
    bool adjacent(int u, int v) const;

    /// Edge list sorted lexicographically, u < v in each pair.
    std::vector<std::pair<int, int>> edges() const;

    /// Cached all-pairs distances (built lazily, thread-safe).
    const DistanceMatrix& distances() const;

    bool operator==(const Graph& other) const;
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    struct DistanceCache;
    std::shared_ptr<DistanceCache> cache_;
};

/// Fresh (uncached) all-pairs BFS.
DistanceMatrix all_pairs_distances(const Graph& g);

struct StructureReport {
    bool is_connected = false;
    bool is_tree = false;
    std::optional<int> diameter; // empty when disconnected
};

StructureReport structure_queries(const Graph& g);

enum class Side : unsigned char { U, V };

/// A diametral path v_0..v_d of a tree together with the split along a fixed
/// central edge e = (v_m, v_{m+1}), m = ceil(d/2) - 1. Every vertex is tagged
/// with its component of T - e and its distance to that side's anchor
/// (path[m] for side U, path[m+1] for side V).
struct DiametralDecomposition {
    std::vector<int> path;
    int central_index = 0; // m
    std::pair<int, int> central_edge{0, 0};
    std::vector<Side> side;
    std::vector<int> anchor_distance;
};

/// Requires a tree with at least 2 vertices. The path endpoints come from a
/// double BFS with smallest-id tie-breaking; the path is oriented from its
/// smaller endpoint so outputs are reproducible.
DiametralDecomposition diametral_decomposition(const Graph& tree);

/// Cartesian product: vertex (g,h) is numbered g*|H|+h; (g,h)~(g',h') iff
/// the pairs agree in one coordinate and are adjacent in the other.
Graph cartesian_product(const Graph& g, const Graph& h, int size_cap = kDefaultSizeCap);

} // namespace fallgraph
