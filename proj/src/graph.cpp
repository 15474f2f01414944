#include "fallgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>

#include "fallgraph/errors.hpp"

namespace fallgraph {

namespace {

// Single-source BFS over sorted adjacency; unreached entries stay kUnreachable.
std::vector<int> bfs_from(const Graph& g, int source) {
    std::vector<int> dist(g.order(), kUnreachable);
    std::deque<int> queue;
    dist[source] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (dist[w] == kUnreachable) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

} // namespace

struct Graph::DistanceCache {
    std::once_flag once;
    std::optional<DistanceMatrix> matrix;
};

Graph::Graph() : cache_(std::make_shared<DistanceCache>()) {}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges)
    : n_(n), cache_(std::make_shared<DistanceCache>()) {
    if (n < 0)
        throw InputError("build_graph: negative vertex count");
    adj_.resize(n);
    for (const auto& [a, b] : edges) {
        if (a == b) {
            std::ostringstream msg;
            msg << "build_graph: self-loop at vertex " << a;
            throw InputError(msg.str());
        }
        if (a < 0 || b < 0 || a >= n || b >= n) {
            std::ostringstream msg;
            msg << "build_graph: edge (" << a << "," << b << ") out of range for n=" << n;
            throw InputError(msg.str());
        }
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
            std::ostringstream msg;
            msg << "build_graph: duplicate edge at vertex " << v;
            throw InputError(msg.str());
        }
    }
    edge_count_ = static_cast<int>(edges.size());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        std::ostringstream msg;
        msg << "vertex " << v << " out of range for n=" << n_;
        throw InputError(msg.str());
    }
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

const DistanceMatrix& Graph::distances() const {
    std::call_once(cache_->once, [this] { cache_->matrix.emplace(*this); });
    return *cache_->matrix;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && adj_ == other.adj_;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
    d_.reserve(static_cast<size_t>(n_) * n_);
    for (int s = 0; s < n_; ++s) {
        auto row = bfs_from(g, s);
        d_.insert(d_.end(), row.begin(), row.end());
    }
}

int DistanceMatrix::dist(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InputError("DistanceMatrix::dist: vertex out of range");
    return d_[static_cast<size_t>(u) * n_ + v];
}

int DistanceMatrix::eccentricity(int v) const {
    if (v < 0 || v >= n_)
        throw InputError("DistanceMatrix::eccentricity: vertex out of range");
    int ecc = 0;
    for (int u = 0; u < n_; ++u) {
        int duv = d_[static_cast<size_t>(v) * n_ + u];
        if (duv == kUnreachable)
            return kUnreachable;
        ecc = std::max(ecc, duv);
    }
    return ecc;
}

int DistanceMatrix::diameter() const {
    int diam = 0;
    for (int v = 0; v < n_; ++v) {
        int ecc = eccentricity(v);
        if (ecc == kUnreachable)
            return kUnreachable;
        diam = std::max(diam, ecc);
    }
    return diam;
}

DistanceMatrix all_pairs_distances(const Graph& g) { return DistanceMatrix(g); }

StructureReport structure_queries(const Graph& g) {
    StructureReport rep;
    int n = g.order();
    if (n == 0) {
        rep.is_connected = true;
        rep.is_tree = false;
        return rep;
    }
    auto dist = bfs_from(g, 0);
    rep.is_connected =
        std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
    rep.is_tree = rep.is_connected && g.edge_count() == n - 1;
    if (rep.is_connected)
        rep.diameter = g.distances().diameter();
    return rep;
}

namespace {

// Smallest-id vertex among those farthest from source.
int farthest_vertex(const std::vector<int>& dist) {
    int best = 0;
    for (size_t v = 1; v < dist.size(); ++v)
        if (dist[v] > dist[best])
            best = static_cast<int>(v);
    return best;
}

} // namespace

DiametralDecomposition diametral_decomposition(const Graph& tree) {
    auto s = structure_queries(tree);
    if (!s.is_tree || tree.order() < 2)
        throw InputError("diametral_decomposition: NOT_A_TREE (need a tree with >= 2 vertices)");

    int x = farthest_vertex(bfs_from(tree, 0));
    auto dist_x = bfs_from(tree, x);
    int y = farthest_vertex(dist_x);
    int a = std::min(x, y), b = std::max(x, y);

    // Unique tree path a..b via BFS parents from b (sorted adjacency gives
    // smallest-id parents, though in a tree the path is unique anyway).
    std::vector<int> parent(tree.order(), -1);
    {
        std::deque<int> queue{b};
        std::vector<char> seen(tree.order(), 0);
        seen[b] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : tree.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
        }
    }

    DiametralDecomposition dec;
    for (int v = a; v != -1; v = parent[v])
        dec.path.push_back(v);
    int d = static_cast<int>(dec.path.size()) - 1;
    dec.central_index = (d + 1) / 2 - 1; // ceil(d/2) - 1
    int u = dec.path[dec.central_index];
    int v = dec.path[dec.central_index + 1];
    dec.central_edge = {u, v};

    // Components of T - e: walk from u avoiding v; the rest is side V.
    std::vector<char> on_u(tree.order(), 0);
    {
        std::deque<int> queue{u};
        on_u[u] = 1;
        while (!queue.empty()) {
            int w = queue.front();
            queue.pop_front();
            for (int z : tree.neighbors(w)) {
                if ((w == u && z == v) || (w == v && z == u))
                    continue;
                if (!on_u[z]) {
                    on_u[z] = 1;
                    queue.push_back(z);
                }
            }
        }
    }
    auto dist_u = bfs_from(tree, u);
    auto dist_v = bfs_from(tree, v);
    dec.side.resize(tree.order());
    dec.anchor_distance.resize(tree.order());
    for (int w = 0; w < tree.order(); ++w) {
        dec.side[w] = on_u[w] ? Side::U : Side::V;
        dec.anchor_distance[w] = on_u[w] ? dist_u[w] : dist_v[w];
    }
    return dec;
}

Graph cartesian_product(const Graph& g, const Graph& h, int size_cap) {
    long long total = static_cast<long long>(g.order()) * h.order();
    if (total > size_cap) {
        std::ostringstream msg;
        msg << "cartesian_product: " << g.order() << "*" << h.order() << " vertices exceed size cap "
            << size_cap;
        throw CapError(msg.str());
    }
    int nh = h.order();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(g.order()) * h.edge_count() +
                  static_cast<size_t>(h.order()) * g.edge_count());
    for (int gv = 0; gv < g.order(); ++gv)
        for (const auto& [h1, h2] : h.edges())
            edges.emplace_back(gv * nh + h1, gv * nh + h2);
    for (const auto& [g1, g2] : g.edges())
        for (int hv = 0; hv < nh; ++hv)
            edges.emplace_back(g1 * nh + hv, g2 * nh + hv);
    return Graph(static_cast<int>(total), edges);
}

} // namespace fallgraph
