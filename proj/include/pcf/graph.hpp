#pragma once

// Immutable simple undirected graphs on vertex set {0, ..., n-1},
// stored as sorted adjacency lists, plus the small traversal helpers
// everything else is built on.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcf {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_edge : error { using error::error; };
struct invalid_spec : error { using error::error; };
struct not_connected : error { using error::error; };
struct too_large : error { using error::error; };

// A checked hypothesis of a theorem does not hold for the input.
struct hypothesis_violated : error { using error::error; };

struct format_error : error {
    std::size_t offset = 0;
    format_error(const std::string& what, std::size_t off) : error(what), offset(off) {}
};

struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adj;  // sorted, loop-free, symmetric

    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    bool has_edge(int u, int v) const {
        if (u < 0 || v < 0 || u >= n || v >= n) return false;
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }

    // Edges as (u, v) with u < v, in lexicographic order. This is the
    // canonical edge indexing used by subdivide() and the certificates.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m));
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
        return d;
    }

    int min_degree() const {
        if (n == 0) return 0;
        int d = std::numeric_limits<int>::max();
        for (int v = 0; v < n; ++v) d = std::min(d, degree(v));
        return d;
    }
};

// A proof step that the relevant theorem guarantees cannot fail did fail.
// Carries a reproducer: the graph, the partial coloring at the point of
// failure (0 = unassigned) and a description of the failing step.
struct internal_contradiction : error {
    Graph graph;
    std::vector<int> partial;
    std::string step;
    internal_contradiction(const std::string& what, Graph g, std::vector<int> colors,
                           std::string failing_step)
        : error(what), graph(std::move(g)), partial(std::move(colors)),
          step(std::move(failing_step)) {}
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list,
                         bool strict = false) {
    if (n < 0) throw invalid_spec("vertex count must be nonnegative");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw invalid_edge("edge endpoint out of range: (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");
        if (u == v) throw invalid_edge("loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    g.m = 0;
    for (int v = 0; v < n; ++v) {
        auto& a = g.adj[v];
        std::sort(a.begin(), a.end());
        auto before = a.size();
        a.erase(std::unique(a.begin(), a.end()), a.end());
        if (strict && a.size() != before) throw invalid_edge("duplicate edge in strict mode");
        g.m += static_cast<long long>(a.size());
    }
    g.m /= 2;
    return g;
}

// Structural sanity check used by tests: symmetry, sortedness, no loops,
// degree sum = 2m.
inline bool graph_valid(const Graph& g) {
    if (static_cast<int>(g.adj.size()) != g.n) return false;
    long long degsum = 0;
    for (int v = 0; v < g.n; ++v) {
        const auto& a = g.adj[v];
        if (!std::is_sorted(a.begin(), a.end())) return false;
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
        for (int u : a) {
            if (u < 0 || u >= g.n || u == v) return false;
            if (!std::binary_search(g.adj[u].begin(), g.adj[u].end(), v)) return false;
        }
        degsum += static_cast<long long>(a.size());
    }
    return degsum == 2 * g.m;
}

inline std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        std::queue<int> q;
        seen[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comps.back().push_back(u);
            for (int v : g.adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push(v);
                }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

inline bool is_tree(const Graph& g) {
    return g.n >= 1 && g.m == g.n - 1 && is_connected(g);
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // new index -> old index
};

// Induced subgraph on the given vertices (any order; result vertices are
// numbered by the sorted order of the input set).
inline InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> to_sub(g.n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) to_sub[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (int old_u : verts)
        for (int old_v : g.adj[old_u])
            if (old_u < old_v && to_sub[old_v] >= 0)
                es.emplace_back(to_sub[old_u], to_sub[old_v]);
    InducedSubgraph out;
    out.graph = build_graph(static_cast<int>(verts.size()), es);
    out.to_parent = std::move(verts);
    return out;
}

}  // namespace pcf
