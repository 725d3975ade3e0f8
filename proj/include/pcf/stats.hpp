#pragma once

// Elementary graph parameters: degrees, girth, degeneracy, connectivity,
// exact maximum average degree.

#include "pcf/graph.hpp"
#include "pcf/mad.hpp"

namespace pcf {

// Girth of a forest; compares greater than every finite girth.
inline constexpr int inf_girth = std::numeric_limits<int>::max();

// Shortest cycle length via BFS from every vertex.  For each root the
// candidate dist[u]+dist[v]+1 over non-tree edges never undershoots the
// girth, and a root on a shortest cycle attains it.
inline int girth(const Graph& g) {
    int best = inf_girth;
    for (int s = 0; s < g.n; ++s) {
        std::vector<int> dist(g.n, -1), parent(g.n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] >= best) continue;
            for (int v : g.adj[u]) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best;
}

// Peeling order: repeatedly remove a vertex of minimum residual degree
// (ties: smaller original degree first, then smaller index).  Returns the
// removal order; the degeneracy is the maximum residual degree seen.
struct PeelResult {
    std::vector<int> order;
    int degeneracy = 0;
};

inline PeelResult peel_min_degree(const Graph& g) {
    PeelResult out;
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<char> removed(g.n, 0);
    for (int step = 0; step < g.n; ++step) {
        int pick = -1;
        for (int v = 0; v < g.n; ++v) {
            if (removed[v]) continue;
            if (pick < 0 || deg[v] < deg[pick] ||
                (deg[v] == deg[pick] && g.degree(v) < g.degree(pick)))
                pick = v;
        }
        out.degeneracy = std::max(out.degeneracy, deg[pick]);
        removed[pick] = 1;
        out.order.push_back(pick);
        for (int u : g.adj[pick])
            if (!removed[u]) --deg[u];
    }
    return out;
}

inline int degeneracy(const Graph& g) { return peel_min_degree(g).degeneracy; }

struct GraphStats {
    int max_degree = 0;
    int min_degree = 0;
    int girth = inf_girth;  // inf_girth for forests
    int degeneracy = 0;
    bool connected = true;
    Frac mad;
};

inline GraphStats stats(const Graph& g) {
    GraphStats s;
    s.max_degree = g.max_degree();
    s.min_degree = g.min_degree();
    s.girth = girth(g);
    s.degeneracy = degeneracy(g);
    s.connected = is_connected(g);
    s.mad = mad(g);
    return s;
}

}  // namespace pcf
