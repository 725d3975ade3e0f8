#pragma once

// Exact maximum average degree.  mad(G) = 2 * max_H |E(H)|/|V(H)| over
// nonempty subgraphs H; the maximizer can be taken vertex-induced.  The
// density test "is there H with |E(H)|/|V(H)| > p/q" is decided exactly in
// integer arithmetic by a min-cut on the standard density network, and the
// optimum is reached by iterating on the extracted denser subgraph.  All
// achievable densities have denominator <= n, so the loop is finite.

#include <numeric>

#include "pcf/graph.hpp"

namespace pcf {

struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    friend bool operator==(const Frac& x, const Frac& y) {
        return x.num == y.num && x.den == y.den;
    }
    friend bool operator!=(const Frac& x, const Frac& y) { return !(x == y); }
    friend bool operator<(const Frac& x, const Frac& y) { return x.num * y.den < y.num * x.den; }
    friend bool operator<=(const Frac& x, const Frac& y) { return x.num * y.den <= y.num * x.den; }
    friend bool operator>(const Frac& x, const Frac& y) { return y < x; }
    friend bool operator>=(const Frac& x, const Frac& y) { return y <= x; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

namespace detail {

// Dinic max-flow, sized for the small density networks used here.
class MaxFlow {
public:
    explicit MaxFlow(int nodes) : head_(nodes, -1), level_(nodes), it_(nodes) {}

    void add_edge(int u, int v, long long cap) {
        edges_.push_back({v, head_[u], cap});
        head_[u] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({u, head_[v], 0});
        head_[v] = static_cast<int>(edges_.size()) - 1;
    }

    long long run(int s, int t) {
        long long total = 0;
        while (bfs(s, t)) {
            it_ = head_;
            while (long long pushed = dfs(s, t, kInf)) total += pushed;
        }
        terminal_ = t;
        source_ = s;
        return total;
    }

    // After run(): nodes still reachable from s in the residual network
    // (the source side of a min cut).
    std::vector<char> source_side() const {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> stack{source_};
        seen[source_] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e = head_[u]; e >= 0; e = edges_[e].next)
                if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
                    seen[edges_[e].to] = 1;
                    stack.push_back(edges_[e].to);
                }
        }
        return seen;
    }

private:
    static constexpr long long kInf = (1LL << 62);
    struct Edge {
        int to, next;
        long long cap;
    };
    std::vector<Edge> edges_;
    std::vector<int> head_, level_, it_;
    int source_ = 0, terminal_ = 0;

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int e = head_[u]; e >= 0; e = edges_[e].next)
                if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
                    level_[edges_[e].to] = level_[u] + 1;
                    q.push(edges_[e].to);
                }
        }
        return level_[t] >= 0;
    }

    long long dfs(int u, int t, long long limit) {
        if (u == t || limit == 0) return limit;
        for (int& e = it_[u]; e >= 0; e = edges_[e].next) {
            int v = edges_[e].to;
            if (edges_[e].cap > 0 && level_[v] == level_[u] + 1) {
                long long pushed = dfs(v, t, std::min(limit, edges_[e].cap));
                if (pushed > 0) {
                    edges_[e].cap -= pushed;
                    edges_[e ^ 1].cap += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }
};

// Is there a nonempty H with q*|E(H)| - p*|V(H)| > 0?  If so, return such a
// vertex set (the source side of the min cut).
inline std::optional<std::vector<int>> denser_subgraph(const Graph& g, long long p,
                                                       long long q) {
    auto es = g.edges();
    int s = 0, t = 1;
    MaxFlow flow(2 + g.n + static_cast<int>(es.size()));
    auto vnode = [&](int v) { return 2 + v; };
    auto enode = [&](int e) { return 2 + g.n + e; };
    for (int e = 0; e < static_cast<int>(es.size()); ++e) {
        flow.add_edge(s, enode(e), q);
        flow.add_edge(enode(e), vnode(es[e].first), 1LL << 60);
        flow.add_edge(enode(e), vnode(es[e].second), 1LL << 60);
    }
    for (int v = 0; v < g.n; ++v) flow.add_edge(vnode(v), t, p);
    long long cut = flow.run(s, t);
    long long best = q * g.m - cut;  // max over H of q|E(H)| - p|V(H)|
    if (best <= 0) return std::nullopt;
    auto side = flow.source_side();
    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v)
        if (side[vnode(v)]) verts.push_back(v);
    return verts;
}

}  // namespace detail

// Exact maximum average degree as a reduced fraction (0 for edgeless graphs).
inline Frac mad(const Graph& g) {
    if (g.n == 0 || g.m == 0) return Frac(0, 1);
    // Start from the whole graph and climb while a strictly denser
    // vertex-induced subgraph exists.
    long long p = g.m, q = g.n;  // current best density p/q
    while (true) {
        auto denser = detail::denser_subgraph(g, p, q);
        if (!denser) break;
        auto sub = induced_subgraph(g, *denser);
        p = sub.graph.m;
        q = sub.graph.n;
        if (q == 0) throw internal_contradiction("empty denser subgraph", g, {}, "mad");
    }
    return Frac(2 * p, q);
}

}  // namespace pcf
