#pragma once

// Generators for the named graph families plus the graph constructions
// (subdivision, corona, Cartesian product) that other modules build on.
//
// Vertex numbering conventions, so colorings are reproducible:
//   path/cycle       vertices in path/cycle order 0,1,...,n-1
//   hypercube        vertex id = bitstring value, edge iff ids differ in one bit
//   star             0 = center, 1..n = leaves
//   complete subdivision of g: original vertices keep their ids, the
//                    subdividers follow in the canonical edge order of g
//   corona           0..n-1 = base, leaf of v = n+v
//   f_chain(t)       chain of t five-cycle blocks; block i enters at its
//                    cut vertex and exits two steps around the cycle
//   bouquet(t,k)     vertex 0 shared by t cycles of length 3k+2
//   cartesian product of (a, b): vertex (i, j) has id i*b.n + j

#include <memory>
#include <random>

#include "pcf/graph.hpp"

namespace pcf {

inline Graph path_graph(int n) {
    if (n < 1) throw invalid_spec("path needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return build_graph(n, es);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw invalid_spec("cycle needs n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return build_graph(n, es);
}

inline Graph complete_graph(int n) {
    if (n < 1) throw invalid_spec("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return build_graph(n, es);
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw invalid_spec("complete bipartite needs a,b >= 1");
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
    return build_graph(a + b, es);
}

inline Graph hypercube(int d) {
    if (d < 1 || d > 24) throw invalid_spec("hypercube needs 1 <= d <= 24");
    int n = 1 << d;
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < n; ++v)
        for (int bit = 0; bit < d; ++bit) {
            int u = v ^ (1 << bit);
            if (v < u) es.emplace_back(v, u);
        }
    return build_graph(n, es);
}

inline Graph star_graph(int leaves) {
    if (leaves < 1) throw invalid_spec("star needs >= 1 leaf");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return build_graph(leaves + 1, es);
}

// Uniform random labeled tree via a seeded Pruefer sequence.
inline Graph random_tree(int n, unsigned long long seed) {
    if (n < 1) throw invalid_spec("random tree needs n >= 1");
    if (n == 1) return build_graph(1, {});
    if (n == 2) return build_graph(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(n - 2);
    for (auto& x : pruefer) x = pick(rng);
    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::vector<std::pair<int, int>> es;
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);
    for (int x : pruefer) {
        int leaf = leaves.top();
        leaves.pop();
        es.emplace_back(leaf, x);
        if (--deg[x] == 1) leaves.push(x);
    }
    int u = leaves.top();
    leaves.pop();
    es.emplace_back(u, leaves.top());
    return build_graph(n, es);
}

// Chain of t blocks, each a 5-cycle, consecutive blocks sharing one vertex.
// 4t+1 vertices.
inline Graph f_chain(int t) {
    if (t < 1) throw invalid_spec("f_chain needs t >= 1");
    std::vector<std::pair<int, int>> es;
    int cut = 0, next = 1;
    for (int i = 0; i < t; ++i) {
        int a = next, b = next + 1, c = next + 2, d = next + 3;
        next += 4;
        es.emplace_back(cut, a);
        es.emplace_back(a, b);
        es.emplace_back(b, c);
        es.emplace_back(c, d);
        es.emplace_back(d, cut);
        cut = b;  // two steps around the new block
    }
    return build_graph(4 * t + 1, es);
}

// t cycles of length 3k+2 sharing the single vertex 0.  t(3k+1)+1 vertices.
inline Graph bouquet(int t, int k) {
    if (t < 1 || k < 1) throw invalid_spec("bouquet needs t >= 1 and k >= 1");
    int len = 3 * k + 2;
    std::vector<std::pair<int, int>> es;
    int next = 1;
    for (int i = 0; i < t; ++i) {
        int first = next;
        for (int j = 0; j + 1 < len - 1; ++j) es.emplace_back(next + j, next + j + 1);
        es.emplace_back(0, first);
        es.emplace_back(0, next + len - 2);
        next += len - 1;
    }
    return build_graph(t * (len - 1) + 1, es);
}

inline Graph kite_graph() {  // K4 minus one edge
    return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// C5 plus two diagonals from vertex 0 (a chordal graph with max degree 4).
inline Graph chordal_remark_graph() {
    return build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {0, 3}});
}

inline Graph corona_of(const Graph& g) {
    std::vector<std::pair<int, int>> es = g.edges();
    for (int v = 0; v < g.n; ++v) es.emplace_back(v, g.n + v);
    return build_graph(2 * g.n, es);
}

inline Graph cartesian_product(const Graph& a, const Graph& b) {
    if (a.n == 0 || b.n == 0) throw invalid_spec("cartesian product needs nonempty factors");
    auto id = [&](int i, int j) { return i * b.n + j; };
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a.n; ++i)
        for (auto [u, v] : b.edges()) es.emplace_back(id(i, u), id(i, v));
    for (int j = 0; j < b.n; ++j)
        for (auto [u, v] : a.edges()) es.emplace_back(id(u, j), id(v, j));
    return build_graph(a.n * b.n, es);
}

struct SubdivisionResult {
    Graph graph;
    // chain[e] = the new degree-2 vertices replacing edge e (canonical edge
    // order of the input), listed from the lower endpoint to the higher.
    std::vector<std::vector<int>> chain;
};

// Replace edge (u,v) with the path u - w1 - ... - wc - v, c = counts[e].
// counts all zero returns an identical copy.
inline SubdivisionResult subdivide(const Graph& g, const std::vector<int>& counts) {
    auto es = g.edges();
    if (counts.size() != es.size())
        throw invalid_spec("subdivision counts must be indexed by the edge list");
    SubdivisionResult out;
    out.chain.resize(es.size());
    std::vector<std::pair<int, int>> new_edges;
    int next = g.n;
    for (std::size_t e = 0; e < es.size(); ++e) {
        if (counts[e] < 0) throw invalid_spec("negative subdivision count");
        auto [u, v] = es[e];
        int prev = u;
        for (int i = 0; i < counts[e]; ++i) {
            out.chain[e].push_back(next);
            new_edges.emplace_back(prev, next);
            prev = next++;
        }
        new_edges.emplace_back(prev, v);
    }
    out.graph = build_graph(next, new_edges);
    return out;
}

inline Graph complete_subdivision(const Graph& g) {
    return subdivide(g, std::vector<int>(static_cast<std::size_t>(g.m), 1)).graph;
}

inline Graph uniform_subdivision(const Graph& g, int k) {
    if (k < 0) throw invalid_spec("subdivision count must be >= 0");
    return subdivide(g, std::vector<int>(static_cast<std::size_t>(g.m), k)).graph;
}

struct FamilySpec {
    enum class Kind {
        path,
        cycle,
        complete,
        complete_bipartite,
        hypercube,
        complete_subdivision,
        k_subdivision,
        corona,
        star,
        random_tree,
        f_chain,
        bouquet,
        cartesian_product,
        kite,
        chordal_remark,
    };
    Kind kind = Kind::path;
    long long a = 0, b = 0;  // numeric parameters (n; (a,b); d; (t,k); (n,seed))
    std::shared_ptr<const FamilySpec> base, base2;
    std::shared_ptr<const Graph> base_graph;  // alternative to a nested spec
};

inline Graph generate(const FamilySpec& spec) {
    auto base_of = [](const FamilySpec& s) -> Graph {
        if (s.base_graph) return *s.base_graph;
        if (s.base) return generate(*s.base);
        throw invalid_spec("family spec needs a base graph");
    };
    using K = FamilySpec::Kind;
    switch (spec.kind) {
        case K::path: return path_graph(static_cast<int>(spec.a));
        case K::cycle: return cycle_graph(static_cast<int>(spec.a));
        case K::complete: return complete_graph(static_cast<int>(spec.a));
        case K::complete_bipartite:
            return complete_bipartite(static_cast<int>(spec.a), static_cast<int>(spec.b));
        case K::hypercube: return hypercube(static_cast<int>(spec.a));
        case K::complete_subdivision: return complete_subdivision(base_of(spec));
        case K::k_subdivision:
            return uniform_subdivision(base_of(spec), static_cast<int>(spec.a));
        case K::corona: return corona_of(base_of(spec));
        case K::star: return star_graph(static_cast<int>(spec.a));
        case K::random_tree:
            return random_tree(static_cast<int>(spec.a),
                               static_cast<unsigned long long>(spec.b));
        case K::f_chain: return f_chain(static_cast<int>(spec.a));
        case K::bouquet: return bouquet(static_cast<int>(spec.a), static_cast<int>(spec.b));
        case K::cartesian_product: {
            if (!spec.base || !spec.base2)
                throw invalid_spec("cartesian product needs two base specs");
            return cartesian_product(generate(*spec.base), generate(*spec.base2));
        }
        case K::kite: return kite_graph();
        case K::chordal_remark: return chordal_remark_graph();
    }
    throw invalid_spec("unknown family kind");
}

}  // namespace pcf
