#pragma once

// Constructive colorers, one per constructive argument: each returns a
// coloring that is re-verified globally and meets the stated palette bound.

#include <set>

#include "pcf/exact.hpp"
#include "pcf/families.hpp"
#include "pcf/structure.hpp"
#include "pcf/verify.hpp"

namespace pcf {

struct not_a_tree : error { using error::error; };
struct too_short : error { using error::error; };
struct bad_base : error { using error::error; };
struct bad_dominating_set : error { using error::error; };
struct bad_matching : error { using error::error; };
struct bad_forest : error { using error::error; };

struct ConstructionOutcome {
    Coloring coloring;
    int colors_used = 0;
    int bound = 0;
    std::vector<std::string> trace;
};

inline int distinct_colors(const std::vector<int>& colors) {
    std::set<int> s(colors.begin(), colors.end());
    s.erase(0);
    return static_cast<int>(s.size());
}

namespace detail {

// Every construction funnels through here: the result must verify as pcf
// and stay within the advertised bound, otherwise the construction itself
// is buggy and we surface a reproducer.
inline ConstructionOutcome checked_outcome(const Graph& g, std::vector<int> colors, int palette,
                                           int bound, std::vector<std::string> trace) {
    ConstructionOutcome out;
    out.coloring = Coloring{std::move(colors), palette};
    out.colors_used = distinct_colors(out.coloring.color);
    out.bound = bound;
    out.trace = std::move(trace);
    auto rep = verify(g, out.coloring, Mode::pcf);
    if (!rep.ok || out.colors_used > bound)
        throw internal_contradiction("constructed coloring failed verification", g,
                                     out.coloring.color, "final check");
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Trees: 2 colors for a single edge, 3 otherwise.  Leaf-addition induction:
// each new leaf avoids its neighbor's color and one color with unique
// appearance in the neighbor's current neighborhood.
inline ConstructionOutcome color_tree(const Graph& t) {
    if (t.n < 2) throw not_a_tree("tree coloring needs n >= 2");
    if (!is_tree(t)) throw not_a_tree("input is not a tree");
    std::vector<int> colors(t.n, 0), parent(t.n, -1), order;
    order.reserve(t.n);
    std::queue<int> q;
    q.push(0);
    std::vector<char> seen(t.n, 0);
    seen[0] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        order.push_back(u);
        for (int v : t.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                parent[v] = u;
                q.push(v);
            }
    }
    colors[0] = 1;
    for (std::size_t i = 1; i < order.size(); ++i) {
        int v = order[i], w = parent[v];
        int forbid_unique = 0;
        std::vector<int> colored_nbrs;
        for (int u : t.adj[w])
            if (colors[u] != 0) colored_nbrs.push_back(u);
        if (!colored_nbrs.empty()) forbid_unique = unique_color_in(colors, colored_nbrs);
        for (int c = 1; c <= 3; ++c)
            if (c != colors[w] && c != forbid_unique) {
                colors[v] = c;
                break;
            }
    }
    int bound = t.n == 2 ? 2 : 3;
    return detail::checked_outcome(t, std::move(colors), bound, bound,
                                   {"leaf-addition over a breadth-first order"});
}

// ---------------------------------------------------------------------------
// Cycles: 3 colors when 3 | n, 5 for the pentagon, otherwise 4.  Pattern
// colorings validated at construction time, with an exact-search fallback
// should a pattern ever fail.
inline ConstructionOutcome color_cycle(int n) {
    if (n < 3) throw invalid_spec("cycle needs n >= 3");
    Graph g = cycle_graph(n);
    int bound = (n % 3 == 0) ? 3 : (n == 5 ? 5 : 4);
    std::vector<int> colors(n);
    std::string rule;
    if (n % 3 == 0) {
        for (int i = 0; i < n; ++i) colors[i] = i % 3 + 1;
        rule = "repeating 1,2,3";
    } else if (n == 5) {
        for (int i = 0; i < n; ++i) colors[i] = i + 1;
        rule = "all distinct";
    } else if (n % 3 == 1) {
        for (int i = 0; i < n - 4; ++i) colors[i] = i % 3 + 1;
        const int tail[4] = {1, 2, 4, 3};
        for (int i = 0; i < 4; ++i) colors[n - 4 + i] = tail[i];
        rule = "1,2,3 blocks with 1,2,4,3 tail";
    } else {
        for (int i = 0; i < n - 5; ++i) colors[i] = i % 3 + 1;
        const int tail[5] = {1, 4, 2, 3, 4};
        for (int i = 0; i < 5; ++i) colors[n - 5 + i] = tail[i];
        rule = "1,2,3 blocks with 1,4,2,3,4 tail";
    }
    Coloring c{colors, bound};
    if (!verify(g, c, Mode::pcf).ok) {
        auto fallback = decide_k(g, Mode::pcf, bound);
        if (!fallback)
            throw internal_contradiction("cycle pattern and fallback both failed", g, colors,
                                         "cycle coloring");
        colors = fallback->color;
        rule = "exact fallback";
    }
    return detail::checked_outcome(g, std::move(colors), bound, bound, {rule});
}

// ---------------------------------------------------------------------------
// Hypercubes (d >= 2, bound 4): the half with top bit 0 is properly
// 2-colored by parity with {1,2}, the other half with {3,4}.
inline ConstructionOutcome color_hypercube(int d) {
    if (d < 2) throw invalid_spec("hypercube coloring needs d >= 2");
    Graph g = hypercube(d);
    std::vector<int> colors(g.n);
    for (int v = 0; v < g.n; ++v) {
        int parity = __builtin_popcount(static_cast<unsigned>(v)) & 1;
        bool right = (v >> (d - 1)) & 1;
        colors[v] = (right ? 3 : 1) + parity;
    }
    return detail::checked_outcome(g, std::move(colors), 4, 4,
                                   {"parity two-coloring on each half"});
}

// ---------------------------------------------------------------------------
// Paths with preassigned endpoint colors: a pcf 4-coloring of P_n (n >= 5)
// with c(v1)=c1, c(vn)=cn and the first/last two vertices colored in
// {1,2,3}.  Explicit tables for 5 <= n <= 7, then a (3,4,1)-infix
// recursion.  The published n=7 same-endpoint pattern fails the unique
// -neighbor check at its middle vertex, so a corrected table is used.
inline Coloring color_path_endpoints(int n, int c1, int cn) {
    if (n < 5) throw too_short("needs n >= 5");
    if (c1 < 1 || c1 > 3 || cn < 1 || cn > 3)
        throw invalid_spec("endpoint colors must lie in 1..3");

    // Normalized tables with c(v1) = 1 and c(vn) = 1 or 2.
    static const std::vector<std::vector<int>> same{{1, 2, 4, 3, 1},
                                                    {1, 2, 4, 3, 2, 1},
                                                    {1, 2, 4, 1, 3, 2, 1}};
    static const std::vector<std::vector<int>> diff{{1, 2, 4, 3, 2},
                                                    {1, 2, 4, 3, 1, 2},
                                                    {1, 2, 3, 4, 1, 3, 2}};
    std::function<std::vector<int>(int, bool)> build = [&](int len, bool same_ends) {
        if (len <= 7) return same_ends ? same[len - 5] : diff[len - 5];
        auto rec = build(len - 3, same_ends);
        std::vector<int> out;
        out.reserve(len);
        out.push_back(rec[0]);
        out.push_back(3);
        out.push_back(4);
        out.push_back(1);
        out.insert(out.end(), rec.begin() + 1, rec.end());
        return out;
    };

    bool same_ends = (c1 == cn);
    auto pattern = build(n, same_ends);
    // Permute {1,2,3} so the normalized endpoints land on (c1, cn).
    int perm[5] = {0, 0, 0, 0, 4};
    perm[1] = c1;
    if (same_ends) {
        int rest[2], r = 0;
        for (int c = 1; c <= 3; ++c)
            if (c != c1) rest[r++] = c;
        perm[2] = rest[0];
        perm[3] = rest[1];
    } else {
        perm[2] = cn;
        for (int c = 1; c <= 3; ++c)
            if (c != c1 && c != cn) perm[3] = c;
    }
    std::vector<int> colors(n);
    for (int i = 0; i < n; ++i) colors[i] = perm[pattern[i]];
    return Coloring{colors, 4};
}

// ---------------------------------------------------------------------------
// Complete subdivisions of complete graphs: exactly n colors.  Explicit
// tables for n <= 5; for n >= 6 the branch vertices take distinct colors,
// a near-perfect matching of subdividers carries the unique colors, and
// the remaining subdividers dodge their few forbidden colors.
inline ConstructionOutcome color_skn(int n) {
    if (n < 3) throw invalid_spec("complete subdivision coloring needs n >= 3");
    Graph g = complete_subdivision(complete_graph(n));
    auto sub_id = [n](int i, int j) {  // subdivider of edge (i,j), i < j
        return n + i * n - i * (i + 1) / 2 + (j - i - 1);
    };
    std::vector<int> colors(g.n, 0);
    std::vector<std::string> trace;
    for (int v = 0; v < n; ++v) colors[v] = v + 1;

    if (n == 3) {
        // SK3 is the hexagon 0, (0,1), 1, (1,2), 2, (0,2).
        int ring[6] = {0, sub_id(0, 1), 1, sub_id(1, 2), 2, sub_id(0, 2)};
        for (int i = 0; i < 6; ++i) colors[ring[i]] = i % 3 + 1;
        trace.emplace_back("hexagon pattern");
    } else if (n == 4) {
        colors[sub_id(0, 1)] = 4;
        colors[sub_id(0, 2)] = 2;
        colors[sub_id(0, 3)] = 3;
        colors[sub_id(1, 2)] = 1;
        colors[sub_id(1, 3)] = 1;
        colors[sub_id(2, 3)] = 2;
        trace.emplace_back("explicit table n=4");
    } else if (n == 5) {
        colors[sub_id(0, 1)] = 3;
        colors[sub_id(1, 2)] = 4;
        colors[sub_id(2, 3)] = 5;
        colors[sub_id(3, 4)] = 1;
        colors[sub_id(0, 4)] = 2;
        colors[sub_id(0, 2)] = 4;
        colors[sub_id(0, 3)] = 5;
        colors[sub_id(1, 3)] = 5;
        colors[sub_id(1, 4)] = 1;
        colors[sub_id(2, 4)] = 1;
        trace.emplace_back("explicit table n=5");
    } else {
        bool odd = n % 2;
        colors[sub_id(0, 1)] = n;
        for (int j = 2; j + 1 < n; j += 2) colors[sub_id(j, j + 1)] = 1;
        if (odd) colors[sub_id(0, n - 1)] = 2;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int w = sub_id(i, j);
                if (colors[w]) continue;
                for (int c = 2; c < n; ++c)
                    if (c != i + 1 && c != j + 1 && !(odd && c == 2)) {
                        colors[w] = c;
                        break;
                    }
            }
        trace.emplace_back(odd ? "matching around an odd rim" : "perfect matching case");
    }
    return detail::checked_outcome(g, std::move(colors), n, n, std::move(trace));
}

// ---------------------------------------------------------------------------
// Coronas (bound chi+1): first try to keep the base palette by giving each
// leaf a color that leaves some color unique at its support vertex; if any
// vertex refuses, fall back to one fresh color on all leaves.
inline ConstructionOutcome color_corona(const Graph& gbase, const Coloring& proper) {
    if (static_cast<int>(proper.color.size()) != gbase.n ||
        !verify(gbase, proper, Mode::proper).ok)
        throw bad_base("base coloring is not a proper coloring of the base graph");
    int chi = distinct_colors(proper.color);
    std::set<int> used(proper.color.begin(), proper.color.end());
    int maxc = used.empty() ? 0 : *used.rbegin();
    Graph h = corona_of(gbase);
    std::vector<int> colors(h.n, 0);
    for (int v = 0; v < gbase.n; ++v) colors[v] = proper.color[v];

    bool within_base = true;
    for (int v = 0; v < gbase.n && within_base; ++v) {
        int pick = 0;
        for (int x : used) {
            if (x == colors[v]) continue;
            // Would some color occur exactly once in N_H(v) = N_G(v) + leaf?
            std::vector<int> nbhd = gbase.adj[v];
            colors[gbase.n + v] = x;
            nbhd.push_back(gbase.n + v);
            if (unique_color_in(colors, nbhd) != 0) {
                pick = x;
                break;
            }
            colors[gbase.n + v] = 0;
        }
        if (pick)
            colors[gbase.n + v] = pick;
        else
            within_base = false;
    }
    std::vector<std::string> trace;
    if (within_base) {
        trace.emplace_back("leaves absorbed into the base palette");
    } else {
        for (int v = 0; v < gbase.n; ++v) colors[gbase.n + v] = maxc + 1;
        trace.emplace_back("fresh color on every leaf");
    }
    int palette = within_base ? maxc : maxc + 1;
    return detail::checked_outcome(h, std::move(colors), palette, chi + 1, std::move(trace));
}

// ---------------------------------------------------------------------------
// Total domination (bound |D| + chi): distinct fresh colors on D make every
// vertex see a singleton color.
inline ConstructionOutcome color_via_total_domination(const Graph& g, const std::vector<int>& d,
                                                      const Coloring& proper) {
    std::vector<char> in_d(g.n, 0);
    for (int v : d) {
        if (v < 0 || v >= g.n) throw bad_dominating_set("vertex out of range");
        in_d[v] = 1;
    }
    for (int v = 0; v < g.n; ++v) {
        bool dominated = false;
        for (int u : g.adj[v]) dominated |= in_d[u] != 0;
        if (!dominated) throw bad_dominating_set("vertex " + std::to_string(v) + " undominated");
    }
    if (static_cast<int>(proper.color.size()) != g.n || !verify(g, proper, Mode::proper).ok)
        throw bad_base("not a proper coloring");
    int chi = distinct_colors(proper.color);
    int base = 0;
    for (int c : proper.color) base = std::max(base, c);
    std::vector<int> colors = proper.color;
    int fresh = base;
    for (int v : d)
        if (in_d[v]) {
            colors[v] = ++fresh;
            in_d[v] = 2;  // handle duplicates in the input list once
        }
    int dsize = fresh - base;
    return detail::checked_outcome(g, std::move(colors), fresh, dsize + chi,
                                   {"fresh singleton colors on the dominating set"});
}

// ---------------------------------------------------------------------------
// Product coloring (bound kf * kp): pair a conflict-free coloring with a
// proper one; the pair is conflict-free by the first coordinate and proper
// by the second.
inline ConstructionOutcome product_coloring(const Graph& g, const Coloring& f,
                                            const Coloring& p) {
    if (static_cast<int>(f.color.size()) != g.n || !verify(g, f, Mode::cf).ok)
        throw bad_base("first coloring is not conflict-free");
    if (static_cast<int>(p.color.size()) != g.n || !verify(g, p, Mode::proper).ok)
        throw bad_base("second coloring is not proper");
    std::vector<int> colors(g.n);
    for (int v = 0; v < g.n; ++v) colors[v] = (f.color[v] - 1) * p.k + p.color[v];
    return detail::checked_outcome(g, std::move(colors), f.k * p.k, f.k * p.k,
                                   {"pair coloring (cf, proper)"});
}

// ---------------------------------------------------------------------------
// Complete subdivision of a graph with a perfect matching (bound
// max{5, chi}; 4 when the base coloring is a 2-coloring): matching
// subdividers dodge their endpoints, the rest dodge at most four colors.
inline ConstructionOutcome color_subdivided_matching(const Graph& gbase,
                                                     const std::vector<std::pair<int, int>>& m,
                                                     const Coloring& proper) {
    if (static_cast<int>(proper.color.size()) != gbase.n ||
        !verify(gbase, proper, Mode::proper).ok)
        throw bad_base("not a proper coloring of the base");
    std::vector<int> mate(gbase.n, -1);
    for (auto [u, v] : m) {
        if (!gbase.has_edge(u, v)) throw bad_matching("matching pair is not an edge");
        if (mate[u] >= 0 || mate[v] >= 0) throw bad_matching("matching not vertex-disjoint");
        mate[u] = v;
        mate[v] = u;
    }
    for (int v = 0; v < gbase.n; ++v)
        if (mate[v] < 0) throw bad_matching("matching does not cover vertex " + std::to_string(v));

    auto es = gbase.edges();
    auto sub = subdivide(gbase, std::vector<int>(es.size(), 1));
    const Graph& h = sub.graph;
    std::vector<int> colors(h.n, 0);
    int chi = distinct_colors(proper.color);

    if (chi <= 2) {
        // bipartite case: classes 1/2, matching subdividers 3, the rest 4
        std::vector<int> remap(proper.k + 1, 0);
        int next = 0;
        for (int v = 0; v < gbase.n; ++v) {
            if (!remap[proper.color[v]]) remap[proper.color[v]] = ++next;
            colors[v] = remap[proper.color[v]];
        }
        for (std::size_t e = 0; e < es.size(); ++e)
            colors[sub.chain[e][0]] = (mate[es[e].first] == es[e].second) ? 3 : 4;
        return detail::checked_outcome(h, std::move(colors), 4, 4, {"two classes + 3/4"});
    }

    for (int v = 0; v < gbase.n; ++v) colors[v] = proper.color[v];
    int maxc = 0;
    for (int v = 0; v < gbase.n; ++v) maxc = std::max(maxc, proper.color[v]);
    int palette = std::max(5, maxc);
    std::vector<int> matching_sub(gbase.n, -1);  // v -> subdivider of its matching edge
    for (std::size_t e = 0; e < es.size(); ++e) {
        auto [u, v] = es[e];
        if (mate[u] != v) continue;
        int w = sub.chain[e][0];
        for (int c = 1; c <= palette; ++c)
            if (c != colors[u] && c != colors[v]) {
                colors[w] = c;
                break;
            }
        matching_sub[u] = matching_sub[v] = w;
    }
    for (std::size_t e = 0; e < es.size(); ++e) {
        auto [x, y] = es[e];
        if (mate[x] == y) continue;
        int w = sub.chain[e][0];
        int f1 = colors[matching_sub[x]], f2 = colors[matching_sub[y]];
        for (int c = 1; c <= palette; ++c)
            if (c != colors[x] && c != colors[y] && c != f1 && c != f2) {
                colors[w] = c;
                break;
            }
    }
    return detail::checked_outcome(h, std::move(colors), palette, palette,
                                   {"matching subdividers first"});
}

// ---------------------------------------------------------------------------
// Subdividing a spanning forest (and optionally further edges).  Bound
// chi+2 (chi+1 for a perfect matching, max{5, chi+2} with extra edges).
// Fresh colors alternate along each rooted component.
inline ConstructionOutcome color_subdivided_forest(const Graph& gbase,
                                                   const std::vector<std::pair<int, int>>& f,
                                                   const std::vector<std::pair<int, int>>& extra,
                                                   const Coloring& proper) {
    if (static_cast<int>(proper.color.size()) != gbase.n ||
        !verify(gbase, proper, Mode::proper).ok)
        throw bad_base("not a proper coloring of the base");
    auto es = gbase.edges();
    std::map<std::pair<int, int>, int> eindex;
    for (std::size_t e = 0; e < es.size(); ++e) eindex[es[e]] = static_cast<int>(e);
    auto canon = [](std::pair<int, int> e) {
        if (e.first > e.second) std::swap(e.first, e.second);
        return e;
    };
    std::vector<int> counts(es.size(), 0);
    std::vector<char> in_f(es.size(), 0);
    for (auto e : f) {
        auto it = eindex.find(canon(e));
        if (it == eindex.end()) throw bad_forest("forest edge not in the graph");
        counts[it->second] = 1;
        in_f[it->second] = 1;
    }
    for (auto e : extra) {
        auto it = eindex.find(canon(e));
        if (it == eindex.end()) throw invalid_spec("extra edge not in the graph");
        if (in_f[it->second]) throw invalid_spec("extra edge already in the forest");
        counts[it->second] = 1;
    }

    // Forest checks: spanning without isolated vertices, acyclic.
    std::vector<std::pair<int, int>> fedges;
    for (std::size_t e = 0; e < es.size(); ++e)
        if (in_f[e]) fedges.push_back(es[e]);
    Graph forest = build_graph(gbase.n, fedges);
    if (forest.min_degree() == 0) throw bad_forest("forest leaves an isolated vertex");
    auto comps = components(forest);
    if (forest.m != gbase.n - static_cast<long long>(comps.size()))
        throw bad_forest("cycle inside the forest edges");

    auto sub = subdivide(gbase, counts);
    const Graph& h = sub.graph;
    std::vector<int> colors(h.n, 0);
    for (int v = 0; v < gbase.n; ++v) colors[v] = proper.color[v];
    int chi = 0;
    for (int v = 0; v < gbase.n; ++v) chi = std::max(chi, proper.color[v]);
    int x = chi + 1, y = chi + 2;

    for (const auto& comp : comps) {
        int root = -1;
        for (int v : comp)
            if (forest.degree(v) == 1) {
                root = v;
                break;
            }
        if (root < 0) throw bad_forest("forest component without a leaf");
        // BFS along forest edges; the subdivider between depth d and d+1
        // gets x when d is even, y when d is odd.
        std::vector<int> depth(gbase.n, -1);
        std::queue<int> q;
        depth[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : forest.adj[u])
                if (depth[v] < 0) {
                    depth[v] = depth[u] + 1;
                    int w = sub.chain[eindex[canon({u, v})]][0];
                    colors[w] = depth[u] % 2 == 0 ? x : y;
                    q.push(v);
                }
        }
    }

    bool matching_case = true;
    for (const auto& comp : comps) matching_case &= comp.size() == 2;
    int palette = extra.empty() ? chi + (matching_case ? 1 : 2) : std::max(5, chi + 2);
    for (std::size_t e = 0; e < es.size(); ++e) {
        if (counts[e] == 0 || in_f[e]) continue;
        auto [u, v] = es[e];
        int w = sub.chain[e][0];
        for (int c = 1; c <= palette; ++c)
            if (c != colors[u] && c != colors[v] && c != x && c != y) {
                colors[w] = c;
                break;
            }
    }
    std::vector<std::string> trace{matching_case ? "forest is a perfect matching"
                                                 : "alternating fresh colors by depth"};
    if (!extra.empty()) trace.emplace_back("extra subdividers dodge four colors");
    return detail::checked_outcome(h, std::move(colors), palette, palette, std::move(trace));
}

}  // namespace pcf
