#pragma once

// Colorers that realize the inductive proofs: remove the configuration the
// proof names, color the smaller graph, re-add the removed vertices by
// exhaustive local extension.  The underlying theorems guarantee every
// extension step succeeds; a failing step therefore raises
// internal_contradiction with a reproducer.

#include <array>

#include "pcf/constructive.hpp"

namespace pcf {

struct not_chordal : error { using error::error; };
struct not_f_plus_pendant : error { using error::error; };
struct not_outerplanar_evidence : error { using error::error; };

struct not_claw_free : error {
    std::vector<int> witness;  // center then the three independent leaves
    not_claw_free(const std::string& what, std::vector<int> claw)
        : error(what), witness(std::move(claw)) {}
};

// ---------------------------------------------------------------------------
// Certificate-driven coloring (bound max{5, floor(a/2)+2b-1}, or
// max{5, 2(h-2)} for edge-sum certificates).

inline ConstructionOutcome color_ab(const Graph& g, const EliminationCertificate& cert) {
    if (!replay_certificate(g, cert)) throw invalid_spec("certificate does not replay on g");
    int bound = cert.kind == EliminationCertificate::Kind::ab
                    ? std::max(5, cert.a / 2 + 2 * cert.b - 1)
                    : std::max(5, 2 * (cert.h - 2));

    std::vector<char> active(g.n, 1);
    int remaining = g.n;
    std::size_t applied = 0;
    while (applied < cert.steps.size() && remaining > 6) {
        const auto& s = cert.steps[applied++];
        active[s.u] = 0;
        --remaining;
        if (s.pair_step) {
            active[s.v] = 0;
            --remaining;
        }
    }

    std::vector<int> colors(g.n, 0);
    std::vector<std::string> trace;
    if (remaining > 0) {
        std::vector<int> verts;
        for (int v = 0; v < g.n; ++v)
            if (active[v]) verts.push_back(v);
        auto sub = induced_subgraph(g, verts);
        auto base = decide_k(sub.graph, Mode::pcf, bound);
        if (!base)
            throw internal_contradiction("residual base graph not colorable within the bound", g,
                                         colors, "certificate base case");
        for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
            colors[sub.to_parent[i]] = base->color[i];
        trace.push_back("base case on " + std::to_string(remaining) + " vertices");
    }

    for (std::size_t i = applied; i-- > 0;) {
        const auto& s = cert.steps[i];
        std::vector<int> svs{s.u};
        active[s.u] = 1;
        if (s.pair_step) {
            svs.push_back(s.v);
            active[s.v] = 1;
        }
        if (!extend_within(g, active, colors, svs, bound))
            throw internal_contradiction("guaranteed reinsertion step failed", g, colors,
                                         s.pair_step ? "reinsert edge pair" : "reinsert low vertex");
        trace.push_back(s.pair_step ? "reinsert pair (" + std::to_string(s.u) + "," +
                                          std::to_string(s.v) + ")"
                                    : "reinsert low vertex " + std::to_string(s.u));
    }
    return detail::checked_outcome(g, std::move(colors), bound, bound, std::move(trace));
}

// ---------------------------------------------------------------------------
// Claw-free graphs (bound 2*Delta+1).

inline std::optional<std::array<int, 4>> find_claw(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        const auto& nb = g.adj[v];
        int d = static_cast<int>(nb.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (g.has_edge(nb[i], nb[j])) continue;
                for (int k = j + 1; k < d; ++k)
                    if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]))
                        return std::array<int, 4>{v, nb[i], nb[j], nb[k]};
            }
    }
    return std::nullopt;
}

inline ConstructionOutcome color_clawfree(const Graph& g) {
    if (auto claw = find_claw(g))
        throw not_claw_free("input contains an induced claw",
                            std::vector<int>(claw->begin(), claw->end()));
    int bound = 2 * g.max_degree() + 1;

    std::vector<char> active(g.n, 1);
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    int remaining = g.n;
    std::vector<std::pair<int, int>> removed_pairs;
    while (remaining > 6) {
        int eu = -1, ev = -1;
        for (int u = 0; u < g.n && eu < 0; ++u) {
            if (!active[u]) continue;
            for (int v : g.adj[u])
                if (v > u && active[v]) {
                    eu = u;
                    ev = v;
                    break;
                }
        }
        if (eu < 0) break;  // edgeless remainder
        removed_pairs.emplace_back(eu, ev);
        active[eu] = active[ev] = 0;
        remaining -= 2;
    }

    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v)
        if (active[v]) verts.push_back(v);
    std::vector<int> colors(g.n, 0);
    std::vector<std::string> trace;
    if (!verts.empty()) {
        auto sub = induced_subgraph(g, verts);
        auto base = decide_k(sub.graph, Mode::pcf, bound);
        if (!base)
            throw internal_contradiction("claw-free base not colorable within 2D+1", g, colors,
                                         "claw-free base case");
        for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
            colors[sub.to_parent[i]] = base->color[i];
        trace.push_back("base case on " + std::to_string(verts.size()) + " vertices");
    }
    for (std::size_t i = removed_pairs.size(); i-- > 0;) {
        auto [u, v] = removed_pairs[i];
        active[u] = active[v] = 1;
        if (!extend_within(g, active, colors, {u, v}, bound))
            throw internal_contradiction("claw-free pair reinsertion failed", g, colors,
                                         "reinsert adjacent pair");
        trace.push_back("reinsert pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    return detail::checked_outcome(g, std::move(colors), bound, bound, std::move(trace));
}

// ---------------------------------------------------------------------------
// Chordal graphs (bound 2*Delta+1): reverse perfect elimination order;
// each simplicial vertex avoids its clique's colors and, for each clique
// member with a single uniquely-occurring color so far, that color.

inline ConstructionOutcome color_chordal(const Graph& g) {
    auto peo = lexbfs_peo(g);
    if (!peo) throw not_chordal("input graph is not chordal");
    int bound = 2 * g.max_degree() + 1;
    if (g.n == 0) return detail::checked_outcome(g, {}, std::max(bound, 1), std::max(bound, 1), {});

    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[(*peo)[i]] = i;
    std::vector<int> colors(g.n, 0);
    std::vector<char> forbidden(bound + 1, 0);
    for (int i = g.n - 1; i >= 0; --i) {
        int v = (*peo)[i];
        std::fill(forbidden.begin(), forbidden.end(), 0);
        for (int w : g.adj[v]) {
            if (pos[w] < i) continue;  // colored later in this sweep
            forbidden[colors[w]] = 1;
            // sole unique color of w among its colored neighbors, if any
            std::vector<int> colored_nbrs;
            for (int u : g.adj[w])
                if (colors[u]) colored_nbrs.push_back(u);
            int sole = 0;
            for (int u : colored_nbrs) {
                int c = colors[u], cnt = 0;
                for (int z : colored_nbrs) cnt += colors[z] == c;
                if (cnt == 1) {
                    if (sole && sole != c) {
                        sole = -1;  // several unique colors, none is critical
                        break;
                    }
                    sole = c;
                }
            }
            if (sole > 0) forbidden[sole] = 1;
        }
        for (int c = 1; c <= bound; ++c)
            if (!forbidden[c]) {
                colors[v] = c;
                break;
            }
        if (!colors[v])
            throw internal_contradiction("no free color at simplicial reinsertion", g, colors,
                                         "chordal sweep");
    }
    return detail::checked_outcome(g, std::move(colors), bound, bound,
                                   {"reverse perfect elimination sweep"});
}

// ---------------------------------------------------------------------------
// Five-cycle block machinery shared by the pendant-edge coloring and the
// sparse recursion.

namespace detail {

// Cyclic order of a 5-cycle block starting at w1.
inline std::vector<int> block_cycle_order(const Graph& g, const std::vector<int>& block, int w1) {
    std::vector<char> in_block(g.n, 0);
    for (int v : block) in_block[v] = 1;
    std::vector<int> order{w1};
    int prev = -1, cur = w1;
    while (order.size() < block.size()) {
        int next = -1;
        for (int u : g.adj[cur])
            if (u != prev && u != w1 && in_block[u]) {
                next = u;
                break;
            }
        if (next < 0) throw internal_contradiction("block is not a cycle", g, {}, "block walk");
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

// Color the four uncolored vertices of a 5-cycle block whose entry vertex
// w1 is colored: with alpha = c(w1), beta = a color occurring exactly once
// among w1's colored neighbors and {gamma, delta} the remaining two colors,
// the pattern around the cycle is (gamma, delta, beta, gamma).
inline void append_c5_block(const Graph& g, std::vector<int>& colors,
                            const std::vector<int>& cycle_order) {
    int w1 = cycle_order[0];
    std::vector<int> colored_nbrs;
    for (int u : g.adj[w1])
        if (colors[u]) colored_nbrs.push_back(u);
    int beta = unique_color_in(colors, colored_nbrs);
    if (beta == 0)
        throw internal_contradiction("block anchor lost its singleton color", g, colors,
                                     "five-cycle block extension");
    int alpha = colors[w1];
    int gamma = 0, delta = 0;
    for (int c = 1; c <= 4; ++c) {
        if (c == alpha || c == beta) continue;
        (gamma ? delta : gamma) = c;
    }
    colors[cycle_order[1]] = gamma;
    colors[cycle_order[2]] = delta;
    colors[cycle_order[3]] = beta;
    colors[cycle_order[4]] = gamma;
}

// Repeatedly extend across 5-cycle blocks having exactly one colored
// vertex, until every block in the list is fully colored.
inline void process_c5_blocks(const Graph& g, std::vector<int>& colors,
                              const std::vector<std::vector<int>>& blks) {
    std::vector<char> done(blks.size(), 0);
    while (true) {
        int pick = -1, anchor = -1;
        for (std::size_t i = 0; i < blks.size() && pick < 0; ++i) {
            if (done[i]) continue;
            int colored = 0, cv = -1;
            for (int v : blks[i])
                if (colors[v])
                    ++colored, cv = v;
            if (colored == static_cast<int>(blks[i].size())) {
                done[i] = 1;
                continue;
            }
            if (colored == 1) {
                pick = static_cast<int>(i);
                anchor = cv;
            }
        }
        if (pick < 0) break;
        if (blks[pick].size() != 5)
            throw internal_contradiction("non-pentagon block in a five-cycle region", g, colors,
                                         "five-cycle block extension");
        append_c5_block(g, colors, block_cycle_order(g, blks[pick], anchor));
        done[pick] = 1;
    }
    for (std::size_t i = 0; i < blks.size(); ++i)
        if (!done[i]) {
            bool full = true;
            for (int v : blks[i]) full &= colors[v] != 0;
            if (!full)
                throw internal_contradiction("unreachable block in five-cycle region", g, colors,
                                             "five-cycle block extension");
        }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// A graph whose blocks are all 5-cycles, plus one pendant edge: pcf
// 4-colorable.  Base pentagon colored explicitly, remaining blocks added
// outward.

inline Coloring color_f_pendant(const Graph& h) {
    int leaf = -1;
    for (int v = 0; v < h.n; ++v)
        if (h.degree(v) == 1) {
            if (leaf >= 0) throw not_f_plus_pendant("more than one pendant vertex");
            leaf = v;
        }
    if (leaf < 0) throw not_f_plus_pendant("no pendant vertex");
    std::vector<int> rest;
    for (int v = 0; v < h.n; ++v)
        if (v != leaf) rest.push_back(v);
    auto core = induced_subgraph(h, rest);
    if (!is_connected(core.graph) || !is_in_f(core.graph))
        throw not_f_plus_pendant("graph minus its pendant vertex is not a five-cycle block graph");
    int p = h.adj[leaf][0];

    auto dec = blocks(h);
    std::vector<std::vector<int>> c5_blocks;
    int base_idx = -1;
    for (const auto& b : dec.blocks) {
        if (b.size() != 5) continue;  // skip the pendant bridge
        c5_blocks.push_back(b);
        if (base_idx < 0 && std::binary_search(b.begin(), b.end(), p))
            base_idx = static_cast<int>(c5_blocks.size()) - 1;
    }
    if (base_idx < 0) throw not_f_plus_pendant("attachment vertex not on a pentagon");

    std::vector<int> colors(h.n, 0);
    auto cyc = detail::block_cycle_order(h, c5_blocks[base_idx], p);
    colors[leaf] = 1;
    colors[p] = 2;
    colors[cyc[1]] = 3;
    colors[cyc[2]] = 1;
    colors[cyc[3]] = 4;
    colors[cyc[4]] = 3;
    detail::process_c5_blocks(h, colors, c5_blocks);

    Coloring out{colors, 4};
    if (!verify(h, out, Mode::pcf).ok)
        throw internal_contradiction("pendant construction failed verification", h, colors,
                                     "final check");
    return out;
}

// ---------------------------------------------------------------------------
// Sparse regimes by maximum average degree.

enum class MadRegime { below_8_3, below_5_2, below_24_11 };

struct SparseResult {
    // Empty exactly when the graph is a five-cycle block graph under the
    // strictest regime (those need five colors).
    std::optional<ConstructionOutcome> outcome;
    bool f_member = false;
};

namespace detail {

inline void lift_colors(const InducedSubgraph& sub, const std::vector<int>& sub_colors,
                        std::vector<int>& parent_colors) {
    for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
        parent_colors[sub.to_parent[i]] = sub_colors[i];
}

// Recursion for mad < 5/2 (palette 5): peel low vertices, remove adjacent
// 2-vertices, else remove a 3-vertex with three 2-neighbors.
inline std::vector<int> pcf5_recurse(const Graph& h, std::vector<std::string>& trace) {
    if (h.n <= 6) {
        auto base = decide_k(h, Mode::pcf, 5);
        if (!base)
            throw internal_contradiction("small base not 5-colorable", h, {}, "sparse base");
        trace.push_back("base case on " + std::to_string(h.n) + " vertices");
        return base->color;
    }
    std::vector<char> active(h.n, 1);
    auto recurse_minus = [&](const std::vector<int>& removed, const std::string& why) {
        std::vector<int> keep;
        std::vector<char> gone(h.n, 0);
        for (int v : removed) gone[v] = 1;
        for (int v = 0; v < h.n; ++v)
            if (!gone[v]) keep.push_back(v);
        auto sub = induced_subgraph(h, keep);
        auto rec = pcf5_recurse(sub.graph, trace);
        std::vector<int> colors(h.n, 0);
        lift_colors(sub, rec, colors);
        if (!extend_within(h, active, colors, removed, 5))
            throw internal_contradiction("guaranteed sparse extension failed", h, colors,
                                         "mad<5/2 reinsertion");
        trace.push_back(why);
        return colors;
    };

    for (int v = 0; v < h.n; ++v)
        if (h.degree(v) <= 1) return recurse_minus({v}, "reinsert low vertex");
    for (int u = 0; u < h.n; ++u) {
        if (h.degree(u) != 2) continue;
        for (int v : h.adj[u])
            if (v > u && h.degree(v) == 2)
                return recurse_minus({u, v}, "reinsert adjacent 2-vertices");
    }
    for (int v = 0; v < h.n; ++v) {
        if (h.degree(v) != 3) continue;
        bool all2 = true;
        for (int u : h.adj[v]) all2 &= h.degree(u) == 2;
        if (!all2) continue;
        std::vector<int> removed{v};
        for (int u : h.adj[v]) removed.push_back(u);
        return recurse_minus(removed, "reinsert 3-vertex with its three 2-neighbors");
    }
    throw internal_contradiction("no sparse configuration found below mad 5/2", h, {},
                                 "mad<5/2 structure search");
}

inline std::vector<int> pcf4_recurse(const Graph& h, std::vector<std::string>& trace);

// Map a cycle coloring around a 2-regular connected graph.
inline std::vector<int> cycle_colors_on(const Graph& h) {
    std::vector<int> order{0};
    int prev = -1, cur = 0;
    while (static_cast<int>(order.size()) < h.n) {
        int next = h.adj[cur][0] == prev ? h.adj[cur][1] : h.adj[cur][0];
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    auto pattern = color_cycle(h.n);
    std::vector<int> colors(h.n, 0);
    for (int i = 0; i < h.n; ++i) colors[order[i]] = pattern.coloring.color[i];
    return colors;
}

// Recursion for mad < 24/11 (palette 4).  Preconditions: h connected and
// not a five-cycle block graph; those cases are diverted by the callers.
inline std::vector<int> pcf4_recurse(const Graph& h, std::vector<std::string>& trace) {
    if (h.n >= 2 && is_in_f(h))
        throw internal_contradiction("five-cycle block graph reached the 4-color recursion", h,
                                     {}, "membership guard");
    if (h.n <= 6) {
        auto base = decide_k(h, Mode::pcf, 4);
        if (!base)
            throw internal_contradiction("small base not 4-colorable", h, {}, "sparse base");
        trace.push_back("base case on " + std::to_string(h.n) + " vertices");
        return base->color;
    }

    // Low vertex: either the rest is a five-cycle block graph (then the
    // whole graph is one plus a pendant edge) or recurse and extend.
    for (int u = 0; u < h.n; ++u) {
        if (h.degree(u) != 1) continue;
        std::vector<int> keep;
        for (int v = 0; v < h.n; ++v)
            if (v != u) keep.push_back(v);
        auto sub = induced_subgraph(h, keep);
        if (is_in_f(sub.graph)) {
            trace.push_back("pendant edge on a five-cycle block graph");
            return color_f_pendant(h).color;
        }
        auto rec = pcf4_recurse(sub.graph, trace);
        std::vector<int> colors(h.n, 0);
        lift_colors(sub, rec, colors);
        std::vector<char> active(h.n, 1);
        if (!extend_within(h, active, colors, {u}, 4))
            throw internal_contradiction("pendant reinsertion failed", h, colors,
                                         "mad<24/11 low vertex");
        trace.push_back("reinsert low vertex");
        return colors;
    }

    if (h.max_degree() == 2) {
        trace.push_back("cycle pattern on " + std::to_string(h.n) + " vertices");
        return cycle_colors_on(h);
    }

    auto thread = find_thread(h, 4);
    if (!thread)
        throw internal_contradiction("no 4-thread below mad 24/11", h, {},
                                     "mad<24/11 thread search");
    int e0 = thread->u, e5 = thread->v;
    const auto& internal = thread->internal;
    std::vector<char> in_internal(h.n, 0);
    for (int v : internal) in_internal[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < h.n; ++v)
        if (!in_internal[v]) keep.push_back(v);
    auto gprime = induced_subgraph(h, keep);
    auto comps = components(gprime.graph);

    std::vector<InducedSubgraph> comp_subs;
    std::vector<char> comp_in_f;
    for (const auto& comp : comps) {
        std::vector<int> parent_verts;
        for (int v : comp) parent_verts.push_back(gprime.to_parent[v]);
        comp_subs.push_back(induced_subgraph(h, parent_verts));
        comp_in_f.push_back(comp_subs.back().graph.n >= 2 && is_in_f(comp_subs.back().graph));
    }
    bool any_f = std::any_of(comp_in_f.begin(), comp_in_f.end(), [](char c) { return c != 0; });

    std::vector<int> colors(h.n, 0);
    if (!any_f) {
        for (std::size_t i = 0; i < comp_subs.size(); ++i)
            lift_colors(comp_subs[i], pcf4_recurse(comp_subs[i].graph, trace), colors);
        std::vector<char> active(h.n, 1);
        if (!extend_within(h, active, colors, internal, 4))
            throw internal_contradiction("thread reinsertion failed", h, colors,
                                         "mad<24/11 thread extension");
        trace.push_back("reinsert a 4-thread");
        return colors;
    }

    if (e0 == e5)
        throw internal_contradiction("cycle-thread on a five-cycle block component", h, {},
                                     "mad<24/11 membership guard");

    if (comp_subs.size() == 2) {
        // Color each side together with its adjacent thread vertex as a
        // pendant, normalize the palettes, and join with the two spare
        // colors in the middle.
        int v1 = internal.front(), v4 = internal.back();
        for (int side = 0; side < 2; ++side) {
            int endpoint = side == 0 ? e0 : e5;
            int pend = side == 0 ? v1 : v4;
            std::size_t ci =
                std::binary_search(comp_subs[0].to_parent.begin(), comp_subs[0].to_parent.end(),
                                   endpoint)
                    ? 0
                    : 1;
            auto region = comp_subs[ci].to_parent;
            region.push_back(pend);
            auto sub = induced_subgraph(h, region);
            auto rec = pcf4_recurse(sub.graph, trace);
            std::vector<int> perm(5, 0);
            std::vector<int> local(h.n, 0);
            lift_colors(sub, rec, local);
            // send c(pendant) -> 1 and c(endpoint) -> 2
            perm[local[pend]] = 1;
            perm[local[endpoint]] = 2;
            int next = 3;
            for (int c = 1; c <= 4; ++c)
                if (!perm[c]) perm[c] = next++;
            for (int v : sub.to_parent) colors[v] = perm[local[v]];
        }
        colors[internal[1]] = 3;
        colors[internal[2]] = 4;
        trace.push_back("two block components rejoined through the thread");
        return colors;
    }

    // Single component, a five-cycle block graph containing both endpoints.
    const auto& comp = comp_subs[0];
    auto comp_blocks = blocks(comp.graph);
    std::vector<char> is_cut_local(comp.graph.n, 0);
    for (int v : comp_blocks.cut_vertices) is_cut_local[v] = 1;
    std::vector<int> to_local(h.n, -1);
    for (std::size_t i = 0; i < comp.to_parent.size(); ++i)
        to_local[comp.to_parent[i]] = static_cast<int>(i);

    bool e0_cut = is_cut_local[to_local[e0]], e5_cut = is_cut_local[to_local[e5]];
    if (!(e0_cut && e5_cut)) {
        // Attach the near thread vertex as a pendant on the side opposite
        // the non-cut endpoint, then extend over the remaining three.
        std::vector<int> inner(internal.begin(), internal.end());
        if (e5_cut) std::reverse(inner.begin(), inner.end());
        int lead = inner.front();
        auto region = comp.to_parent;
        region.push_back(lead);
        auto sub = induced_subgraph(h, region);
        auto rec = pcf4_recurse(sub.graph, trace);
        lift_colors(sub, rec, colors);
        std::vector<char> active(h.n, 1);
        std::vector<int> middle(inner.begin() + 1, inner.end());
        if (!extend_within(h, active, colors, middle, 4))
            throw internal_contradiction("thread tail extension failed", h, colors,
                                         "mad<24/11 block component");
        trace.push_back("thread tail extension into a block component");
        return colors;
    }

    // Both endpoints are cut vertices: strip a lobe hanging at e0 that
    // avoids e5, color the remainder recursively, then grow the lobe back
    // block by block.
    std::vector<int> without_e0;
    for (int v : comp.to_parent)
        if (v != e0) without_e0.push_back(v);
    auto punct = induced_subgraph(h, without_e0);
    auto pieces = components(punct.graph);
    std::vector<int> lobe;  // parent ids, excluding e0
    for (const auto& piece : pieces) {
        bool has_e5 = false;
        for (int v : piece) has_e5 |= punct.to_parent[v] == e5;
        if (!has_e5) {
            for (int v : piece) lobe.push_back(punct.to_parent[v]);
            break;
        }
    }
    if (lobe.empty())
        throw internal_contradiction("cut vertex without a detachable lobe", h, {},
                                     "mad<24/11 lobe");
    std::vector<char> in_lobe(h.n, 0);
    for (int v : lobe) in_lobe[v] = 1;
    std::vector<int> rest;
    for (int v = 0; v < h.n; ++v)
        if (!in_lobe[v]) rest.push_back(v);
    auto sub = induced_subgraph(h, rest);
    auto rec = pcf4_recurse(sub.graph, trace);
    lift_colors(sub, rec, colors);

    std::vector<int> region = lobe;
    region.push_back(e0);
    auto lobe_sub = induced_subgraph(h, region);
    auto lobe_blocks = blocks(lobe_sub.graph);
    std::vector<std::vector<int>> parent_blocks;
    for (const auto& b : lobe_blocks.blocks) {
        std::vector<int> pb;
        for (int v : b) pb.push_back(lobe_sub.to_parent[v]);
        parent_blocks.push_back(std::move(pb));
    }
    detail::process_c5_blocks(h, colors, parent_blocks);
    trace.push_back("five-cycle lobe regrown block by block");
    return colors;
}

}  // namespace detail

inline SparseResult color_sparse(const Graph& g, MadRegime regime) {
    if (!is_connected(g)) throw not_connected("sparse coloring expects a connected graph");
    Frac m = mad(g);
    Frac threshold = regime == MadRegime::below_8_3   ? Frac(8, 3)
                     : regime == MadRegime::below_5_2 ? Frac(5, 2)
                                                      : Frac(24, 11);
    if (!(m < threshold))
        throw hypothesis_violated("maximum average degree " + std::to_string(m.num) + "/" +
                                  std::to_string(m.den) + " not below the regime threshold");

    SparseResult out;
    if (regime == MadRegime::below_8_3) {
        auto cert = ab_certificate(g, 2, 3);
        if (!cert.certificate)
            throw internal_contradiction("no (2,3)-elimination below mad 8/3", g, {},
                                         "mad<8/3 structure search");
        out.outcome = color_ab(g, *cert.certificate);
        out.outcome->trace.insert(out.outcome->trace.begin(), "(2,3)-certificate route");
        return out;
    }
    if (regime == MadRegime::below_5_2) {
        std::vector<std::string> trace;
        auto colors = detail::pcf5_recurse(g, trace);
        out.outcome = detail::checked_outcome(g, std::move(colors), 5, 5, std::move(trace));
        return out;
    }
    if (g.n >= 2 && is_in_f(g)) {
        out.f_member = true;
        return out;
    }
    std::vector<std::string> trace;
    auto colors = detail::pcf4_recurse(g, trace);
    out.outcome = detail::checked_outcome(g, std::move(colors), 4, 4, std::move(trace));
    return out;
}

// ---------------------------------------------------------------------------
// Girth >= 6 with branch vertices pairwise at distance >= 6 (bound 4):
// peel low vertices, fall back to the cycle pattern, otherwise give every
// branch vertex color 4 and its matched thread a path coloring starting
// 1...2; leftover threads get 2...2 path colorings.

inline ConstructionOutcome color_thread66(const Graph& g) {
    if (!is_connected(g)) throw hypothesis_violated("input must be connected");
    if (girth(g) < 6) throw hypothesis_violated("girth below 6");
    auto big = big_vertex_distances(g);
    if (big.min_distance < 6) throw hypothesis_violated("branch vertices closer than 6");

    std::vector<char> active(g.n, 1);
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<int> peeled;
    int remaining = g.n;
    while (remaining > 1) {
        int low = -1;
        for (int v = 0; v < g.n && low < 0; ++v)
            if (active[v] && deg[v] <= 1) low = v;
        if (low < 0) break;
        peeled.push_back(low);
        active[low] = 0;
        --remaining;
        for (int u : g.adj[low])
            if (active[u]) --deg[u];
    }

    std::vector<int> core_verts;
    for (int v = 0; v < g.n; ++v)
        if (active[v]) core_verts.push_back(v);
    auto core = induced_subgraph(g, core_verts);
    std::vector<int> colors(g.n, 0);
    std::vector<std::string> trace;

    if (core.graph.n == 1) {
        colors[core.to_parent[0]] = 1;
        trace.emplace_back("tree core");
    } else if (core.graph.max_degree() == 2) {
        auto cyc = detail::cycle_colors_on(core.graph);
        detail::lift_colors(core, cyc, colors);
        trace.emplace_back("cycle core");
    } else {
        auto assignment = thread_incidence_matching(core.graph);
        for (auto& [v_local, t] : assignment.assigned) {
            colors[core.to_parent[v_local]] = 4;
            int len = static_cast<int>(t.internal.size());
            if (len < 5)
                throw internal_contradiction("matched thread shorter than five vertices", g,
                                             colors, "thread matching");
            auto path = color_path_endpoints(len, 1, 2);
            for (int i = 0; i < len; ++i)
                colors[core.to_parent[t.internal[i]]] = path.color[i];
        }
        for (const auto& t : maximal_threads(core.graph)) {
            if (t.internal.empty() || colors[core.to_parent[t.internal[0]]]) continue;
            int len = static_cast<int>(t.internal.size());
            if (len < 5)
                throw internal_contradiction("leftover thread shorter than five vertices", g,
                                             colors, "thread coloring");
            auto path = color_path_endpoints(len, 2, 2);
            for (int i = 0; i < len; ++i)
                colors[core.to_parent[t.internal[i]]] = path.color[i];
        }
        trace.emplace_back("matched threads from " + std::to_string(assignment.assigned.size()) +
                           " branch vertices");
    }

    for (std::size_t i = peeled.size(); i-- > 0;) {
        int u = peeled[i];
        active[u] = 1;
        if (!extend_within(g, active, colors, {u}, 4))
            throw internal_contradiction("peeled vertex reinsertion failed", g, colors,
                                         "low-vertex unwind");
    }
    return detail::checked_outcome(g, std::move(colors), 4, 4, std::move(trace));
}

// ---------------------------------------------------------------------------
// Outerplanar graphs of girth >= 6 (bound 4).  Outerplanarity is asserted
// by the caller; the girth hypothesis is checked, and the guaranteed
// (g-2)-thread is searched for directly.

namespace detail {

inline std::vector<int> outerplanar6_recurse(const Graph& h, std::vector<std::string>& trace) {
    if (h.n <= 6) {
        auto base = decide_k(h, Mode::pcf, 4);
        if (!base)
            throw internal_contradiction("small outerplanar base not 4-colorable", h, {},
                                         "outerplanar base");
        trace.push_back("base case on " + std::to_string(h.n) + " vertices");
        return base->color;
    }
    for (int u = 0; u < h.n; ++u) {
        if (h.degree(u) > 1) continue;
        std::vector<int> keep;
        for (int v = 0; v < h.n; ++v)
            if (v != u) keep.push_back(v);
        auto sub = induced_subgraph(h, keep);
        auto rec = outerplanar6_recurse(sub.graph, trace);
        std::vector<int> colors(h.n, 0);
        lift_colors(sub, rec, colors);
        std::vector<char> active(h.n, 1);
        if (!extend_within(h, active, colors, {u}, 4))
            throw internal_contradiction("outerplanar pendant reinsertion failed", h, colors,
                                         "low vertex");
        trace.push_back("reinsert low vertex");
        return colors;
    }
    if (h.max_degree() == 2) {
        trace.push_back("cycle pattern on " + std::to_string(h.n) + " vertices");
        return cycle_colors_on(h);
    }

    auto thread = find_thread(h, 4);
    if (!thread)
        throw not_outerplanar_evidence(
            "no 4-thread found; the outerplanarity assertion looks false");
    std::vector<char> in_internal(h.n, 0);
    for (int v : thread->internal) in_internal[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < h.n; ++v)
        if (!in_internal[v]) keep.push_back(v);
    auto gprime = induced_subgraph(h, keep);
    std::vector<int> colors(h.n, 0);
    for (const auto& comp : components(gprime.graph)) {
        std::vector<int> parent_verts;
        for (int v : comp) parent_verts.push_back(gprime.to_parent[v]);
        auto sub = induced_subgraph(h, parent_verts);
        lift_colors(sub, outerplanar6_recurse(sub.graph, trace), colors);
    }
    std::vector<char> active(h.n, 1);
    if (!extend_within(h, active, colors, thread->internal, 4))
        throw internal_contradiction("outerplanar thread extension failed", h, colors,
                                     "thread reinsertion");
    trace.push_back("reinsert a 4-thread");
    return colors;
}

}  // namespace detail

inline ConstructionOutcome color_outerplanar6(const Graph& g) {
    if (!is_connected(g)) throw hypothesis_violated("input must be connected");
    if (girth(g) < 6) throw hypothesis_violated("girth below 6");
    std::vector<std::string> trace;
    auto colors = detail::outerplanar6_recurse(g, trace);
    return detail::checked_outcome(g, std::move(colors), 4, 4, std::move(trace));
}

// ---------------------------------------------------------------------------
// Planar graphs by girth (planarity asserted by the caller): girth >= 24
// gives 4 colors, >= 10 gives 5, >= 7 gives 6 via a (2,3)-certificate.

inline ConstructionOutcome color_planar_girth(const Graph& g) {
    if (!is_connected(g)) throw hypothesis_violated("input must be connected");
    int gg = girth(g);
    if (gg >= 10) {
        auto res = color_sparse(g, gg >= 24 ? MadRegime::below_24_11 : MadRegime::below_5_2);
        if (!res.outcome)
            throw internal_contradiction("five-cycle block graph with girth >= 10", g, {},
                                         "planar dispatch");
        return *res.outcome;
    }
    if (gg >= 7) {
        auto cert = ab_certificate(g, 2, 3);
        if (!cert.certificate)
            throw hypothesis_violated(
                "no (2,3)-elimination; a planar graph of girth >= 7 always has one");
        return color_ab(g, *cert.certificate);
    }
    throw hypothesis_violated("girth below 7 is outside the planar bounds");
}

}  // namespace pcf
