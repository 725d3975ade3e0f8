#pragma once

// Exhaustive solvers for the chromatic variants, and the local extension
// search the constructive colorers use to realize inductive proof steps.
//
// decide_k backtracks over vertices in reverse peeling order.  Properness
// is pruned at assignment time.  The neighborhood condition (cf/odd) of a
// vertex is decided the moment its last neighbor gets colored: a vertex
// whose fully-colored neighborhood has no witness color kills the branch
// immediately.  Color symmetry is broken by allowing at most one fresh
// color per assignment; sound for all four variants since the verdicts are
// invariant under palette permutation.

#include <chrono>

#include "pcf/stats.hpp"
#include "pcf/verify.hpp"

namespace pcf {

struct too_large_frontier : error { using error::error; };

namespace detail {

class KColorSearch {
public:
    KColorSearch(const Graph& g, Mode mode, int k)
        : g_(g), mode_(mode), k_(k), color_(g.n, 0), uncolored_nbrs_(g.n), scratch_(k + 1, 0) {
        auto peel = peel_min_degree(g);
        order_.assign(peel.order.rbegin(), peel.order.rend());
        for (int v = 0; v < g.n; ++v) uncolored_nbrs_[v] = g.degree(v);
        need_proper_ = mode != Mode::cf;
        need_condition_ = mode != Mode::proper;
    }

    std::optional<Coloring> run() {
        if (g_.n == 0) return Coloring{{}, k_};
        if (k_ <= 0) return std::nullopt;
        if (assign(0, 0)) return Coloring{color_, k_};
        return std::nullopt;
    }

    long long nodes() const { return nodes_; }

private:
    const Graph& g_;
    Mode mode_;
    int k_;
    std::vector<int> order_, color_, uncolored_nbrs_;
    std::vector<int> scratch_;
    bool need_proper_ = true, need_condition_ = true;
    long long nodes_ = 0;

    bool condition_holds(int v) {
        bool ok = false;
        for (int u : g_.adj[v]) ++scratch_[color_[u]];
        for (int u : g_.adj[v]) {
            int cnt = scratch_[color_[u]];
            if (mode_ == Mode::odd ? (cnt % 2 == 1) : (cnt == 1)) {
                ok = true;
                break;
            }
        }
        for (int u : g_.adj[v]) scratch_[color_[u]] = 0;
        return ok;
    }

    bool assign(int pos, int max_used) {
        if (pos == g_.n) return true;
        int v = order_[pos];
        int limit = std::min(k_, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            ++nodes_;
            if (need_proper_) {
                bool clash = false;
                for (int u : g_.adj[v])
                    if (color_[u] == c) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
            }
            color_[v] = c;
            bool feasible = true;
            int undone = 0;
            for (int u : g_.adj[v]) {
                --uncolored_nbrs_[u];
                ++undone;
                if (need_condition_ && uncolored_nbrs_[u] == 0 && !condition_holds(u)) {
                    feasible = false;
                    break;
                }
            }
            if (feasible && assign(pos + 1, std::max(max_used, c))) return true;
            for (int u : g_.adj[v]) {
                if (undone == 0) break;
                ++uncolored_nbrs_[u];
                --undone;
            }
            color_[v] = 0;
        }
        return false;
    }
};

}  // namespace detail

// Witness k-coloring under the given variant, or proof of absence by
// exhausted search.
inline std::optional<Coloring> decide_k(const Graph& g, Mode mode, int k,
                                        long long* nodes_explored = nullptr) {
    detail::KColorSearch search(g, mode, k);
    auto result = search.run();
    if (nodes_explored) *nodes_explored += search.nodes();
    return result;
}

struct SolveResult {
    Mode variant = Mode::pcf;
    int value = 0;
    Coloring witness;
    long long nodes_explored = 0;
    double seconds = 0.0;
};

inline SolveResult chromatic_value(const Graph& g, Mode mode) {
    auto start = std::chrono::steady_clock::now();
    SolveResult res;
    res.variant = mode;
    int k = g.n == 0 ? 0 : 1;
    for (;; ++k) {
        auto witness = decide_k(g, mode, k, &res.nodes_explored);
        if (witness) {
            res.value = k;
            res.witness = *witness;
            break;
        }
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

// Exhaustive pcf extension of a partial coloring to the vertex set S,
// restricted to the subgraph induced by the active mask.  `colors` must
// assign every active vertex outside S; S entries are overwritten on
// success and zeroed on failure.  Acceptance: properness on active edges
// touching S, and the unique-color condition at every vertex of S and
// every active neighbor of S (vertices isolated within the mask are
// exempt).  Assignments are tried in lexicographic color order.
inline bool extend_within(const Graph& g, const std::vector<char>& active,
                          std::vector<int>& colors, std::vector<int> s_verts, int k) {
    std::sort(s_verts.begin(), s_verts.end());
    const int s = static_cast<int>(s_verts.size());
    std::vector<char> in_s(g.n, 0);
    for (int v : s_verts) in_s[v] = 1;

    // Vertices whose neighborhood condition must be re-checked.
    std::vector<int> to_check = s_verts;
    for (int v : s_verts)
        for (int u : g.adj[v])
            if (active[u] && !in_s[u]) to_check.push_back(u);
    std::sort(to_check.begin(), to_check.end());
    to_check.erase(std::unique(to_check.begin(), to_check.end()), to_check.end());

    auto valid = [&]() {
        for (int v : s_verts)
            for (int u : g.adj[v])
                if (active[u] && colors[u] == colors[v]) return false;
        std::vector<int> nbhd;
        for (int v : to_check) {
            nbhd.clear();
            for (int u : g.adj[v])
                if (active[u]) nbhd.push_back(u);
            if (nbhd.empty()) continue;
            if (unique_color_in(colors, nbhd) == 0) return false;
        }
        return true;
    };

    std::vector<int> assignment(s, 1);
    if (s == 0) return valid();
    while (true) {
        for (int i = 0; i < s; ++i) colors[s_verts[i]] = assignment[i];
        if (valid()) return true;
        int i = s - 1;
        while (i >= 0 && assignment[i] == k) {
            assignment[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++assignment[i];
    }
    for (int v : s_verts) colors[v] = 0;
    return false;
}

// Public form: extend a pcf coloring of g - S to all of g with palette k.
// base must color exactly the vertices outside S.
inline std::optional<Coloring> extend_locally(const Graph& g, const Coloring& base,
                                              const std::vector<int>& s_verts, int k) {
    if (s_verts.size() > 6)
        throw too_large_frontier("local extension limited to |S| <= 6");
    std::vector<char> in_s(g.n, 0);
    for (int v : s_verts) {
        if (v < 0 || v >= g.n) throw invalid_spec("extension vertex out of range");
        in_s[v] = 1;
    }
    if (static_cast<int>(base.color.size()) != g.n)
        throw partial_coloring("base coloring has wrong length");
    for (int v = 0; v < g.n; ++v) {
        if (in_s[v] && base.color[v] != 0)
            throw invalid_spec("extension vertex already colored in base");
        if (!in_s[v] && base.color[v] == 0)
            throw partial_coloring("base leaves a non-extension vertex uncolored");
    }
    std::vector<char> active(g.n, 1);
    std::vector<int> colors = base.color;
    if (!extend_within(g, active, colors, s_verts, k)) return std::nullopt;
    return Coloring{colors, std::max(base.k, k)};
}

}  // namespace pcf
