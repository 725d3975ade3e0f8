#pragma once

// Exhaustive small-graph experiments: connected-graph enumeration up to
// isomorphism (brute canonical forms, fine to n = 8), tree enumeration,
// counterexample search for the max-degree-plus-one conjecture, and the
// empirical profile of the extremal function Delta -> max chi_pcf.

#include <functional>
#include <set>
#include <thread>

#include "pcf/exact.hpp"
#include "pcf/io.hpp"

namespace pcf {

namespace detail {

// Lexicographically least column-order bit code over all relabelings.
// Columns are determined once their endpoints are placed, so a placement
// prefix pins a code prefix and dominated branches prune early.
inline std::vector<uint8_t> canonical_code(const Graph& g) {
    int n = g.n;
    std::vector<uint8_t> best;
    bool have_best = false;
    std::vector<int> perm(n, -1);
    std::vector<char> used(n, 0);
    std::vector<uint8_t> cur;
    cur.reserve(n * (n - 1) / 2);

    // tight: cur equals the best code's prefix so far, so per-bit pruning
    // is sound.  A best installed by a descendant extends the current cur,
    // which keeps the invariant across siblings.
    std::function<void(int, bool)> place = [&](int depth, bool tight) {
        if (depth == n) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::size_t base = cur.size();
            bool pruned = false;
            bool t = tight && have_best;
            for (int i = 0; i < depth; ++i) {
                uint8_t bit = g.has_edge(perm[i], v) ? 1 : 0;
                if (t) {
                    if (bit > best[base + i]) {
                        pruned = true;
                        break;
                    }
                    if (bit < best[base + i]) t = false;
                }
                cur.push_back(bit);
            }
            if (!pruned) {
                perm[depth] = v;
                used[v] = 1;
                place(depth + 1, t);
                used[v] = 0;
            }
            cur.resize(base);
        }
    };
    place(0, true);
    return best;
}

}  // namespace detail

// A canonical representative of g's isomorphism class.
inline Graph canonical_form(const Graph& g) {
    auto code = detail::canonical_code(g);
    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (code[bit]) edges.emplace_back(i, j);
    return build_graph(g.n, edges);
}

namespace detail {

// Cheap isomorphism invariant: degree, then the sorted multiset of
// neighbor degrees, per vertex, sorted over vertices.
inline std::string invariant_key(const Graph& g) {
    std::vector<std::vector<int>> rows(g.n);
    for (int v = 0; v < g.n; ++v) {
        rows[v].push_back(g.degree(v));
        for (int u : g.adj[v]) rows[v].push_back(g.degree(u));
        std::sort(rows[v].begin() + 1, rows[v].end());
    }
    std::sort(rows.begin(), rows.end());
    std::string key = std::to_string(g.n) + ";" + std::to_string(g.m);
    for (const auto& row : rows) {
        key.push_back('|');
        for (int x : row) {
            key += std::to_string(x);
            key.push_back(',');
        }
    }
    return key;
}

// Backtracking isomorphism with per-vertex signature pruning.
inline bool isomorphic_backtrack(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.m != b.m) return false;
    auto signature = [](const Graph& g, int v) {
        std::vector<int> s{g.degree(v)};
        for (int u : g.adj[v]) s.push_back(g.degree(u));
        std::sort(s.begin() + 1, s.end());
        return s;
    };
    std::vector<std::vector<int>> sig_a(a.n), sig_b(b.n);
    for (int v = 0; v < a.n; ++v) sig_a[v] = signature(a, v);
    for (int v = 0; v < b.n; ++v) sig_b[v] = signature(b, v);

    // map a's vertices in decreasing-degree order
    std::vector<int> order(a.n);
    for (int v = 0; v < a.n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a.degree(x) > a.degree(y); });

    std::vector<int> image(a.n, -1);
    std::vector<char> used(b.n, 0);
    std::function<bool(int)> match = [&](int pos) {
        if (pos == a.n) return true;
        int v = order[pos];
        for (int w = 0; w < b.n; ++w) {
            if (used[w] || sig_a[v] != sig_b[w]) continue;
            bool ok = true;
            for (int i = 0; i < pos && ok; ++i) {
                int x = order[i];
                ok = a.has_edge(v, x) == b.has_edge(w, image[x]);
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = 1;
            if (match(pos + 1)) return true;
            used[w] = 0;
            image[v] = -1;
        }
        return false;
    };
    return match(0);
}

}  // namespace detail

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (detail::invariant_key(a) != detail::invariant_key(b)) return false;
    return detail::isomorphic_backtrack(a, b);
}

// Every connected graph on n vertices exactly once up to isomorphism,
// grown by attaching a fresh vertex to connected graphs on n-1 vertices
// (every connected graph has a non-cut vertex, so all classes appear).
// Deduplication buckets candidates by an isomorphism invariant and settles
// collisions by explicit isomorphism tests; the result order is
// deterministic since generation is.
inline std::vector<Graph> enumerate_connected(int n) {
    if (n < 1 || n > 8) throw too_large("built-in enumeration covers 1 <= n <= 8; ingest graph6 beyond");
    std::vector<Graph> current{build_graph(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::vector<Graph> next;
        std::map<std::string, std::vector<std::size_t>> buckets;
        for (const auto& h : current) {
            for (unsigned mask = 1; mask < (1u << (size - 1)); ++mask) {
                auto edges = h.edges();
                for (int v = 0; v < size - 1; ++v)
                    if (mask & (1u << v)) edges.emplace_back(v, size - 1);
                Graph cand = build_graph(size, edges);
                auto key = detail::invariant_key(cand);
                auto& bucket = buckets[key];
                bool dup = false;
                for (std::size_t idx : bucket)
                    if (detail::isomorphic_backtrack(next[idx], cand)) {
                        dup = true;
                        break;
                    }
                if (!dup) {
                    bucket.push_back(next.size());
                    next.push_back(std::move(cand));
                }
            }
        }
        current = std::move(next);
    }
    return current;
}

namespace detail {

// Canonical string of a tree: root at its center (minimum over both when
// the center is an edge) and sort subtree encodings.
inline std::string tree_code(const Graph& t) {
    std::function<std::string(int, int)> enc = [&](int v, int parent) {
        std::vector<std::string> subs;
        for (int u : t.adj[v])
            if (u != parent) subs.push_back(enc(u, v));
        std::sort(subs.begin(), subs.end());
        std::string out = "(";
        for (const auto& s : subs) out += s;
        out += ")";
        return out;
    };
    if (t.n == 1) return "()";
    // peel leaves to find the center
    std::vector<int> deg(t.n);
    for (int v = 0; v < t.n; ++v) deg[v] = t.degree(v);
    std::vector<int> layer;
    std::vector<char> gone(t.n, 0);
    for (int v = 0; v < t.n; ++v)
        if (deg[v] <= 1) layer.push_back(v);
    int remaining = t.n;
    while (remaining > 2) {
        std::vector<int> nxt;
        for (int v : layer) {
            gone[v] = 1;
            --remaining;
            for (int u : t.adj[v])
                if (!gone[u] && --deg[u] == 1) nxt.push_back(u);
        }
        layer = std::move(nxt);
    }
    std::string best;
    for (int c : layer) {
        auto s = enc(c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace detail

// Every tree on n vertices exactly once up to isomorphism.
inline std::vector<Graph> enumerate_trees(int n) {
    if (n < 1) throw invalid_spec("tree enumeration needs n >= 1");
    std::vector<Graph> current{build_graph(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const auto& t : current)
            for (int v = 0; v < size - 1; ++v) {
                auto edges = t.edges();
                edges.emplace_back(v, size - 1);
                Graph cand = build_graph(size, edges);
                if (seen.insert(detail::tree_code(cand)).second) next.push_back(cand);
            }
        current = std::move(next);
    }
    return current;
}

struct SearchReport {
    int n_max = 0;
    int delta_min = 3;
    long long graphs_examined = 0;
    std::vector<std::string> counterexamples;                // graph6
    std::map<int, std::pair<int, std::string>> empirical_f;  // Delta -> (max chi_pcf, witness)
    double seconds = 0.0;
};

// Scan all connected graphs up to n_max: record counterexamples to
// chi_pcf <= Delta + 1 among graphs of max degree >= delta_min, and the
// per-Delta maximum of chi_pcf with a witness.  The per-Delta maxima are
// also checked against Delta + 1 <= f <= floor(5*Delta/2).
//
// Workers split each size class by stride and write into slots indexed by
// the enumeration order, so the merged report never depends on scheduling.
inline SearchReport search_conjecture(int n_max, int delta_min = 3,
                                      std::ostream* progress = nullptr, int threads = 1) {
    auto start = std::chrono::steady_clock::now();
    SearchReport rep;
    rep.n_max = n_max;
    rep.delta_min = delta_min;
    threads = std::max(1, threads);
    for (int n = 1; n <= n_max; ++n) {
        auto graphs = enumerate_connected(n);
        if (progress)
            *progress << "n=" << n << ": " << graphs.size() << " connected graphs\n";
        std::vector<std::pair<int, int>> results(graphs.size());  // (delta, chi_pcf)
        auto scan = [&](int offset) {
            for (std::size_t i = offset; i < graphs.size(); i += threads)
                results[i] = {graphs[i].max_degree(),
                              chromatic_value(graphs[i], Mode::pcf).value};
        };
        if (threads == 1) {
            scan(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(scan, t);
            for (auto& th : pool) th.join();
        }
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            ++rep.graphs_examined;
            auto [delta, value] = results[i];
            auto it = rep.empirical_f.find(delta);
            if (it == rep.empirical_f.end() || value > it->second.first)
                rep.empirical_f[delta] = {value, emit_graph6(graphs[i])};
            if (delta >= delta_min && value > delta + 1) {
                // re-verify before reporting
                if (chromatic_value(parse_graph6(emit_graph6(graphs[i])), Mode::pcf).value ==
                    value)
                    rep.counterexamples.push_back(emit_graph6(graphs[i]));
            }
        }
    }
    for (auto& [delta, fw] : rep.empirical_f) {
        if (delta >= 1 && fw.first > 5 * delta / 2)
            throw internal_contradiction("observed value above the proven ceiling",
                                         parse_graph6(fw.second), {}, "empirical profile");
        if (delta + 1 <= n_max && fw.first < delta + 1)
            throw internal_contradiction("complete graph witness missing from the profile",
                                         parse_graph6(fw.second), {}, "empirical profile");
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

// The empirical profile alone: Delta -> (max chi_pcf over connected graphs
// with <= n_max vertices, witness graph6).
inline std::map<int, std::pair<int, std::string>> empirical_f(int n_max) {
    return search_conjecture(n_max, 3).empirical_f;
}

inline ordered_json json_of(const SearchReport& r) {
    ordered_json f = ordered_json::array();
    for (const auto& [delta, fw] : r.empirical_f)
        f.push_back({{"max_degree", delta}, {"max_chi_pcf", fw.first}, {"witness", fw.second}});
    return ordered_json{{"n_max", r.n_max},
                        {"delta_min", r.delta_min},
                        {"graphs_examined", r.graphs_examined},
                        {"counterexamples", r.counterexamples},
                        {"empirical_f", f},
                        {"seconds", r.seconds}};
}

}  // namespace pcf
