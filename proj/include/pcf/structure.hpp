#pragma once

// Structural analyzers: the configurations and certificates the inductive
// colorers consume.

#include <functional>
#include <map>

#include "pcf/mad.hpp"
#include "pcf/stats.hpp"

namespace pcf {

struct no_total_dominating_set : error { using error::error; };

// ---------------------------------------------------------------------------
// Threads

// A trail of length l+1 whose l internal vertices all have degree 2 in the
// full graph.  Endpoints may coincide (cycle-thread).
struct ThreadDescriptor {
    int u = -1, v = -1;         // endpoints
    std::vector<int> internal;  // in order from u to v
};

// Some l-thread of g, if one exists.  Walks are forced once they enter a
// degree-2 vertex, so a linear scan over (start, first-step) pairs suffices.
inline std::optional<ThreadDescriptor> find_thread(const Graph& g, int l) {
    if (l < 1) throw invalid_spec("thread length must be positive");
    std::vector<char> in_walk(g.n, 0);
    for (int v0 = 0; v0 < g.n; ++v0) {
        for (int v1 : g.adj[v0]) {
            if (g.degree(v1) != 2) continue;
            std::vector<int> internal{v1};
            in_walk[v1] = 1;
            int prev = v0, cur = v1;
            bool dead = false;
            while (static_cast<int>(internal.size()) < l) {
                int next = g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0];
                if (g.degree(next) != 2 || in_walk[next] || next == v0) {
                    dead = true;
                    break;
                }
                internal.push_back(next);
                in_walk[next] = 1;
                prev = cur;
                cur = next;
            }
            int endpoint = -1;
            if (!dead) {
                endpoint = g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0];
                if (in_walk[endpoint]) dead = true;  // would reuse an internal vertex
            }
            for (int w : internal) in_walk[w] = 0;
            if (!dead) return ThreadDescriptor{v0, endpoint, internal};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Elimination certificates

struct ElimStep {
    bool pair_step = false;
    int u = -1, v = -1;       // v = -1 for low-vertex steps
    int deg_u = 0, deg_v = 0; // residual degrees at removal time
};

struct EliminationCertificate {
    enum class Kind { ab, h_edge };
    Kind kind = Kind::ab;
    int a = 0, b = 0, h = 0;
    std::vector<ElimStep> steps;

    bool step_ok(const ElimStep& s) const {
        if (!s.pair_step) return s.deg_u <= 1;
        if (kind == Kind::h_edge) return s.deg_u + s.deg_v <= h;
        return (s.deg_u <= a && s.deg_v <= b) || (s.deg_u <= b && s.deg_v <= a);
    }
};

struct CertificateSearch {
    std::optional<EliminationCertificate> certificate;
    // On failure: the vertices of a residual induced subgraph admitting
    // neither a low vertex nor a qualifying edge (a non-degeneracy witness).
    std::vector<int> stuck_witness;
};

namespace detail {

// Greedy elimination.  Sound and complete because both degeneracy notions
// are hereditary: any stuck residual graph is itself a disproof.
// Tie-breaking: low-vertex removals first (lowest index), then the
// lexicographically least qualifying edge.
inline CertificateSearch eliminate(const Graph& g, EliminationCertificate cert) {
    std::vector<int> deg(g.n);
    std::vector<char> alive(g.n, 1);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    int remaining = g.n;
    auto qualifies = [&](int u, int v) {
        if (cert.kind == EliminationCertificate::Kind::h_edge)
            return deg[u] + deg[v] <= cert.h;
        return (deg[u] <= cert.a && deg[v] <= cert.b) ||
               (deg[u] <= cert.b && deg[v] <= cert.a);
    };
    auto remove_vertex = [&](int v) {
        alive[v] = 0;
        --remaining;
        for (int u : g.adj[v])
            if (alive[u]) --deg[u];
    };
    while (remaining > 0) {
        int low = -1;
        for (int v = 0; v < g.n && low < 0; ++v)
            if (alive[v] && deg[v] <= 1) low = v;
        if (low >= 0) {
            cert.steps.push_back({false, low, -1, deg[low], 0});
            remove_vertex(low);
            continue;
        }
        int eu = -1, ev = -1;
        for (int u = 0; u < g.n && eu < 0; ++u) {
            if (!alive[u]) continue;
            for (int v : g.adj[u]) {
                if (v <= u || !alive[v]) continue;
                if (qualifies(u, v)) {
                    eu = u;
                    ev = v;
                    break;
                }
            }
        }
        if (eu < 0) {
            CertificateSearch out;
            for (int v = 0; v < g.n; ++v)
                if (alive[v]) out.stuck_witness.push_back(v);
            return out;
        }
        ElimStep step{true, eu, ev, deg[eu], deg[ev]};
        if (cert.kind == EliminationCertificate::Kind::ab &&
            !(step.deg_u <= cert.a && step.deg_v <= cert.b))
            std::swap(step.u, step.v), std::swap(step.deg_u, step.deg_v);
        cert.steps.push_back(step);
        remove_vertex(eu);
        remove_vertex(ev);
    }
    CertificateSearch out;
    out.certificate = std::move(cert);
    return out;
}

}  // namespace detail

inline CertificateSearch ab_certificate(const Graph& g, int a, int b) {
    if (a < 2 || b < a) throw invalid_spec("need 2 <= a <= b");
    EliminationCertificate cert;
    cert.kind = EliminationCertificate::Kind::ab;
    cert.a = a;
    cert.b = b;
    return detail::eliminate(g, cert);
}

inline CertificateSearch h_edge_certificate(const Graph& g, int h) {
    if (h < 4) throw invalid_spec("need h >= 4");
    EliminationCertificate cert;
    cert.kind = EliminationCertificate::Kind::h_edge;
    cert.h = h;
    return detail::eliminate(g, cert);
}

// Replay a certificate against g: every step's recorded degrees must match
// and satisfy the mode's condition, and the steps must empty the graph.
inline bool replay_certificate(const Graph& g, const EliminationCertificate& cert) {
    std::vector<int> deg(g.n);
    std::vector<char> alive(g.n, 1);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    int remaining = g.n;
    auto remove_vertex = [&](int v) {
        if (v < 0 || v >= g.n || !alive[v]) return false;
        alive[v] = 0;
        --remaining;
        for (int u : g.adj[v])
            if (alive[u]) --deg[u];
        return true;
    };
    for (const auto& s : cert.steps) {
        if (!cert.step_ok(s)) return false;
        if (deg[s.u] != s.deg_u) return false;
        if (s.pair_step) {
            if (deg[s.v] != s.deg_v || !g.has_edge(s.u, s.v)) return false;
            if (!remove_vertex(s.u) || !remove_vertex(s.v)) return false;
        } else {
            if (!remove_vertex(s.u)) return false;
        }
    }
    return remaining == 0;
}

// ---------------------------------------------------------------------------
// Lex-BFS / chordality

// Perfect elimination order (each vertex's later neighbors form a clique),
// or nullopt when g is not chordal.
inline std::optional<std::vector<int>> lexbfs_peo(const Graph& g) {
    std::vector<std::vector<int>> label(g.n);
    std::vector<int> visit_pos(g.n, -1);
    std::vector<int> visit_order;
    for (int step = 0; step < g.n; ++step) {
        int pick = -1;
        for (int v = 0; v < g.n; ++v) {
            if (visit_pos[v] >= 0) continue;
            if (pick < 0 || label[v] > label[pick]) pick = v;
        }
        visit_pos[pick] = step;
        visit_order.push_back(pick);
        for (int u : g.adj[pick])
            if (visit_pos[u] < 0) label[u].push_back(g.n - step);
    }
    std::vector<int> peo(visit_order.rbegin(), visit_order.rend());
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[peo[i]] = i;
    for (int i = 0; i < g.n; ++i) {
        int v = peo[i];
        int first = -1;
        for (int u : g.adj[v])
            if (pos[u] > i && (first < 0 || pos[u] < pos[first])) first = u;
        if (first < 0) continue;
        for (int u : g.adj[v])
            if (pos[u] > i && u != first && !g.has_edge(first, u)) return std::nullopt;
    }
    return peo;
}

// ---------------------------------------------------------------------------
// Blocks

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;      // vertex sets, sorted
    std::vector<int> cut_vertices;             // sorted
    std::vector<std::vector<int>> block_cuts;  // per block: its cut vertices
};

inline BlockDecomposition blocks(const Graph& g) {
    BlockDecomposition out;
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<char> is_cut(g.n, 0);
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : g.adj[u]) {
            if (v == parent) continue;
            if (disc[v] < 0) {
                ++children;
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (disc[u] > 0 || children > 1) is_cut[u] = 1;
                    std::vector<int> verts;
                    while (true) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        verts.push_back(e.first);
                        verts.push_back(e.second);
                        if (e == std::make_pair(u, v)) break;
                    }
                    std::sort(verts.begin(), verts.end());
                    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                    out.blocks.push_back(std::move(verts));
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    for (int v = 0; v < g.n; ++v)
        if (disc[v] < 0) {
            timer = 0;
            dfs(v, -1);
        }

    for (int v = 0; v < g.n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    out.block_cuts.resize(out.blocks.size());
    for (std::size_t b = 0; b < out.blocks.size(); ++b)
        for (int v : out.blocks[b])
            if (is_cut[v]) out.block_cuts[b].push_back(v);
    return out;
}

// Is the block a 5-cycle?  (2-connected with 5 vertices and 5 edges.)
inline bool block_is_c5(const Graph& g, const std::vector<int>& block) {
    if (block.size() != 5) return false;
    int edge_count = 0;
    for (int u : block)
        for (int v : block)
            if (u < v && g.has_edge(u, v)) ++edge_count;
    return edge_count == 5;
}

// Membership in the family of non-trivial connected graphs all of whose
// blocks are 5-cycles.
inline bool is_in_f(const Graph& g) {
    if (g.n < 2) return false;
    if (!is_connected(g)) throw not_connected("family membership needs a connected graph");
    auto dec = blocks(g);
    if (dec.blocks.empty()) return false;
    for (const auto& b : dec.blocks)
        if (!block_is_c5(g, b)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Branch vertices and thread matching

inline constexpr int inf_distance = std::numeric_limits<int>::max();

struct BigVertexDistances {
    std::vector<int> big;  // vertices of degree >= 3
    int min_distance = inf_distance;
};

inline BigVertexDistances big_vertex_distances(const Graph& g) {
    BigVertexDistances out;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= 3) out.big.push_back(v);
    if (out.big.size() <= 1) return out;
    for (std::size_t i = 0; i < out.big.size(); ++i) {
        auto dist = bfs_distances(g, out.big[i]);
        for (std::size_t j = i + 1; j < out.big.size(); ++j)
            if (dist[out.big[j]] >= 0)
                out.min_distance = std::min(out.min_distance, dist[out.big[j]]);
    }
    return out;
}

// All maximal threads of g whose endpoints are not degree-2 vertices,
// discovered by walking out of every vertex of degree != 2.  A cycle
// attached at a single branch vertex yields one thread with coinciding
// endpoints.  Pure 2-regular components are not reported.
inline std::vector<ThreadDescriptor> maximal_threads(const Graph& g) {
    std::vector<ThreadDescriptor> out;
    std::vector<char> used(g.n, 0);  // internal vertices already claimed
    for (int v0 = 0; v0 < g.n; ++v0) {
        if (g.degree(v0) == 2 || g.degree(v0) == 0) continue;
        for (int first : g.adj[v0]) {
            if (g.degree(first) != 2) {
                // zero-internal thread between two non-2 vertices
                if (v0 < first) out.push_back({v0, first, {}});
                continue;
            }
            if (used[first]) continue;
            ThreadDescriptor t;
            t.u = v0;
            int prev = v0, cur = first;
            while (g.degree(cur) == 2) {
                t.internal.push_back(cur);
                used[cur] = 1;
                int next = g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0];
                prev = cur;
                cur = next;
            }
            t.v = cur;
            out.push_back(std::move(t));
        }
    }
    return out;
}

// An A-saturating assignment of branch vertices to pairwise disjoint
// maximal path-threads, via augmenting paths on the incidence graph.
// Hypotheses checked: girth >= 6 and pairwise distance >= 6 between
// degree->=3 vertices, at least one such vertex.
struct ThreadAssignment {
    // (branch vertex v, thread oriented to start at v; internal[0] adjacent
    // to v).  The assigned path is v followed by the internal vertices.
    std::vector<std::pair<int, ThreadDescriptor>> assigned;
};

inline ThreadAssignment thread_incidence_matching(const Graph& g) {
    if (girth(g) < 6) throw hypothesis_violated("girth below 6");
    auto big = big_vertex_distances(g);
    if (big.big.empty()) throw hypothesis_violated("no vertex of degree >= 3");
    if (big.min_distance < 6) throw hypothesis_violated("branch vertices closer than 6");

    std::vector<char> in_k(g.n, 0);
    for (int v : big.big) in_k[v] = 1;
    auto threads = maximal_threads(g);
    // B-side: threads with at least one endpoint of degree >= 3
    std::vector<int> b_side;
    for (int i = 0; i < static_cast<int>(threads.size()); ++i)
        if (in_k[threads[i].u] || in_k[threads[i].v]) b_side.push_back(i);

    std::map<int, int> k_index;
    for (int i = 0; i < static_cast<int>(big.big.size()); ++i) k_index[big.big[i]] = i;
    std::vector<std::vector<int>> adj(big.big.size());  // A-vertex -> thread ids
    for (int bi : b_side) {
        const auto& t = threads[bi];
        if (in_k[t.u]) adj[k_index[t.u]].push_back(bi);
        if (in_k[t.v] && t.v != t.u) adj[k_index[t.v]].push_back(bi);
    }

    std::map<int, int> matched_thread;  // thread id -> A index
    std::vector<int> matched_a(big.big.size(), -1);
    std::function<bool(int, std::map<int, char>&)> augment = [&](int a,
                                                                 std::map<int, char>& seen) {
        for (int t : adj[a]) {
            if (seen.count(t)) continue;
            seen[t] = 1;
            auto it = matched_thread.find(t);
            if (it == matched_thread.end() || augment(it->second, seen)) {
                matched_thread[t] = a;
                matched_a[a] = t;
                return true;
            }
        }
        return false;
    };
    for (std::size_t a = 0; a < big.big.size(); ++a) {
        std::map<int, char> seen;
        if (!augment(static_cast<int>(a), seen))
            throw internal_contradiction("thread matching fails to saturate the branch vertices",
                                         g, {}, "thread incidence matching");
    }

    ThreadAssignment out;
    for (std::size_t a = 0; a < big.big.size(); ++a) {
        int v = big.big[a];
        ThreadDescriptor t = threads[matched_a[a]];
        if (t.u != v) {
            std::swap(t.u, t.v);
            std::reverse(t.internal.begin(), t.internal.end());
        }
        out.assigned.emplace_back(v, std::move(t));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Total domination

// Minimum set D such that every vertex of g has a neighbor in D, by
// increasing-size exhaustive search.  Intended for n <= ~20.
inline std::pair<int, std::vector<int>> total_domination_number(const Graph& g) {
    if (g.n > 24) throw too_large("total domination search limited to n <= 24");
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 0)
            throw no_total_dominating_set("isolated vertex " + std::to_string(v));
    if (g.n == 0) return {0, {}};

    std::vector<int> dominated(g.n, 0);
    std::vector<int> chosen;
    int undominated = g.n;
    int maxdeg = std::max(1, g.max_degree());

    std::function<bool(int, int)> search = [&](int start, int left) {
        if (undominated == 0) return true;
        if (left == 0 || undominated > left * maxdeg) return false;
        for (int v = start; v < g.n; ++v) {
            chosen.push_back(v);
            for (int u : g.adj[v])
                if (dominated[u]++ == 0) --undominated;
            if (search(v + 1, left - 1)) return true;
            for (int u : g.adj[v])
                if (--dominated[u] == 0) ++undominated;
            chosen.pop_back();
        }
        return false;
    };

    for (int size = 1; size <= g.n; ++size) {
        if (search(0, size)) return {size, chosen};
    }
    throw no_total_dominating_set("unreachable");
}

}  // namespace pcf
