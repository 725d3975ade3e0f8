#pragma once

// Ground-truth predicates for the coloring variants.  Everything else in
// the library is tested against verify().
//
//   proper  every edge bicolored
//   cf      every non-isolated vertex sees some color exactly once in its
//           open neighborhood (properness NOT required)
//   pcf     proper and cf
//   odd     proper, and every non-isolated vertex sees some color an odd
//           number of times

#include "pcf/graph.hpp"

namespace pcf {

struct bad_color : error { using error::error; };
struct partial_coloring : error { using error::error; };

struct Coloring {
    std::vector<int> color;  // per-vertex value in 1..k, 0 = unassigned
    int k = 0;               // palette size

    static Coloring unassigned(int n, int palette) {
        return Coloring{std::vector<int>(n, 0), palette};
    }
};

enum class Mode { proper, cf, pcf, odd };

inline const char* mode_name(Mode m) {
    switch (m) {
        case Mode::proper: return "proper";
        case Mode::cf: return "cf";
        case Mode::pcf: return "pcf";
        case Mode::odd: return "odd";
    }
    return "?";
}

struct VerifyReport {
    Mode mode = Mode::pcf;
    bool ok = false;
    std::vector<std::pair<int, int>> proper_violations;       // offending edges
    std::vector<std::pair<int, std::string>> cf_failures;     // (vertex, reason)
    std::vector<int> witness;  // per vertex: the unique/odd color found, 0 if none
};

// Is there a color occurring exactly once among the colors of `verts`?
// Returns that color, or 0.
inline int unique_color_in(const std::vector<int>& colors, const std::vector<int>& verts) {
    int found = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        int c = colors[verts[i]];
        bool repeated = false;
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (j != i && colors[verts[j]] == c) {
                repeated = true;
                break;
            }
        if (!repeated) {
            found = c;
            break;
        }
    }
    return found;
}

inline VerifyReport verify(const Graph& g, const Coloring& c, Mode mode) {
    if (static_cast<int>(c.color.size()) != g.n)
        throw partial_coloring("coloring has wrong length");
    for (int v = 0; v < g.n; ++v) {
        if (c.color[v] == 0) throw partial_coloring("vertex " + std::to_string(v) + " unassigned");
        if (c.color[v] < 1 || c.color[v] > c.k)
            throw bad_color("vertex " + std::to_string(v) + " colored outside 1..k");
    }

    VerifyReport rep;
    rep.mode = mode;
    rep.witness.assign(g.n, 0);

    if (mode != Mode::cf) {
        for (int u = 0; u < g.n; ++u)
            for (int v : g.adj[u])
                if (u < v && c.color[u] == c.color[v]) rep.proper_violations.emplace_back(u, v);
    }

    if (mode != Mode::proper) {
        std::vector<int> count(c.k + 1, 0);
        for (int v = 0; v < g.n; ++v) {
            if (g.degree(v) == 0) continue;  // isolated vertices are exempt
            for (int u : g.adj[v]) ++count[c.color[u]];
            int found = 0;
            for (int u : g.adj[v]) {
                int col = c.color[u];
                bool hit = (mode == Mode::odd) ? (count[col] % 2 == 1) : (count[col] == 1);
                if (hit) {
                    found = col;
                    break;
                }
            }
            for (int u : g.adj[v]) count[c.color[u]] = 0;
            if (found) {
                rep.witness[v] = found;
            } else {
                rep.cf_failures.emplace_back(
                    v, mode == Mode::odd ? "no color occurs an odd number of times in N(v)"
                                         : "no color occurs exactly once in N(v)");
            }
        }
    }

    rep.ok = rep.proper_violations.empty() && rep.cf_failures.empty();
    return rep;
}

}  // namespace pcf
