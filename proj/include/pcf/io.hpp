#pragma once

// File formats: graph6 (bit-exact), DIMACS .col, and JSON serialization of
// results.  Colors serialize as integers starting at 1.

#include <sstream>

#include "json.hpp"
#include "pcf/audit.hpp"
#include "pcf/constructive.hpp"
#include "pcf/exact.hpp"
#include "pcf/verify.hpp"

namespace pcf {

using ordered_json = nlohmann::ordered_json;

// --------------------------------------------------------------------------
// graph6: <size bytes><upper triangle bits (i,j), j = 1..n-1, i < j,
// packed 6 per printable byte, most significant first>.

inline Graph parse_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    std::size_t pos = 0;
    if (s.rfind(">>graph6<<", 0) == 0) pos = 10;
    if (pos >= s.size()) throw format_error("empty graph6 line", pos);

    auto byte_at = [&](std::size_t i) -> long long {
        if (i >= s.size()) throw format_error("graph6 line truncated", i);
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw format_error("graph6 byte out of range", i);
        return c - 63;
    };

    long long n;
    if (byte_at(pos) != 63) {
        n = byte_at(pos);
        pos += 1;
    } else if (pos + 1 < s.size() && byte_at(pos + 1) != 63) {
        n = (byte_at(pos + 1) << 12) | (byte_at(pos + 2) << 6) | byte_at(pos + 3);
        pos += 4;
    } else {
        n = 0;
        for (int i = 0; i < 6; ++i) n = (n << 6) | byte_at(pos + 2 + i);
        pos += 8;
    }
    if (n > 100000) throw format_error("graph too large for in-memory decoding", pos);

    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != nbytes)
        throw format_error("graph6 bit block has wrong length", pos);

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            long long byte = byte_at(pos + bit / 6);
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    return build_graph(static_cast<int>(n), edges);
}

inline std::string emit_graph6(const Graph& g) {
    std::string out;
    long long n = g.n;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

// --------------------------------------------------------------------------
// DIMACS .col ("p edge n m" header, 1-indexed "e u v" lines; duplicates
// collapse).  format_error offsets are line numbers.

inline Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    long long n = -1;
    std::vector<std::pair<int, int>> edges;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            long long m;
            if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 0)
                throw format_error("bad problem line", lineno);
        } else if (tag == "e") {
            if (n < 0) throw format_error("edge before the problem line", lineno);
            long long u, v;
            if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n)
                throw format_error("edge index out of range", lineno);
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw format_error("unknown line tag '" + tag + "'", lineno);
        }
    }
    if (n < 0) throw format_error("missing problem line", lineno);
    return build_graph(static_cast<int>(n), edges);
}

inline std::string emit_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.n << " " << g.m << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

// --------------------------------------------------------------------------
// JSON serialization with stable field order.

inline ordered_json json_of(const Coloring& c) {
    return ordered_json{{"palette", c.k}, {"colors", c.color}};
}

inline ordered_json json_of(const SolveResult& r) {
    return ordered_json{{"variant", mode_name(r.variant)},
                        {"value", r.value},
                        {"coloring", json_of(r.witness)},
                        {"nodes_explored", r.nodes_explored},
                        {"seconds", r.seconds}};
}

inline ordered_json json_of(const VerifyReport& r) {
    ordered_json pv = ordered_json::array();
    for (auto [u, v] : r.proper_violations) pv.push_back({u, v});
    ordered_json cf = ordered_json::array();
    for (const auto& [v, why] : r.cf_failures) cf.push_back({{"vertex", v}, {"reason", why}});
    return ordered_json{{"mode", mode_name(r.mode)},
                        {"ok", r.ok},
                        {"proper_violations", pv},
                        {"cf_failures", cf},
                        {"witness_colors", r.witness}};
}

inline ordered_json json_of(const ConstructionOutcome& o) {
    return ordered_json{{"colors_used", o.colors_used},
                        {"bound", o.bound},
                        {"coloring", json_of(o.coloring)},
                        {"trace", o.trace}};
}

inline ordered_json json_of(const AuditRecord& r) {
    return ordered_json{{"bound", r.bound_id}, {"lhs", r.lhs},      {"rhs", r.rhs},
                        {"holds", r.holds},    {"equality", r.equality}, {"values", r.values}};
}

inline ordered_json json_of(const std::vector<AuditRecord>& rs) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rs) arr.push_back(json_of(r));
    return arr;
}

}  // namespace pcf
