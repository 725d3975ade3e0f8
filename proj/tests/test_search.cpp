#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "pcf/search.hpp"

using namespace pcf;

namespace {

// Independent enumeration oracle: iterate every labeled graph on n
// vertices, keep the connected ones, canonicalize by brute force over all
// permutations (no pruning), count distinct classes.
int oracle_connected_count(int n) {
    std::vector<int> perm(n);
    std::set<std::vector<int>> classes;
    int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> all_pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
        std::vector<std::pair<int, int>> es;
        for (int b = 0; b < pairs; ++b)
            if (mask & (1u << b)) es.push_back(all_pairs[b]);
        Graph g = build_graph(n, es);
        if (!is_connected(g)) continue;
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::vector<int> best;
        do {
            std::vector<int> code;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i) code.push_back(g.has_edge(perm[i], perm[j]) ? 1 : 0);
            if (best.empty() || code < best) best = code;
        } while (std::next_permutation(perm.begin(), perm.end()));
        classes.insert(best);
    }
    return static_cast<int>(classes.size());
}

}  // namespace

TEST_CASE("connected enumeration counts") {
    CHECK(enumerate_connected(1).size() == 1);
    CHECK(enumerate_connected(2).size() == 1);
    CHECK(enumerate_connected(3).size() == 2);
    CHECK(enumerate_connected(4).size() == 6);
    CHECK(enumerate_connected(5).size() == 21);
    CHECK(enumerate_connected(6).size() == 112);
    CHECK(enumerate_connected(7).size() == 853);
    CHECK(enumerate_connected(8).size() == 11117);

    CHECK(oracle_connected_count(3) == 2);
    CHECK(oracle_connected_count(4) == 6);
    CHECK(oracle_connected_count(5) == 21);

    CHECK_THROWS_AS(enumerate_connected(9), too_large);
}

TEST_CASE("enumeration yields no isomorphic duplicates") {
    for (int n = 3; n <= 6; ++n) {
        auto graphs = enumerate_connected(n);
        std::set<std::vector<uint8_t>> codes;
        for (const auto& g : graphs) {
            CHECK(is_connected(g));
            CHECK(codes.insert(pcf::detail::canonical_code(g)).second);
        }
    }
}

TEST_CASE("canonical form is relabeling-invariant") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 2 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) es.emplace_back(u, v);
        Graph g = build_graph(n, es);
        std::vector<int> relab(n);
        for (int i = 0; i < n; ++i) relab[i] = i;
        std::shuffle(relab.begin(), relab.end(), rng);
        std::vector<std::pair<int, int>> res;
        for (auto [u, v] : es) res.emplace_back(relab[u], relab[v]);
        Graph h = build_graph(n, res);
        CHECK(isomorphic(g, h));
        CHECK(canonical_form(g).adj == canonical_form(h).adj);
    }
    CHECK_FALSE(isomorphic(path_graph(4), star_graph(3)));
    CHECK_FALSE(isomorphic(cycle_graph(6), build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4},
                                                           {4, 5}, {5, 3}})));
}

TEST_CASE("tree enumeration") {
    // numbers of unlabeled trees: 1, 1, 1, 2, 3, 6, 11, 23, 47
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};
    for (int n = 1; n <= 9; ++n) {
        auto trees = enumerate_trees(n);
        CHECK(static_cast<int>(trees.size()) == expected[n - 1]);
        for (const auto& t : trees) CHECK(is_tree(t));
    }
}

TEST_CASE("conjecture search finds no counterexamples up to n=6") {
    auto rep = search_conjecture(6, 3);
    CHECK(rep.counterexamples.empty());
    CHECK(rep.graphs_examined == 1 + 1 + 2 + 6 + 21 + 112);
    REQUIRE(rep.empirical_f.count(1));
    CHECK(rep.empirical_f[1].first == 2);   // a single edge
    REQUIRE(rep.empirical_f.count(2));
    CHECK(rep.empirical_f[2].first == 5);   // the pentagon
    REQUIRE(rep.empirical_f.count(3));
    CHECK(rep.empirical_f[3].first == 4);

    // every stored witness is reproducible from its graph6 form
    for (const auto& [delta, fw] : rep.empirical_f) {
        auto witness = parse_graph6(fw.second);
        CHECK(witness.max_degree() == delta);
        CHECK(chromatic_value(witness, Mode::pcf).value == fw.first);
    }

    // max degree 2 lies outside the conjecture's hypothesis: the pentagon
    // exceeds Delta + 1 there
    CHECK(rep.empirical_f[2].first > 2 + 1);
}

TEST_CASE("empirical profile wrapper") {
    auto f = empirical_f(4);
    CHECK(f.at(1).first == 2);
    CHECK(f.at(2).first == 4);  // the square, until the pentagon appears
    CHECK(f.at(3).first == 4);
}

TEST_CASE("exhaustive profile to n=8") {
    auto rep = search_conjecture(8, 3, nullptr, 2);
    CHECK(rep.counterexamples.empty());
    CHECK(rep.graphs_examined == 12113);
    CHECK(rep.empirical_f.at(1).first == 2);
    CHECK(rep.empirical_f.at(2).first == 5);
    CHECK(isomorphic(parse_graph6(rep.empirical_f.at(2).second), cycle_graph(5)));
    CHECK(rep.empirical_f.at(3).first == 4);
    // everything with max degree >= 4 stayed within Delta + 1 up to n=8
    for (int delta = 4; delta <= 7; ++delta)
        CHECK(rep.empirical_f.at(delta).first == delta + 1);
}

TEST_CASE("search report is independent of the worker count") {
    auto seq = search_conjecture(5, 3, nullptr, 1);
    auto par = search_conjecture(5, 3, nullptr, 3);
    CHECK(seq.graphs_examined == par.graphs_examined);
    CHECK(seq.counterexamples == par.counterexamples);
    CHECK(seq.empirical_f == par.empirical_f);
}
