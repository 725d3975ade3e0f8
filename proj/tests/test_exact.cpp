#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pcf/exact.hpp"
#include "pcf/families.hpp"
#include "pcf/search.hpp"

using namespace pcf;

namespace {

// Independent oracle: enumerate all k^n total colorings.
bool brute_feasible(const Graph& g, Mode m, int k) {
    if (g.n == 0) return true;
    if (k == 0) return false;
    std::vector<int> colors(g.n, 1);
    while (true) {
        if (verify(g, Coloring{colors, k}, m).ok) return true;
        int i = g.n - 1;
        while (i >= 0 && colors[i] == k) colors[i--] = 1;
        if (i < 0) return false;
        ++colors[i];
    }
}

int brute_value(const Graph& g, Mode m) {
    for (int k = g.n == 0 ? 0 : 1;; ++k)
        if (brute_feasible(g, m, k)) return k;
}

Graph random_graph(std::mt19937& rng, int n, int percent) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) es.emplace_back(u, v);
    return build_graph(n, es);
}

}  // namespace

TEST_CASE("decide_k on pinned instances") {
    auto c5 = cycle_graph(5);
    CHECK_FALSE(decide_k(c5, Mode::pcf, 4).has_value());
    auto w = decide_k(c5, Mode::pcf, 5);
    REQUIRE(w.has_value());
    CHECK(verify(c5, *w, Mode::pcf).ok);

    CHECK_FALSE(decide_k(hypercube(3), Mode::pcf, 3).has_value());
    CHECK(decide_k(hypercube(3), Mode::pcf, 4).has_value());
}

TEST_CASE("chromatic values on pinned instances") {
    CHECK(chromatic_value(kite_graph(), Mode::pcf).value == 3);
    CHECK(chromatic_value(cycle_graph(4), Mode::pcf).value == 4);
    CHECK(chromatic_value(f_chain(2), Mode::pcf).value == 5);

    auto res = chromatic_value(cycle_graph(5), Mode::pcf);
    CHECK(res.value == 5);
    CHECK(res.nodes_explored > 0);
    CHECK(verify(cycle_graph(5), res.witness, Mode::pcf).ok);
}

TEST_CASE("edgeless and empty graphs") {
    CHECK(chromatic_value(build_graph(0, {}), Mode::pcf).value == 0);
    CHECK(chromatic_value(build_graph(3, {}), Mode::pcf).value == 1);
    CHECK(chromatic_value(build_graph(3, {}), Mode::odd).value == 1);
}

TEST_CASE("solver agrees with the total-enumeration oracle") {
    std::mt19937 rng(7);
    std::vector<Graph> pool{cycle_graph(5), kite_graph(), path_graph(5), complete_graph(4),
                            chordal_remark_graph()};
    for (int i = 0; i < 12; ++i) pool.push_back(random_graph(rng, 4 + static_cast<int>(rng() % 2), 50));
    for (const auto& g : pool)
        for (Mode m : {Mode::proper, Mode::cf, Mode::pcf, Mode::odd}) {
            auto res = chromatic_value(g, m);
            CHECK(res.value == brute_value(g, m));
            CHECK(verify(g, res.witness, m).ok);
            CHECK(res.witness.k == res.value);
        }
}

TEST_CASE("solver matches the oracle on every connected graph up to n=5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& g : enumerate_connected(n))
            for (Mode m : {Mode::proper, Mode::cf, Mode::pcf, Mode::odd}) {
                auto res = chromatic_value(g, m);
                CHECK(res.value == brute_value(g, m));
                CHECK(verify(g, res.witness, m).ok);
            }
}

TEST_CASE("feasibility is monotone in k") {
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_graph(rng, 5 + static_cast<int>(rng() % 3), 40);
        int v = chromatic_value(g, Mode::pcf).value;
        CHECK(decide_k(g, Mode::pcf, v + 1).has_value());
        if (v > 1) CHECK_FALSE(decide_k(g, Mode::pcf, v - 1).has_value());
    }
}

TEST_CASE("variant chain and product bound on small graphs") {
    std::mt19937 rng(13);
    for (int i = 0; i < 25; ++i) {
        Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 4), 45);
        int chi = chromatic_value(g, Mode::proper).value;
        int odd = chromatic_value(g, Mode::odd).value;
        int pcf = chromatic_value(g, Mode::pcf).value;
        int cf = chromatic_value(g, Mode::cf).value;
        CHECK(chi <= odd);
        CHECK(odd <= pcf);
        CHECK(pcf <= cf * chi);
    }
}

TEST_CASE("extend_locally") {
    auto p3 = path_graph(3);
    Coloring base1 = Coloring::unassigned(3, 3);
    base1.color = {1, 0, 2};
    auto ext = extend_locally(p3, base1, {1}, 3);
    REQUIRE(ext.has_value());
    CHECK(ext->color[1] == 3);  // forced

    auto c5 = cycle_graph(5);
    Coloring base2 = Coloring::unassigned(5, 4);
    base2.color = {1, 2, 3, 0, 0};
    CHECK_FALSE(extend_locally(c5, base2, {3, 4}, 4).has_value());

    auto c6 = cycle_graph(6);
    Coloring base3 = Coloring::unassigned(6, 3);
    base3.color = {1, 2, 3, 1, 0, 0};
    auto done = extend_locally(c6, base3, {4, 5}, 3);
    REQUIRE(done.has_value());
    CHECK(done->color[4] == 2);
    CHECK(done->color[5] == 3);
    CHECK(verify(c6, *done, Mode::pcf).ok);

    CHECK_THROWS_AS(extend_locally(c6, Coloring::unassigned(6, 3),
                                   std::vector<int>{0, 1, 2, 3, 4, 5, 0}, 3),
                    too_large_frontier);
}

TEST_CASE("extend_locally respects exempt isolated context") {
    // star center removed: the leaves are isolated in the base graph
    auto star = star_graph(3);
    Coloring base = Coloring::unassigned(4, 3);
    base.color = {0, 1, 1, 2};
    auto ext = extend_locally(star, base, {0}, 3);
    REQUIRE(ext.has_value());
    CHECK(ext->color[0] == 3);
    CHECK(verify(star, *ext, Mode::pcf).ok);

    // all leaves alike: the center can never see a singleton color
    Coloring stuck = Coloring::unassigned(4, 3);
    stuck.color = {0, 1, 1, 1};
    CHECK_FALSE(extend_locally(star, stuck, {0}, 3).has_value());
}
