#include <catch2/catch_amalgamated.hpp>

#include "pcf/constructive.hpp"
#include "pcf/exact.hpp"

using namespace pcf;

TEST_CASE("color_tree") {
    auto k2 = path_graph(2);
    auto out = color_tree(k2);
    CHECK(out.colors_used == 2);
    CHECK(out.bound == 2);

    auto star5 = star_graph(5);
    auto s = color_tree(star5);
    CHECK(s.colors_used == 3);
    CHECK(verify(star5, s.coloring, Mode::pcf).ok);
    CHECK(chromatic_value(star5, Mode::pcf).value == 3);

    auto big = random_tree(1000, 9);
    auto b = color_tree(big);
    CHECK(b.colors_used <= 3);
    CHECK(verify(big, b.coloring, Mode::pcf).ok);

    CHECK_THROWS_AS(color_tree(cycle_graph(4)), not_a_tree);
    CHECK_THROWS_AS(color_tree(build_graph(3, {{0, 1}})), not_a_tree);
    CHECK_THROWS_AS(color_tree(build_graph(1, {})), not_a_tree);
}

TEST_CASE("color_cycle matches the cycle table") {
    CHECK(color_cycle(6).colors_used == 3);
    CHECK(color_cycle(5).colors_used == 5);
    CHECK(color_cycle(7).colors_used == 4);
    for (int n = 3; n <= 200; ++n) {
        auto out = color_cycle(n);
        int expect = n % 3 == 0 ? 3 : (n == 5 ? 5 : 4);
        CHECK(out.colors_used == expect);
        CHECK(verify(cycle_graph(n), out.coloring, Mode::pcf).ok);
    }
    CHECK_THROWS_AS(color_cycle(2), invalid_spec);
}

TEST_CASE("color_hypercube") {
    auto q2 = color_hypercube(2);
    CHECK(q2.colors_used == 4);
    // 1,2,3,4 around the 4-cycle 00-01-11-10
    CHECK(q2.coloring.color == std::vector<int>{1, 2, 4, 3});
    CHECK(verify(hypercube(2), q2.coloring, Mode::pcf).ok);

    for (int d : {3, 4, 10}) {
        auto out = color_hypercube(d);
        CHECK(out.colors_used == 4);
        CHECK(verify(hypercube(d), out.coloring, Mode::pcf).ok);
    }
    CHECK_THROWS_AS(color_hypercube(1), invalid_spec);
}

TEST_CASE("color_path_endpoints pinned patterns") {
    CHECK(color_path_endpoints(5, 1, 1).color == std::vector<int>{1, 2, 4, 3, 1});
    CHECK(color_path_endpoints(7, 1, 2).color == std::vector<int>{1, 2, 3, 4, 1, 3, 2});
    auto p8 = color_path_endpoints(8, 1, 1);
    CHECK(p8.color[0] == 1);
    CHECK((p8.color[1] == 3 && p8.color[2] == 4 && p8.color[3] == 1));
    CHECK(verify(path_graph(8), p8, Mode::pcf).ok);
    CHECK_THROWS_AS(color_path_endpoints(4, 1, 1), too_short);
    CHECK_THROWS_AS(color_path_endpoints(6, 1, 4), invalid_spec);
}

TEST_CASE("color_path_endpoints full contract sweep") {
    for (int n = 5; n <= 100; ++n)
        for (int c1 = 1; c1 <= 3; ++c1)
            for (int cn = 1; cn <= 3; ++cn) {
                auto col = color_path_endpoints(n, c1, cn);
                CHECK(col.color.front() == c1);
                CHECK(col.color.back() == cn);
                CHECK(col.color[1] <= 3);
                CHECK(col.color[n - 2] <= 3);
                CHECK(verify(path_graph(n), col, Mode::pcf).ok);
            }
}

TEST_CASE("color_skn") {
    auto out4 = color_skn(4);
    CHECK(out4.colors_used == 4);
    // the published table, with subdividers indexed after the branch vertices
    CHECK(out4.coloring.color == std::vector<int>{1, 2, 3, 4, 4, 2, 3, 1, 1, 2});

    auto out5 = color_skn(5);
    CHECK(out5.colors_used == 5);
    CHECK(out5.coloring.color ==
          std::vector<int>{1, 2, 3, 4, 5, 3, 4, 5, 2, 4, 5, 1, 5, 1, 1});

    for (int n : {3, 6, 7, 12, 30}) {
        auto out = color_skn(n);
        CHECK(out.colors_used == n);
        CHECK(verify(complete_subdivision(complete_graph(n)), out.coloring, Mode::pcf).ok);
    }
    CHECK_THROWS_AS(color_skn(2), invalid_spec);
}

TEST_CASE("color_corona") {
    auto c4 = cycle_graph(4);
    auto pc4 = chromatic_value(c4, Mode::proper).witness;
    auto out = color_corona(c4, pc4);
    CHECK(out.colors_used == 3);  // bipartite base forces the fresh color

    auto k33 = cartesian_product(complete_graph(3), complete_graph(3));
    auto pk = chromatic_value(k33, Mode::proper).witness;
    auto out2 = color_corona(k33, pk);
    CHECK(out2.colors_used == 4);

    auto c5 = cycle_graph(5);
    auto pc5 = chromatic_value(c5, Mode::proper).witness;
    auto out3 = color_corona(c5, pc5);
    CHECK(out3.colors_used == 3);  // within the base palette

    Coloring bad{{1, 1, 2, 2}, 2};
    CHECK_THROWS_AS(color_corona(c4, bad), bad_base);

    // a valid but non-contiguous base palette must not collide with the
    // fresh leaf color
    Coloring gappy{{1, 3, 1, 3}, 3};
    auto out4 = color_corona(c4, gappy);
    CHECK(out4.colors_used == 3);
    CHECK(verify(corona_of(c4), out4.coloring, Mode::pcf).ok);
}

TEST_CASE("color_via_total_domination") {
    auto k2 = path_graph(2);
    auto out = color_via_total_domination(k2, {0, 1}, chromatic_value(k2, Mode::proper).witness);
    CHECK(out.colors_used == 2);

    auto c6 = cycle_graph(6);
    auto out2 =
        color_via_total_domination(c6, {0, 1, 3, 4}, chromatic_value(c6, Mode::proper).witness);
    CHECK(out2.colors_used <= 6);

    auto star = star_graph(4);
    auto out3 =
        color_via_total_domination(star, {0, 1}, chromatic_value(star, Mode::proper).witness);
    CHECK(out3.bound == 4);  // gamma_t + chi with the universal vertex trick
    CHECK(out3.colors_used <= 4);

    CHECK_THROWS_AS(
        color_via_total_domination(c6, {0}, chromatic_value(c6, Mode::proper).witness),
        bad_dominating_set);
}

TEST_CASE("product_coloring") {
    auto k2 = path_graph(2);
    auto out = product_coloring(k2, Coloring{{1, 1}, 1}, Coloring{{1, 2}, 2});
    CHECK(out.colors_used == 2);

    for (const Graph& g : {cycle_graph(5), hypercube(3), kite_graph()}) {
        auto f = chromatic_value(g, Mode::cf);
        auto p = chromatic_value(g, Mode::proper);
        auto o = product_coloring(g, f.witness, p.witness);
        CHECK(o.bound == f.value * p.value);
        CHECK(verify(g, o.coloring, Mode::pcf).ok);
    }

    CHECK_THROWS_AS(product_coloring(k2, Coloring{{1, 1}, 1}, Coloring{{1, 1}, 1}), bad_base);
}

TEST_CASE("color_subdivided_matching") {
    auto c4 = cycle_graph(4);
    auto out = color_subdivided_matching(c4, {{0, 1}, {2, 3}},
                                         chromatic_value(c4, Mode::proper).witness);
    CHECK(out.colors_used == 4);
    CHECK(chromatic_value(cycle_graph(8), Mode::pcf).value == 4);

    auto k4 = complete_graph(4);
    auto out2 = color_subdivided_matching(k4, {{0, 1}, {2, 3}},
                                          chromatic_value(k4, Mode::proper).witness);
    CHECK(out2.colors_used <= 5);

    auto k33 = complete_bipartite(3, 3);
    auto out3 = color_subdivided_matching(k33, {{0, 3}, {1, 4}, {2, 5}},
                                          chromatic_value(k33, Mode::proper).witness);
    CHECK(out3.colors_used <= 4);

    CHECK_THROWS_AS(color_subdivided_matching(c4, {{0, 1}},
                                              chromatic_value(c4, Mode::proper).witness),
                    bad_matching);
    CHECK_THROWS_AS(color_subdivided_matching(c4, {{0, 2}, {1, 3}},
                                              chromatic_value(c4, Mode::proper).witness),
                    bad_matching);

    // non-contiguous base palette on the general branch
    auto out5 = color_subdivided_matching(k4, {{0, 1}, {2, 3}}, Coloring{{1, 2, 5, 6}, 6});
    CHECK(out5.colors_used <= out5.bound);
}

TEST_CASE("color_subdivided_forest") {
    auto k3 = complete_graph(3);
    auto out = color_subdivided_forest(k3, {{0, 1}, {1, 2}}, {},
                                       chromatic_value(k3, Mode::proper).witness);
    CHECK(out.colors_used == 5);  // subdividing a spanning tree of a triangle -> pentagon

    auto c4 = cycle_graph(4);
    auto out2 = color_subdivided_forest(c4, {{0, 1}, {2, 3}}, {},
                                        chromatic_value(c4, Mode::proper).witness);
    CHECK(out2.colors_used <= 3);

    auto k4 = complete_graph(4);
    auto out3 = color_subdivided_forest(k4, {{0, 1}, {0, 2}, {0, 3}}, {{1, 2}},
                                        chromatic_value(k4, Mode::proper).witness);
    CHECK(out3.colors_used <= 6);

    CHECK_THROWS_AS(color_subdivided_forest(k4, {{0, 1}}, {},
                                            chromatic_value(k4, Mode::proper).witness),
                    bad_forest);
    CHECK_THROWS_AS(color_subdivided_forest(k4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}, {},
                                            chromatic_value(k4, Mode::proper).witness),
                    bad_forest);
}

TEST_CASE("constructions never beat the exact optimum") {
    // small instances where the exact value is cheap
    std::vector<std::pair<Graph, int>> cases;
    for (int n : {4, 6, 7, 9}) {
        auto out = color_cycle(n);
        CHECK(out.colors_used >= chromatic_value(cycle_graph(n), Mode::pcf).value);
    }
    for (int leaves : {3, 5}) {
        auto g = star_graph(leaves);
        CHECK(color_tree(g).colors_used >= chromatic_value(g, Mode::pcf).value);
    }
    auto sk4 = color_skn(4);
    CHECK(sk4.colors_used >= chromatic_value(complete_subdivision(complete_graph(4)), Mode::pcf).value);
}
