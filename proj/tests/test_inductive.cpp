#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pcf/exact.hpp"
#include "pcf/inductive.hpp"

using namespace pcf;

namespace {

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    std::vector<std::pair<int, int>> les;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                les.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return build_graph(static_cast<int>(es.size()), les);
}

Graph petersen() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(i, i + 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return build_graph(10, es);
}

Graph random_interval_graph(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::pair<int, int>> iv(n);
    for (auto& [a, b] : iv) {
        a = static_cast<int>(rng() % 100);
        b = a + 1 + static_cast<int>(rng() % 25);
    }
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::max(iv[u].first, iv[v].first) <= std::min(iv[u].second, iv[v].second))
                es.emplace_back(u, v);
    return build_graph(n, es);
}

Graph with_pendant(const Graph& g, int at) {
    auto es = g.edges();
    es.emplace_back(at, g.n);
    return build_graph(g.n + 1, es);
}

}  // namespace

TEST_CASE("color_ab") {
    auto c5 = cycle_graph(5);
    auto cert = ab_certificate(c5, 2, 2);
    REQUIRE(cert.certificate.has_value());
    auto out = color_ab(c5, *cert.certificate);
    CHECK(out.colors_used == 5);
    CHECK(out.bound == 5);

    // branch vertices pairwise at distance 3: (2,2)-eliminable, five colors
    auto twice = uniform_subdivision(complete_graph(4), 2);
    auto cert2 = ab_certificate(twice, 2, 2);
    REQUIRE(cert2.certificate.has_value());
    auto out2 = color_ab(twice, *cert2.certificate);
    CHECK(out2.colors_used <= 5);
    CHECK(verify(twice, out2.coloring, Mode::pcf).ok);

    auto sk5 = complete_subdivision(complete_graph(5));
    auto cert3 = ab_certificate(sk5, 2, 4);
    REQUIRE(cert3.certificate.has_value());
    auto out3 = color_ab(sk5, *cert3.certificate);
    CHECK(out3.bound == 8);
    CHECK(out3.colors_used <= 8);

    auto certh = h_edge_certificate(sk5, 6);
    REQUIRE(certh.certificate.has_value());
    auto outh = color_ab(sk5, *certh.certificate);
    CHECK(outh.bound == 8);

    // a certificate for the wrong graph is rejected
    CHECK_THROWS_AS(color_ab(cycle_graph(6), *cert.certificate), invalid_spec);
}

TEST_CASE("color_clawfree") {
    auto k4 = complete_graph(4);
    auto out = color_clawfree(k4);
    CHECK(out.bound == 7);
    CHECK(out.colors_used <= 7);

    auto c5 = cycle_graph(5);
    auto out2 = color_clawfree(c5);
    CHECK(out2.bound == 5);
    CHECK(out2.colors_used == 5);

    auto lp = line_graph(petersen());
    REQUIRE_FALSE(find_claw(lp).has_value());
    auto out3 = color_clawfree(lp);
    CHECK(out3.bound == 2 * lp.max_degree() + 1);
    CHECK(verify(lp, out3.coloring, Mode::pcf).ok);

    CHECK_THROWS_AS(color_clawfree(star_graph(3)), not_claw_free);
    try {
        color_clawfree(star_graph(5));
    } catch (const not_claw_free& e) {
        CHECK(e.witness.size() == 4);
        CHECK(e.witness[0] == 0);
    }
}

TEST_CASE("color_chordal") {
    auto k5 = complete_graph(5);
    auto out = color_chordal(k5);
    CHECK(out.colors_used == 5);

    auto remark = chordal_remark_graph();
    auto out2 = color_chordal(remark);
    CHECK(out2.bound == 9);
    CHECK(out2.colors_used <= 9);
    CHECK(chromatic_value(remark, Mode::pcf).value == 4);

    auto ig = random_interval_graph(50, 31);
    auto out3 = color_chordal(ig);
    CHECK(out3.colors_used <= 2 * ig.max_degree() + 1);
    CHECK(verify(ig, out3.coloring, Mode::pcf).ok);

    CHECK_THROWS_AS(color_chordal(cycle_graph(6)), not_chordal);
}

TEST_CASE("color_sparse regimes") {
    // mad 2.6 instance: C10 plus three long chords
    auto g83 = build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                                {7, 8}, {8, 9}, {9, 0}, {0, 5}, {2, 7}, {4, 9}});
    REQUIRE(mad(g83) == Frac(13, 5));
    auto res83 = color_sparse(g83, MadRegime::below_8_3);
    REQUIRE(res83.outcome.has_value());
    CHECK(res83.outcome->colors_used <= 6);
    CHECK_THROWS_AS(color_sparse(g83, MadRegime::below_5_2), hypothesis_violated);

    // complete subdivision of K4: no adjacent 2-vertices, forces the
    // 3-vertex configuration in the mad < 5/2 recursion
    auto sk4 = complete_subdivision(complete_graph(4));
    REQUIRE(mad(sk4) == Frac(12, 5));
    auto res52 = color_sparse(sk4, MadRegime::below_5_2);
    REQUIRE(res52.outcome.has_value());
    CHECK(res52.outcome->colors_used <= 5);
    CHECK(res52.outcome->colors_used >= 4);  // chi_pcf(SK4) = 4

    auto p11 = path_graph(11);
    auto resp = color_sparse(p11, MadRegime::below_5_2);
    REQUIRE(resp.outcome.has_value());
    CHECK(resp.outcome->colors_used <= 5);

    // strictest regime
    auto c7 = cycle_graph(7);
    auto res7 = color_sparse(c7, MadRegime::below_24_11);
    REQUIRE(res7.outcome.has_value());
    CHECK(res7.outcome->colors_used == 4);

    CHECK_THROWS_AS(color_sparse(f_chain(2), MadRegime::below_24_11), hypothesis_violated);

    auto resc5 = color_sparse(cycle_graph(5), MadRegime::below_24_11);
    CHECK(resc5.f_member);
    CHECK_FALSE(resc5.outcome.has_value());

    // a tree with a long thread plus a pentagon far away is fine at mad < 24/11
    auto spider = uniform_subdivision(star_graph(3), 5);
    auto ress = color_sparse(spider, MadRegime::below_24_11);
    REQUIRE(ress.outcome.has_value());
    CHECK(ress.outcome->colors_used <= 4);
}

TEST_CASE("color_sparse exercises the block-component cases") {
    // pentagon with a pendant path: the cycle-thread of the pentagon shows
    // up with coinciding endpoints
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) es.emplace_back(i, (i + 1) % 5);
    int prev = 0;
    for (int i = 5; i < 12; ++i) {
        es.emplace_back(prev, i);
        prev = i;
    }
    auto tail = build_graph(12, es);
    REQUIRE(mad(tail) < Frac(24, 11));
    auto res = color_sparse(tail, MadRegime::below_24_11);
    REQUIRE(res.outcome.has_value());
    CHECK(res.outcome->colors_used <= 4);

    // two pentagons joined by a path of four 2-vertices: removing the
    // thread leaves two pentagon components, both five-cycle block graphs
    es.clear();
    es = {{4, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 9}};
    for (int i = 4; i < 9; ++i) es.emplace_back(i, i == 8 ? 4 : i + 1);
    for (int i = 9; i < 14; ++i) es.emplace_back(i, i == 13 ? 9 : i + 1);
    auto dumbbell = build_graph(14, es);
    REQUIRE(is_connected(dumbbell));
    REQUIRE(mad(dumbbell) == Frac(15, 7));
    REQUIRE(mad(dumbbell) < Frac(24, 11));
    auto res2 = color_sparse(dumbbell, MadRegime::below_24_11);
    REQUIRE(res2.outcome.has_value());
    CHECK(res2.outcome->colors_used <= 4);

    // a six-vertex connecting path instead: the pentagon components stay
    // connected through the thread remainder
    es.clear();
    for (int i = 0; i < 5; ++i) es.emplace_back(i, (i + 1) % 5);
    for (int i = 5; i < 10; ++i) es.emplace_back(i, i == 9 ? 5 : i + 1);
    prev = 0;
    for (int i = 10; i < 16; ++i) {
        es.emplace_back(prev, i);
        prev = i;
    }
    es.emplace_back(prev, 5);
    auto dumbbell2 = build_graph(16, es);
    REQUIRE(mad(dumbbell2) < Frac(24, 11));
    auto res3 = color_sparse(dumbbell2, MadRegime::below_24_11);
    REQUIRE(res3.outcome.has_value());
    CHECK(res3.outcome->colors_used <= 4);
}

TEST_CASE("sparse recursion handles block components around a thread") {
    // These shapes force the single-component branches of the thread case.
    // Their density puts them outside the public mad gate, but the local
    // extension arguments are unconditional, so the recursion must still
    // produce verified colorings.

    // pentagon plus a 4-thread between two of its vertices: the component
    // left by the thread removal is the pentagon, no cut vertices
    auto es = cycle_graph(5).edges();
    int prev = 1;
    for (int i = 5; i < 9; ++i) {
        es.emplace_back(prev, i);
        prev = i;
    }
    es.emplace_back(prev, 3);
    auto h = build_graph(9, es);
    std::vector<std::string> trace;
    auto colors = pcf::detail::pcf4_recurse(h, trace);
    CHECK(verify(h, Coloring{colors, 4}, Mode::pcf).ok);
    CHECK_FALSE(trace.empty());

    // a three-block chain whose two junction vertices are joined by a
    // 4-thread (indices chosen so that thread is found first): both
    // endpoints are cut vertices, so a lobe is stripped and regrown
    es = {{4, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 8},                     // the thread
          {4, 9}, {9, 10}, {10, 11}, {11, 12}, {12, 4},               // end block
          {4, 5}, {5, 6}, {6, 7}, {7, 8},           {8, 4},           // middle block
          {8, 13}, {13, 14}, {14, 15}, {15, 16}, {16, 8}};            // end block
    auto h2 = build_graph(17, es);
    {
        std::vector<int> chain_verts;
        for (int v = 4; v < 17; ++v) chain_verts.push_back(v);
        auto chain = induced_subgraph(h2, chain_verts);
        REQUIRE(is_in_f(chain.graph));
        REQUIRE(blocks(chain.graph).cut_vertices.size() == 2);
    }
    trace.clear();
    auto colors2 = pcf::detail::pcf4_recurse(h2, trace);
    CHECK(verify(h2, Coloring{colors2, 4}, Mode::pcf).ok);
    bool saw_lobe = false;
    for (const auto& line : trace) saw_lobe |= line.find("lobe") != std::string::npos;
    CHECK(saw_lobe);
}

TEST_CASE("color_thread66") {
    auto out = color_thread66(cycle_graph(9));
    CHECK(out.colors_used == 3);

    auto k4s5 = uniform_subdivision(complete_graph(4), 5);
    auto out2 = color_thread66(k4s5);
    CHECK(out2.colors_used <= 4);
    CHECK(verify(k4s5, out2.coloring, Mode::pcf).ok);

    auto star6 = uniform_subdivision(star_graph(3), 6);
    auto out3 = color_thread66(star6);
    CHECK(out3.colors_used <= 4);

    // two cycles of length 8 sharing a vertex: girth 8, a single branch
    // vertex, so the distance hypothesis is vacuous
    auto bq = color_thread66(bouquet(2, 2));
    CHECK(bq.colors_used <= 4);

    CHECK_THROWS_AS(color_thread66(cycle_graph(5)), hypothesis_violated);   // girth 5
    CHECK_THROWS_AS(color_thread66(complete_subdivision(complete_graph(4))),
                    hypothesis_violated);  // branch distance 2
}

TEST_CASE("color_outerplanar6") {
    CHECK(color_outerplanar6(cycle_graph(6)).colors_used == 3);

    // two hexagons sharing one vertex
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 6; ++i) es.emplace_back(i, (i + 1) % 6);
    int prev = 0;
    for (int i = 6; i < 11; ++i) {
        es.emplace_back(prev, i);
        prev = i;
    }
    es.emplace_back(prev, 0);
    auto twohex = build_graph(11, es);
    auto out = color_outerplanar6(twohex);
    CHECK(out.colors_used <= 4);

    // C10 with a chord splitting it into two hexagons sharing a path
    auto c10 = cycle_graph(10).edges();
    c10.emplace_back(0, 5);
    auto chord = build_graph(10, c10);
    REQUIRE(girth(chord) == 6);
    auto out2 = color_outerplanar6(chord);
    CHECK(out2.colors_used <= 4);

    CHECK_THROWS_AS(color_outerplanar6(cycle_graph(5)), hypothesis_violated);
}

TEST_CASE("color_f_pendant") {
    auto base = with_pendant(cycle_graph(5), 0);
    auto col = color_f_pendant(base);
    CHECK(col.color == std::vector<int>{2, 3, 1, 4, 3, 1});
    CHECK(verify(base, col, Mode::pcf).ok);

    for (int t : {2, 3}) {
        // pendant at a far end-block vertex
        auto fc = f_chain(t);
        auto h = with_pendant(fc, fc.n - 1);
        auto c = color_f_pendant(h);
        CHECK(verify(h, c, Mode::pcf).ok);
        CHECK(c.k == 4);
    }
    // pendant at a cut vertex
    auto fc2 = f_chain(2);
    auto hcut = with_pendant(fc2, 2);
    CHECK(verify(hcut, color_f_pendant(hcut), Mode::pcf).ok);

    CHECK_THROWS_AS(color_f_pendant(with_pendant(cycle_graph(6), 0)), not_f_plus_pendant);
    CHECK_THROWS_AS(color_f_pendant(cycle_graph(5)), not_f_plus_pendant);
}

TEST_CASE("color_planar_girth") {
    auto out = color_planar_girth(cycle_graph(7));
    CHECK(out.colors_used <= 6);

    auto c24 = cycle_graph(24);
    CHECK(color_planar_girth(c24).colors_used <= 4);

    auto k4s5 = uniform_subdivision(complete_graph(4), 5);  // planar, girth 18
    auto out2 = color_planar_girth(k4s5);
    CHECK(out2.colors_used <= 5);

    CHECK_THROWS_AS(color_planar_girth(complete_graph(4)), hypothesis_violated);
}
