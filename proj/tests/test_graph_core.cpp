#include <catch2/catch_amalgamated.hpp>

#include "ramsey/construct.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"

#include "generators.hpp"
#include "oracles.hpp"

using namespace ramsey;

TEST_CASE("parse_graph reads the smallest host") {
    Graph g = parse_graph("n 2\ne 0 1\n");
    CHECK(g.vertex_count == 2);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edges[0].u == 0);
    CHECK(g.edges[0].v == 1);
    CHECK_FALSE(g.bipartition.has_value());
}

TEST_CASE("parse_graph reads C4 with a bipartition") {
    const std::string text = "n 4\nbip 2\ne 0 2\ne 1 3\ne 0 3\ne 1 2\n";
    Graph g = parse_graph(text);
    CHECK(g.vertex_count == 4);
    CHECK(g.edge_count() == 4);
    REQUIRE(g.bipartition.has_value());
    CHECK(g.bipartition->side_a == std::vector<int>{0, 1});
    CHECK(g.bipartition->side_b == std::vector<int>{2, 3});
    CHECK(serialize_graph(g) == text);
}

TEST_CASE("parse_graph rejects bad input with line numbers") {
    SECTION("loop edge") {
        try {
            parse_graph("n 3\ne 0 0\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
        }
    }
    SECTION("endpoint out of range") {
        try {
            parse_graph("n 3\n# comment\ne 0 3\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
        }
    }
    SECTION("edge violating declared bipartition") {
        try {
            parse_graph("n 4\nbip 2\ne 0 1\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
        }
    }
    CHECK_THROWS_AS(parse_graph("e 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 2\nn 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 2\nxyz\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 2\ne 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("serialize_graph emits the body only for edgeless graphs") {
    CHECK(serialize_graph(Graph(5)) == "n 5\n");
}

TEST_CASE("serialize_graph keeps parallel edges") {
    Graph g(2, {{0, 1}, {0, 1}});
    CHECK(serialize_graph(g) == "n 2\ne 0 1\ne 0 1\n");
}

TEST_CASE("serialize_graph rejects non-prefix bipartitions") {
    Graph g(4, {{0, 1}});
    g.bipartition = Bipartition{{0, 2}, {1, 3}};
    CHECK_THROWS_AS(serialize_graph(g), std::invalid_argument);
}

TEST_CASE("parse of serialize is the identity on random graphs") {
    Rng rng(20101);
    for (int t = 0; t < 50; ++t) {
        Graph g = gen::multigraph(2 + rng.below_int(10), rng.below_int(20), rng);
        Graph back = parse_graph(serialize_graph(g));
        CHECK(back == g);
    }
    // with prefix bipartitions
    for (int t = 0; t < 20; ++t) {
        Graph g = gen::regular_bipartite_multigraph(1 + rng.below_int(5), 1 + rng.below_int(4), rng);
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
}

TEST_CASE("girth on the named instances") {
    CHECK(girth(make_cycle(6)) == 6);
    CHECK(girth(make_complete_bipartite(3, 3)) == 4);
    Rng rng(7345);
    for (int t = 0; t < 10; ++t)
        CHECK_FALSE(girth(gen::random_tree(2 + rng.below_int(12), rng)).has_value());
    CHECK(girth(Graph(2, {{0, 1}, {0, 1}})) == 2);
    CHECK(girth(make_complete_bipartite(1, 4)) == std::nullopt);
}

TEST_CASE("girth is infinite exactly when the cycle space rank is zero") {
    Rng rng(55001);
    for (int t = 0; t < 200; ++t) {
        Graph g = gen::multigraph(2 + rng.below_int(10), rng.below_int(14), rng);
        bool acyclic = !girth(g).has_value();
        CHECK(acyclic == (oracle::cycle_space_rank(g) == 0));
    }
}

TEST_CASE("girth_at_least agrees with the exact girth") {
    Rng rng(90210);
    for (int t = 0; t < 150; ++t) {
        Graph g = gen::multigraph(3 + rng.below_int(9), rng.below_int(16), rng);
        auto exact = girth(g);
        for (int target = 2; target <= 9; ++target) {
            bool expect = !exact.has_value() || *exact >= target;
            CHECK(girth_at_least(g, target) == expect);
        }
    }
}

TEST_CASE("degree_stats on stars, cycles and a pendant K4") {
    DegreeStats s1 = degree_stats(make_star(4));
    CHECK(s1.min_degree == 1);
    CHECK(s1.max_degree == 4);
    CHECK(s1.average_degree == Frac(8, 5));

    DegreeStats s2 = degree_stats(make_cycle(6));
    CHECK(s2.min_degree == 2);
    CHECK(s2.max_degree == 2);
    CHECK(s2.average_degree == Frac(2, 1));

    Graph k4p(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    DegreeStats s3 = degree_stats(k4p);
    CHECK(s3.min_degree == 1);
    CHECK(s3.max_degree == 4);
    CHECK(s3.average_degree == Frac(14, 5));

    CHECK_THROWS_AS(degree_stats(Graph(0)), std::invalid_argument);
}

TEST_CASE("average degree times vertex count is exactly twice the edge count") {
    Rng rng(64000);
    for (int t = 0; t < 100; ++t) {
        Graph g = gen::multigraph(1 + rng.below_int(12), rng.below_int(20), rng);
        Frac avg = degree_stats(g).average_degree;
        CHECK(avg.num * g.vertex_count == 2LL * g.edge_count() * avg.den);
    }
}

TEST_CASE("color_class extracts spanning subgraphs") {
    SECTION("alternating C4 gives a perfect matching") {
        Graph c4 = make_cycle(4);
        EdgeColoring col{2, {0, 1, 0, 1}};
        Graph cls = color_class(c4, col, 0);
        CHECK(cls.vertex_count == 4);
        REQUIRE(cls.edge_count() == 2);
        auto deg = degrees(cls);
        for (int v = 0; v < 4; ++v) CHECK(deg[v] == 1);
    }
    SECTION("single color returns the host") {
        Graph h = make_complete_bipartite(2, 3);
        EdgeColoring col{1, std::vector<int>(h.edge_count(), 0)};
        CHECK(color_class(h, col, 0) == h);
    }
    SECTION("two edges per color out of K_{1,6}") {
        Graph star6 = make_star(6);
        EdgeColoring col{3, {0, 0, 1, 1, 2, 2}};
        Graph cls = color_class(star6, col, 2);
        CHECK(cls.vertex_count == 7);
        REQUIRE(cls.edge_count() == 2);
        CHECK(cls.edges[0] == Edge{0, 5});
        CHECK(cls.edges[1] == Edge{0, 6});
    }
    SECTION("color index out of range") {
        Graph h = make_star(2);
        EdgeColoring col{2, {0, 1}};
        CHECK_THROWS_AS(color_class(h, col, 2), std::out_of_range);
    }
}

TEST_CASE("color classes partition the edge list") {
    Rng rng(31337);
    for (int t = 0; t < 50; ++t) {
        Graph g = gen::multigraph(2 + rng.below_int(8), 1 + rng.below_int(15), rng);
        int s = 1 + rng.below_int(4);
        EdgeColoring col = random_coloring(g, s, rng.next());
        int total = 0;
        for (int c = 0; c < s; ++c) total += color_class(g, col, c).edge_count();
        CHECK(total == g.edge_count());
    }
}

TEST_CASE("check_bipartition on odd and even cycles") {
    CHECK_FALSE(check_bipartition(make_cycle(5)).has_value());
    auto b = check_bipartition(make_cycle(6));
    REQUIRE(b.has_value());
    CHECK(b->side_a == std::vector<int>{0, 2, 4});
    CHECK(b->side_b == std::vector<int>{1, 3, 5});
}

TEST_CASE("check_bipartition validates declared sides and double covers") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Graph cover = bipartite_double_cover(k4);
    auto b = check_bipartition(cover);
    REQUIRE(b.has_value());
    CHECK(b->side_a.size() + b->side_b.size() == 8);
    CHECK(bipartition_valid(cover, *b));
}

TEST_CASE("coloring files round-trip and reject malformed input") {
    EdgeColoring col{3, {2, 0, 1, 1}};
    EdgeColoring back = parse_coloring(serialize_coloring(col), 4);
    CHECK(back.color_count == col.color_count);
    CHECK(back.assignment == col.assignment);

    CHECK_THROWS_AS(parse_coloring("s 2\nc 0 0\n", 2), ParseError);         // missing edge
    CHECK_THROWS_AS(parse_coloring("s 2\nc 0 0\nc 0 1\n", 2), ParseError);  // duplicate
    CHECK_THROWS_AS(parse_coloring("s 2\nc 0 2\nc 1 0\n", 2), ParseError);  // color range
    CHECK_THROWS_AS(parse_coloring("c 0 0\n", 1), ParseError);              // missing header
}

TEST_CASE("embedding validity checks injectivity and edges") {
    Graph host = make_cycle(4);
    Graph pat = make_path(3);
    CHECK(embedding_valid(host, pat, Embedding{{0, 1, 2}}));
    CHECK_FALSE(embedding_valid(host, pat, Embedding{{0, 1, 1}}));
    CHECK_FALSE(embedding_valid(host, pat, Embedding{{0, 2, 1}}));
    // multiplicity: doubled pattern edge needs a doubled host edge
    Graph mpat(2, {{0, 1}, {0, 1}});
    Graph mhost1(2, {{0, 1}});
    Graph mhost2(2, {{0, 1}, {1, 0}});
    CHECK_FALSE(embedding_valid(mhost1, mpat, Embedding{{0, 1}}));
    CHECK(embedding_valid(mhost2, mpat, Embedding{{0, 1}}));
}
