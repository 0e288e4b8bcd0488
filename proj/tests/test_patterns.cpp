#include <catch2/catch_amalgamated.hpp>

#include "ramsey/construct.hpp"
#include "ramsey/patterns.hpp"

#include "generators.hpp"
#include "oracles.hpp"

using namespace ramsey;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5 + i);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

bool oracle_mono(const Graph& h, const EdgeColoring& col, const Graph& pattern) {
    for (int c = 0; c < col.color_count; ++c)
        if (oracle::contains_subgraph(color_class(h, col, c), pattern)) return true;
    return false;
}

// exhaustive locally-injective homomorphism decision over all |V(h)|^|V(g)| maps
bool oracle_lih(const Graph& g, const Graph& h) {
    auto gm = oracle::adjacency_matrix(g);
    auto hm = oracle::adjacency_matrix(h);
    std::vector<int> map(g.vertex_count, 0);
    while (true) {
        bool ok = true;
        for (int u = 0; u < g.vertex_count && ok; ++u)
            for (int v = u + 1; v < g.vertex_count && ok; ++v) {
                if (gm[u][v] && !hm[map[u]][map[v]]) ok = false;
            }
        if (ok) {
            for (int v = 0; v < g.vertex_count && ok; ++v)
                for (int a = 0; a < g.vertex_count && ok; ++a)
                    for (int b = a + 1; b < g.vertex_count && ok; ++b)
                        if (gm[v][a] && gm[v][b] && map[a] == map[b]) ok = false;
        }
        if (ok) return true;
        int i = 0;
        while (i < g.vertex_count && map[i] == h.vertex_count - 1) map[i++] = 0;
        if (i == g.vertex_count) return false;
        ++map[i];
    }
}

} // namespace

TEST_CASE("find_monochromatic on the named colorings") {
    SECTION("alternating C4 has no monochromatic S2") {
        Graph c4 = make_cycle(4);
        EdgeColoring col{2, {0, 1, 0, 1}};
        CHECK_FALSE(find_monochromatic(c4, col, star_spec(2)).has_value());
        CHECK_FALSE(oracle_mono(c4, col, make_star(2)));
    }
    SECTION("every 2-coloring of K_{1,5} has a monochromatic S3") {
        Graph star5 = make_star(5);
        Rng rng(111);
        for (int t = 0; t < 20; ++t) {
            EdgeColoring col = random_coloring(star5, 2, rng.next());
            auto hit = find_monochromatic(star5, col, star_spec(3));
            REQUIRE(hit.has_value());
            CHECK(embedding_valid(star5, make_star(3), hit->second));
        }
    }
    SECTION("a single color class is the host itself") {
        Graph g = petersen();
        EdgeColoring col{1, std::vector<int>(g.edge_count(), 0)};
        auto hit = find_monochromatic(g, col, graph_pattern_spec(g));
        REQUIRE(hit.has_value());
        CHECK(hit->first == 0);
        CHECK(embedding_valid(g, g, hit->second));
    }
}

TEST_CASE("find_monochromatic matches brute-force search on small instances") {
    Rng rng(2222);
    std::vector<PatternSpec> pats = {star_spec(2), star_spec(3), path_spec(4), cycle_spec(4),
                                     kmn_spec(2, 2)};
    for (int t = 0; t < 120; ++t) {
        Graph h = gen::multigraph(2 + rng.below_int(7), 1 + rng.below_int(9), rng);
        int s = 1 + rng.below_int(3);
        EdgeColoring col = random_coloring(h, s, rng.next());
        const PatternSpec& pat = pats[rng.below_int(static_cast<int>(pats.size()))];
        Graph pattern_graph = make_pattern_graph(pat);
        auto hit = find_monochromatic(h, col, pat);
        CHECK(hit.has_value() == oracle_mono(h, col, pattern_graph));
        if (hit) {
            CHECK(embedding_valid(h, pattern_graph, hit->second));
            Graph cls = color_class(h, col, hit->first);
            CHECK(embedding_valid(cls, pattern_graph, hit->second));
        }
    }
    // explicit tree and graph patterns exercise the generic engine
    for (int t = 0; t < 40; ++t) {
        Graph h = gen::er_graph(3 + rng.below_int(7), 0.5, rng);
        int s = 1 + rng.below_int(2);
        EdgeColoring col = random_coloring(h, s, rng.next());
        Graph tree = gen::random_tree(2 + rng.below_int(4), rng);
        PatternSpec pat = graph_pattern_spec(tree, true);
        CHECK(find_monochromatic(h, col, pat).has_value() == oracle_mono(h, col, tree));
    }
}

TEST_CASE("peel_dense_core on the named graphs") {
    SECTION("pendant vertex falls off K4") {
        Graph k4p(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
        PeelResult r = peel_dense_core(k4p);
        CHECK(r.removed == std::vector<int>{4});
        CHECK(r.core.vertex_count == 4);
        CHECK(r.core.edge_count() == 6);
        CHECK(r.core_stats.min_degree == 3);
    }
    SECTION("regular graphs survive whole") {
        Graph c6 = make_cycle(6);
        PeelResult r = peel_dense_core(c6);
        CHECK(r.removed.empty());
        CHECK(r.core.vertex_count == 6);
    }
    SECTION("K_{1,3} already satisfies the stopping rule") {
        // ratio 3/4 < every degree, so nothing qualifies for deletion
        Graph star3 = make_star(3);
        PeelResult r = peel_dense_core(star3);
        CHECK(r.removed.empty());
        CHECK(r.core.vertex_count == 4);
        auto survivors = oracle::peel_survivors(star3);
        CHECK(survivors.size() == 4);
    }
    CHECK_THROWS_AS(peel_dense_core(Graph(3)), std::invalid_argument);
}

TEST_CASE("peel invariants and oracle agreement on random graphs") {
    Rng rng(3333);
    for (int t = 0; t < 200; ++t) {
        Graph g = gen::er_graph_with_edge(2 + rng.below_int(14), rng.unit() * 0.6, rng);
        PeelResult r = peel_dense_core(g);
        // survivors agree with the direct simulation
        auto expected = oracle::peel_survivors(g);
        CHECK(r.core_to_orig == expected);
        // min degree strictly above |E|/|V| of the core
        long long cv = r.core.vertex_count, ce = r.core.edge_count();
        CHECK(static_cast<long long>(r.core_stats.min_degree) * cv > ce);
        // average degree never decreases
        Frac before = degree_stats(g).average_degree;
        CHECK(before <= r.core_stats.average_degree);
        // consequence: average >= 2(delta-1) forces min degree >= delta
        long long delta = before.num / (2 * before.den) + 1;
        CHECK(r.core_stats.min_degree >= delta);
    }
}

TEST_CASE("embed_tree on the named hosts") {
    SECTION("star into the Petersen graph") {
        TreeEmbedding r = embed_tree(petersen(), make_star(3));
        REQUIRE(r.embedding.has_value());
        CHECK(embedding_valid(petersen(), make_star(3), *r.embedding));
    }
    SECTION("path along a long cycle") {
        TreeEmbedding r = embed_tree(make_cycle(10), make_path(5));
        REQUIRE(r.embedding.has_value());
    }
    SECTION("P5 cannot fit in C4") {
        CHECK_FALSE(oracle::contains_subgraph(make_cycle(4), make_path(5)));
        TreeEmbedding r = embed_tree(make_cycle(4), make_path(5));
        CHECK_FALSE(r.embedding.has_value());
        CHECK(r.stuck_vertex >= 0);
    }
    SECTION("root requirement can fail on low-degree hosts") {
        TreeEmbedding r = embed_tree(make_cycle(8), make_star(2), 3);
        CHECK_FALSE(r.embedding.has_value());
    }
    CHECK_THROWS_AS(embed_tree(make_cycle(8), make_cycle(3)), std::invalid_argument);
}

TEST_CASE("embed_tree succeeds under the girth and degree hypotheses") {
    Graph host = high_girth_regular(3, 9, 404);
    Rng rng(4444);
    for (int t = 0; t < 40; ++t) {
        Graph tree;
        do {
            tree = gen::random_tree(2 + rng.below_int(7), rng);
        } while (max_degree(tree) > 3);
        TreeEmbedding r = embed_tree(host, tree);
        REQUIRE(r.embedding.has_value());
        CHECK(embedding_valid(host, tree, *r.embedding));
    }
}

TEST_CASE("kst_threshold evaluates the exact inequality") {
    CHECK(kst_threshold(4, 7, 2, 2, 2));       // 7 * 1 > 1 * 6
    CHECK_FALSE(kst_threshold(4, 6, 2, 2, 2)); // 6 = 6 fails the strict test
    // degenerate m = 0: N * 1 > (n-1) * 1
    CHECK(kst_threshold(4, 6, 2, 0, 6));
    CHECK_FALSE(kst_threshold(4, 6, 2, 0, 7));
    CHECK_THROWS_AS(kst_threshold(4, 7, 5, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(kst_threshold(4, 7, 2, 3, 0), std::invalid_argument);
}

TEST_CASE("kst_find on the named hosts") {
    SECTION("complete bipartite") {
        auto cert = kst_find(make_complete_bipartite(2, 3), 2, 3);
        REQUIRE(cert.has_value());
        CHECK(cert->left_set == std::vector<int>{0, 1});
        CHECK(cert->right_set == std::vector<int>{2, 3, 4});
    }
    SECTION("C8 has no C4") {
        Graph c8 = parse_graph("n 8\nbip 4\ne 0 4\ne 4 1\ne 1 5\ne 5 2\ne 2 6\ne 6 3\ne 3 7\ne 7 0\n");
        CHECK_FALSE(kst_find(c8, 2, 2).has_value());
    }
    SECTION("not bipartite") {
        CHECK_THROWS_AS(kst_find(make_cycle(5), 2, 2), std::invalid_argument);
    }
}

TEST_CASE("kst_find agrees with exhaustive search on small bipartite graphs") {
    Rng rng(5555);
    for (int t = 0; t < 150; ++t) {
        int M = 1 + rng.below_int(6);
        int N = 1 + rng.below_int(6);
        Graph g = gen::subgraph_of_kmn(M, N, rng.below_int(M * N + 1), rng);
        int m = 1 + rng.below_int(std::min(M, 3));
        int n = 1 + rng.below_int(3);
        auto cert = kst_find(g, m, n);
        bool expected = oracle::contains_kmn_bipartite(g, *g.bipartition, m, n);
        CHECK(cert.has_value() == expected);
        if (cert) {
            CHECK(static_cast<int>(cert->left_set.size()) == m);
            CHECK(static_cast<int>(cert->right_set.size()) == n);
            auto adj = oracle::adjacency_matrix(g);
            for (int a : cert->left_set)
                for (int b : cert->right_set) REQUIRE(adj[a][b]);
        }
    }
}

TEST_CASE("locally injective homomorphisms") {
    SECTION("identity always qualifies") {
        Graph g = petersen();
        auto w = locally_injective_hom(g, g);
        REQUIRE(w.has_value());
    }
    SECTION("C6 wraps twice around C3") {
        auto w = locally_injective_hom(make_cycle(6), make_cycle(3));
        REQUIRE(w.has_value());
        CHECK(oracle_lih(make_cycle(6), make_cycle(3)));
    }
    SECTION("S3 cannot map into P3") {
        CHECK_FALSE(locally_injective_hom(make_star(3), make_path(3)).has_value());
        CHECK_FALSE(oracle_lih(make_star(3), make_path(3)));
    }
    SECTION("oracle agreement and witness validity on random pairs") {
        Rng rng(6666);
        for (int t = 0; t < 60; ++t) {
            Graph g = gen::er_graph(1 + rng.below_int(5), 0.5, rng);
            Graph h = gen::er_graph(1 + rng.below_int(5), 0.6, rng);
            auto w = locally_injective_hom(g, h);
            CHECK(w.has_value() == oracle_lih(g, h));
            if (w) {
                auto gm = oracle::adjacency_matrix(g);
                auto hm = oracle::adjacency_matrix(h);
                auto dg = degrees(g);
                auto dh = degrees(h);
                for (const Edge& e : g.edges) REQUIRE(hm[(*w)[e.u]][(*w)[e.v]]);
                for (int v = 0; v < g.vertex_count; ++v) REQUIRE(dh[(*w)[v]] >= dg[v]);
            }
        }
    }
}

TEST_CASE("majority_color_class obeys the pigeonhole bound") {
    SECTION("K33 with two colors keeps at least five edges in one class") {
        Graph k33 = make_complete_bipartite(3, 3);
        Rng rng(7777);
        for (int t = 0; t < 30; ++t) {
            EdgeColoring col = random_coloring(k33, 2, rng.next());
            auto [c, cls] = majority_color_class(k33, col);
            CHECK(cls.edge_count() >= 5);
            CHECK((c == 0 || c == 1));
        }
    }
    SECTION("single color returns the host") {
        Graph h = make_star(4);
        EdgeColoring col{1, std::vector<int>(4, 0)};
        auto [c, cls] = majority_color_class(h, col);
        CHECK(c == 0);
        CHECK(cls == h);
    }
    SECTION("ties break to the lowest color") {
        Graph p5 = make_path(5);
        EdgeColoring col{2, {0, 1, 0, 1}};
        auto [c, cls] = majority_color_class(p5, col);
        CHECK(c == 0);
        CHECK(cls.edge_count() == 2);
    }
    CHECK_THROWS_AS(majority_color_class(Graph(3), EdgeColoring{2, {}}), std::invalid_argument);
}
