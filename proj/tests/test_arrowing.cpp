#include <catch2/catch_amalgamated.hpp>

#include "ramsey/arrowing.hpp"
#include "ramsey/construct.hpp"

#include "generators.hpp"
#include "oracles.hpp"

using namespace ramsey;

TEST_CASE("verify_coloring on the named instances") {
    Graph c4 = make_cycle(4);
    CHECK(verify_coloring(c4, EdgeColoring{2, {0, 1, 0, 1}}, star_spec(2)));

    Graph star5 = make_star(5);
    Rng rng(808);
    for (int t = 0; t < 10; ++t)
        CHECK_FALSE(verify_coloring(star5, random_coloring(star5, 2, rng.next()), star_spec(3)));

    // a pattern larger than the host never embeds
    CHECK(verify_coloring(c4, EdgeColoring{1, {0, 0, 0, 0}}, path_spec(9)));
}

TEST_CASE("decide_arrowing finds the P4 certificate") {
    Graph p4 = make_path(4);
    ArrowVerdict v = decide_arrowing(p4, star_spec(2), 2);
    REQUIRE(v.not_arrows());
    REQUIRE(v.certificate.has_value());
    CHECK(verify_coloring(p4, *v.certificate, star_spec(2)));

    // the brute-force oracle scans colorings in odometer order and lands on 0,1,0
    ArrowVerdict b = brute_force_arrowing(p4, star_spec(2), 2);
    REQUIRE(b.not_arrows());
    CHECK(b.certificate->assignment == std::vector<int>{0, 1, 0});
}

TEST_CASE("decide_arrowing on stars and single colors") {
    CHECK(decide_arrowing(make_star(5), star_spec(3), 2).arrows());
    CHECK(decide_arrowing(make_star(3), star_spec(2), 2).arrows());
    CHECK(decide_arrowing(make_star(2), star_spec(2), 2).not_arrows());

    // one color: arrows exactly when the host contains the pattern
    Rng rng(909);
    for (int t = 0; t < 30; ++t) {
        Graph h = gen::er_graph(2 + rng.below_int(6), 0.5, rng);
        PatternSpec pat = path_spec(2 + rng.below_int(3));
        ArrowVerdict v = decide_arrowing(h, pat, 1);
        CHECK(v.arrows() == oracle::contains_subgraph(h, make_pattern_graph(pat)));
    }
}

TEST_CASE("edgeless patterns arrow by counting vertices") {
    ArrowVerdict v = decide_arrowing(make_cycle(4), path_spec(1), 2);
    CHECK(v.arrows());
    ArrowVerdict w = decide_arrowing(Graph(2), path_spec(1), 3);
    CHECK(w.arrows());
    CHECK(brute_force_arrowing(Graph(0), path_spec(1), 2).not_arrows());
}

TEST_CASE("brute_force_arrowing on the named instances") {
    CHECK(brute_force_arrowing(make_cycle(4), star_spec(2), 2).not_arrows());
    CHECK(decide_arrowing(make_cycle(4), star_spec(2), 2).not_arrows());

    ArrowVerdict v = brute_force_arrowing(make_star(3), star_spec(2), 2);
    CHECK(v.arrows());
    CHECK(v.nodes_explored == 8);

    CHECK(brute_force_arrowing(make_path(2), star_spec(1), 1).arrows());

    CHECK_THROWS_AS(brute_force_arrowing(make_complete_bipartite(5, 5), star_spec(2), 10),
                    std::invalid_argument);
}

TEST_CASE("decider and oracle agree on random instances") {
    Rng rng(13131);
    std::vector<PatternSpec> pats = {star_spec(2), star_spec(3), path_spec(4), cycle_spec(4),
                                     kmn_spec(2, 2)};
    int not_arrows_seen = 0;
    for (int t = 0; t < 80; ++t) {
        Graph h = gen::multigraph(2 + rng.below_int(6), 1 + rng.below_int(8), rng);
        int s = 2 + rng.below_int(2);
        const PatternSpec& pat = pats[rng.below_int(static_cast<int>(pats.size()))];
        ArrowVerdict fast = decide_arrowing(h, pat, s);
        ArrowVerdict slow = brute_force_arrowing(h, pat, s);
        REQUIRE_FALSE(fast.unknown());
        CHECK(fast.arrows() == slow.arrows());
        if (fast.not_arrows()) {
            ++not_arrows_seen;
            CHECK(verify_coloring(h, *fast.certificate, pat));
            CHECK(verify_coloring(h, *slow.certificate, pat));
        }
    }
    CHECK(not_arrows_seen > 0);
}

TEST_CASE("arrowing is monotone under adding host edges") {
    // K_{1,3} arrows S2 with 2 colors; any host containing it does too
    Graph sub = make_star(3);
    REQUIRE(decide_arrowing(sub, star_spec(2), 2).arrows());
    Graph bigger = make_star(3);
    bigger.vertex_count = 6;
    bigger.add_edge(1, 4);
    bigger.add_edge(4, 5);
    CHECK(decide_arrowing(bigger, star_spec(2), 2).arrows());

    Rng rng(14141);
    for (int t = 0; t < 10; ++t) {
        Graph h = gen::multigraph(3 + rng.below_int(4), 1 + rng.below_int(5), rng);
        Graph h2 = h;
        int u = rng.below_int(h.vertex_count);
        int v = (u + 1 + rng.below_int(h.vertex_count - 1)) % h.vertex_count;
        h2.add_edge(u, v);
        if (decide_arrowing(h, star_spec(2), 2).arrows())
            CHECK(decide_arrowing(h2, star_spec(2), 2).arrows());
    }
}

TEST_CASE("budget exhaustion reports unknown") {
    SearchBudget tiny;
    tiny.max_nodes = 2;
    ArrowVerdict v = decide_arrowing(make_complete_bipartite(3, 3), cycle_spec(4), 2, tiny);
    CHECK(v.unknown());
    CHECK(v.nodes_explored >= 2);
}

TEST_CASE("host_upper_bound_scan picks the smallest arrowing host") {
    SECTION("star family") {
        std::vector<Graph> hosts = {make_star(2), make_star(3)};
        auto r = host_upper_bound_scan(star_spec(2), 2, hosts);
        REQUIRE(r.has_value());
        CHECK(r->best_max_degree == 3);
        CHECK(r->host_index == 1);
        CHECK(r->upper_bound_only);
    }
    SECTION("single color path") {
        std::vector<Graph> hosts = {make_path(5)};
        auto r = host_upper_bound_scan(path_spec(5), 1, hosts);
        REQUIRE(r.has_value());
        CHECK(r->best_max_degree == 2);
    }
    SECTION("hosts too small") {
        std::vector<Graph> hosts = {make_path(2), make_path(3)};
        CHECK_FALSE(host_upper_bound_scan(star_spec(4), 2, hosts).has_value());
    }
    CHECK_THROWS_AS(host_upper_bound_scan(star_spec(2), 2, {}), std::invalid_argument);
}
