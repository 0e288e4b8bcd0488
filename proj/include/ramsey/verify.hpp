#pragma once

#include <chrono>

#include "ramsey/arrowing.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/patterns.hpp"

namespace ramsey {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct PipelineReport {
    std::vector<CheckResult> checks;
    double seconds = 0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

// Random simple bipartite graph on at most 30 vertices whose maximum degree
// is exactly d: one designated vertex is saturated, every other degree is
// capped at d.
inline Graph random_bipartite_host(int d, Rng& rng) {
    int b = d + rng.below_int(std::max(1, 15 - d));
    int a = 2 + rng.below_int(12);
    Graph g(a + b);
    Bipartition bip;
    for (int v = 0; v < a; ++v) bip.side_a.push_back(v);
    for (int v = a; v < a + b; ++v) bip.side_b.push_back(v);
    g.bipartition = std::move(bip);

    std::vector<int> deg(a + b, 0);
    std::set<std::pair<int, int>> present;
    auto add = [&](int u, int v) {
        g.add_edge(u, v);
        ++deg[u];
        ++deg[v];
        present.insert({u, v});
    };
    std::vector<int> targets;
    for (int v = a; v < a + b; ++v) targets.push_back(v);
    rng.shuffle(targets);
    for (int i = 0; i < d; ++i) add(0, targets[i]);

    int extra = rng.below_int(2 * a * b / 3 + 1);
    for (int t = 0; t < extra; ++t) {
        int u = rng.below_int(a);
        int v = a + rng.below_int(b);
        if (deg[u] >= d || deg[v] >= d || present.count({u, v})) continue;
        add(u, v);
    }
    if (max_degree(g) != d) throw InternalError("host generator missed the target degree");
    return g;
}

// Colorings built to dodge monochromatic trees: folded proper edge colorings,
// greedy matchings-first layers, and the all-one-color extreme.
inline std::vector<EdgeColoring> adversarial_colorings(const Graph& h, int s, int d,
                                                       std::uint64_t seed) {
    std::vector<EdgeColoring> out;
    std::vector<int> proper = bipartite_proper_edge_coloring(h, d);

    auto fold = [&](auto&& fn) {
        EdgeColoring col;
        col.color_count = s;
        col.assignment.resize(proper.size());
        for (std::size_t i = 0; i < proper.size(); ++i) col.assignment[i] = fn(proper[i]) % s;
        out.push_back(std::move(col));
    };
    fold([&](int c) { return c * s / d; });          // contiguous blocks
    fold([&](int c) { return c; });                  // classes mod s
    fold([&](int c) { return (c + d / 2) * s / d; }); // rotated blocks
    fold([&](int c) { return c == 0 ? 0 : 1; });     // one class vs the rest

    for (int variant = 0; variant < 5; ++variant) {
        Rng rng(derive_seed(seed, 0xADB0ULL + variant));
        std::vector<int> order(h.edge_count());
        for (int i = 0; i < h.edge_count(); ++i) order[i] = i;
        rng.shuffle(order);
        EdgeColoring col;
        col.color_count = s;
        col.assignment.assign(h.edge_count(), -1);
        std::vector<char> taken(h.vertex_count, 0);
        int layer = 0;
        int remaining = h.edge_count();
        while (remaining > 0) {
            std::fill(taken.begin(), taken.end(), 0);
            for (int e : order) {
                if (col.assignment[e] != -1) continue;
                const Edge& ed = h.edges[e];
                if (taken[ed.u] || taken[ed.v]) continue;
                col.assignment[e] = layer % s;
                taken[ed.u] = taken[ed.v] = 1;
                --remaining;
            }
            ++layer;
        }
        out.push_back(std::move(col));
    }

    EdgeColoring mono;
    mono.color_count = s;
    mono.assignment.assign(h.edge_count(), 0);
    out.push_back(std::move(mono));
    return out;
}

// spider tree: center of degree k, k legs of `leg` edges each
inline Graph make_spider(int k, int leg) {
    Graph g(1 + k * leg);
    int next = 1;
    for (int i = 0; i < k; ++i) {
        int prev = 0;
        for (int j = 0; j < leg; ++j) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// star bound, both directions, exact small cases
// ---------------------------------------------------------------------------

inline PipelineReport verify_lemma1(std::uint64_t seed) {
    detail::Stopwatch watch;
    PipelineReport rep;
    for (int s : {2, 3}) {
        for (int n : {2, 3, 4}) {
            int d = s * (n - 1);
            std::string tag = "s" + std::to_string(s) + "-n" + std::to_string(n);
            ArrowVerdict v = decide_arrowing(make_star(d + 1), star_spec(n), s);
            rep.checks.push_back({"lemma1-arrows-" + tag, v.arrows(),
                                  "K_{1," + std::to_string(d + 1) + "} with " +
                                      std::to_string(s) + " colors; nodes=" +
                                      std::to_string(v.nodes_explored)});
            int good = 0;
            const int hosts = 20;
            for (int t = 0; t < hosts; ++t) {
                Rng rng(derive_seed(seed, 0x1E44AULL + s * 1000 + n * 100 + t));
                Graph h = random_bipartite_host(d, rng);
                EdgeColoring col = star_free_coloring(h, s, n);
                good += verify_coloring(h, col, star_spec(n));
            }
            rep.checks.push_back({"lemma1-star-free-" + tag, good == hosts,
                                  std::to_string(good) + "/" + std::to_string(hosts) +
                                      " hosts with max degree " + std::to_string(d)});
        }
    }
    rep.seconds = watch.seconds();
    return rep;
}

// ---------------------------------------------------------------------------
// tree pipelines
// ---------------------------------------------------------------------------

struct TreePipelineSpec {
    Graph tree;
    int s = 2;
    int host_degree = 0;   // regularity of the bipartite host
    int girth_target = 0;  // strict lower bound requirement is girth >= this
    std::optional<int> root_requirement;
    int random_colorings = 0;
    bool with_adversarial = false;
};

inline PipelineReport run_tree_pipeline(const TreePipelineSpec& spec, const std::string& label,
                                        std::uint64_t seed) {
    detail::Stopwatch watch;
    PipelineReport rep;

    Graph base = high_girth_regular(spec.host_degree, spec.girth_target,
                                    derive_seed(seed, 0xB15EULL));
    Graph host = bipartite_double_cover(base);

    bool host_ok = check_bipartition(host).has_value() &&
                   girth_at_least(host, spec.girth_target);
    {
        auto deg = degrees(host);
        for (int v = 0; v < host.vertex_count; ++v)
            if (deg[v] != spec.host_degree) host_ok = false;
    }
    rep.checks.push_back({label + "-host", host_ok,
                          std::to_string(host.vertex_count) + " vertices, " +
                              std::to_string(spec.host_degree) + "-regular bipartite, girth >= " +
                              std::to_string(spec.girth_target)});

    std::vector<EdgeColoring> colorings;
    for (int i = 0; i < spec.random_colorings; ++i)
        colorings.push_back(random_coloring(host, spec.s, derive_seed(seed, 0xC010ULL + i)));
    if (spec.with_adversarial) {
        auto adv = adversarial_colorings(host, spec.s, spec.host_degree, derive_seed(seed, 0xADFULL));
        colorings.insert(colorings.end(), adv.begin(), adv.end());
    }

    int ok = 0;
    for (const EdgeColoring& col : colorings) {
        auto [c, cls] = majority_color_class(host, col);
        (void)c;
        PeelResult peeled = peel_dense_core(cls);
        TreeEmbedding emb = embed_tree(peeled.core, spec.tree, spec.root_requirement);
        ok += emb.embedding.has_value();
    }
    rep.checks.push_back({label + "-pipeline",
                          ok == static_cast<int>(colorings.size()),
                          std::to_string(ok) + "/" + std::to_string(colorings.size()) +
                              " colorings embedded the tree monochromatically"});
    rep.seconds = watch.seconds();
    return rep;
}

// P_5 through the double cover of a high-girth 4-regular graph, 2 colors
inline PipelineReport verify_theorem3(std::uint64_t seed) {
    TreePipelineSpec spec;
    spec.tree = make_path(5);
    spec.s = 2;
    spec.host_degree = 4;  // 2s(max degree - 1)
    spec.girth_target = 6; // more than |V(P_5)|
    spec.random_colorings = 50;
    spec.with_adversarial = true;
    return run_tree_pipeline(spec, "theorem3", seed);
}

// degree-3 spider with legs of length 2 through a 5-regular girth-8 host
inline PipelineReport verify_theorem2(std::uint64_t seed) {
    TreePipelineSpec spec;
    spec.tree = make_spider(3, 2);
    spec.s = 2;
    spec.host_degree = 2 * (3 - 1) + 1; // s(k-1)+1
    spec.girth_target = 8;              // more than |V(T)| = 7
    spec.root_requirement = 3;
    spec.random_colorings = 30;
    spec.with_adversarial = false;
    return run_tree_pipeline(spec, "theorem2", seed);
}

// ---------------------------------------------------------------------------
// random-coloring expectation arithmetic and Monte Carlo
// ---------------------------------------------------------------------------

inline PipelineReport verify_theorem1_mc(std::uint64_t seed, long long trials = 10000) {
    detail::Stopwatch watch;
    PipelineReport rep;

    BigRat upper = *kmn_expected_upper(6, 2, 2, 2).exact;
    rep.checks.push_back({"theorem1-expected-upper", upper == BigRat(45, 4),
                          "s*C(6,4)*C(4,2)/s^4 = " + rat_str(upper)});

    MonteCarloKmnReport mc = monte_carlo_kmn(6, 2, 2, 2, trials, derive_seed(seed, 0x3C1ULL));
    rep.checks.push_back({"theorem1-copy-count",
                          mc.copies == 45 && mc.exact_expected == BigRat(45, 8),
                          "copies=" + std::to_string(mc.copies) +
                              " exact expectation=" + rat_str(mc.exact_expected)});

    std::ostringstream mean_detail;
    mean_detail << "mean=" << mc.mean_count << " se=" << mc.std_error
                << " target=" << static_cast<double>(mc.exact_expected)
                << " trials=" << trials;
    rep.checks.push_back({"theorem1-mc-mean", mc.mean_within_3se, mean_detail.str()});

    std::ostringstream markov_detail;
    markov_detail << "existence freq=" << mc.existence_freq << " vs bound min(1, "
                  << rat_str(mc.expected_upper) << ")";
    rep.checks.push_back({"theorem1-mc-markov", mc.markov_consistent, markov_detail.str()});

    BigRat c22 = kmn_constant_value(2, 2);
    rep.checks.push_back({"theorem1-constant",
                          c22 == BigRat(5) && kmn_constant_cap_holds(2, 2),
                          "C(2,2)=" + rat_str(c22) + ", cap 4e^3 holds"});

    rep.seconds = watch.seconds();
    return rep;
}

} // namespace ramsey
