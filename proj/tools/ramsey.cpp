// Command-line surface for the arrowing laboratory: arrowing queries with
// certificates, extremal constructions, embeddings, bound reports, and the
// end-to-end theorem pipelines.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/arrowing.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/construct.hpp"
#include "ramsey/patterns.hpp"
#include "ramsey/verify.hpp"

using namespace ramsey;
using nlohmann::json;

namespace {

constexpr int kExitArrows = 0;
constexpr int kExitNotArrows = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("RAMSEY_SEED")) return std::strtoull(env, nullptr, 10);
    return 20240917ULL;
}

json report_json(const BoundReport& r) {
    json j;
    j["name"] = r.name;
    json inputs = json::object();
    for (auto& [k, v] : r.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    j["value"] = r.value_string();
    if (r.exact) j["approx"] = static_cast<double>(*r.exact);
    else j["approx"] = static_cast<double>(*r.approx);
    j["side"] = r.side_string();
    j["source"] = r.source;
    j["flags"] = r.flags;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

void print_report(const BoundReport& r, bool as_json) {
    if (as_json) {
        std::cout << report_json(r).dump() << "\n";
    } else {
        std::cout << r.tsv_line() << "\n";
        if (!r.note.empty()) std::cout << "# " << r.note << "\n";
    }
}

int print_pipeline(const PipelineReport& rep) {
    for (const CheckResult& c : rep.checks)
        std::cout << "CHECK " << c.name << " " << (c.pass ? "PASS" : "FAIL") << " " << c.detail
                  << "\n";
    std::cout << "# elapsed " << rep.seconds << "s\n";
    return rep.all_pass() ? 0 : 1;
}

struct ArrowOptions {
    std::string host_file, pattern_text, cert_out, verify_cert;
    int colors = 2;
    long long budget_nodes = 50'000'000;
    double budget_seconds = 600.0;
    bool oracle = false;
};

int run_arrow(const ArrowOptions& opt) {
    Graph host = parse_graph(read_file(opt.host_file));
    PatternSpec pat = parse_pattern(opt.pattern_text);

    if (!opt.verify_cert.empty()) {
        EdgeColoring cert = parse_coloring(read_file(opt.verify_cert), host.edge_count());
        if (cert.color_count > opt.colors) {
            std::cerr << "certificate uses more colors than --colors\n";
            return kExitUsage;
        }
        auto hit = find_monochromatic(host, cert, pat);
        if (!hit) {
            std::cout << "certificate VALID: no monochromatic " << pat.text
                      << "; host does not arrow with " << opt.colors << " colors\n";
            return kExitNotArrows;
        }
        std::cout << "certificate INVALID: monochromatic " << pat.text << " in color "
                  << hit->first << "\n";
        return kExitUnknown;
    }

    ArrowVerdict v;
    if (opt.oracle) {
        v = brute_force_arrowing(host, pat, opt.colors);
    } else {
        SearchBudget budget;
        budget.max_nodes = opt.budget_nodes;
        budget.max_seconds = opt.budget_seconds;
        v = decide_arrowing(host, pat, opt.colors, budget);
    }
    switch (v.outcome) {
    case ArrowVerdict::Outcome::arrows:
        std::cout << "ARROWS nodes=" << v.nodes_explored << "\n";
        return kExitArrows;
    case ArrowVerdict::Outcome::not_arrows:
        std::cout << "NOT-ARROWS nodes=" << v.nodes_explored << "\n";
        if (!opt.cert_out.empty()) write_output(opt.cert_out, serialize_coloring(*v.certificate));
        else std::cout << serialize_coloring(*v.certificate);
        return kExitNotArrows;
    case ArrowVerdict::Outcome::unknown:
        std::cout << "UNKNOWN nodes=" << v.nodes_explored << "\n";
        return kExitUnknown;
    }
    return kExitUsage;
}

long long parse_ll(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("expected an integer for ") + what + ", got '" + s +
                                 "'");
    }
}

int run_bounds(const std::vector<std::string>& args, bool as_json, std::uint64_t seed) {
    if (args.empty()) throw std::runtime_error("bounds needs a name: star, spider, tree-upper, "
                                               "kmn-expected, kmn-lower, kmn-constant, cycle, kmn-mc");
    const std::string& name = args[0];
    auto need = [&](std::size_t lo, std::size_t hi, const char* usage) {
        if (args.size() - 1 < lo || args.size() - 1 > hi)
            throw std::runtime_error(std::string("usage: bounds ") + usage);
    };
    if (name == "star") {
        need(2, 2, "star N S");
        print_report(bound_star(parse_ll(args[1], "n"), parse_ll(args[2], "s")), as_json);
    } else if (name == "spider") {
        need(2, 2, "spider K S");
        print_report(bound_tree_spider(parse_ll(args[1], "k"), parse_ll(args[2], "s")), as_json);
    } else if (name == "tree-upper") {
        need(2, 2, "tree-upper DELTA S");
        print_report(bound_tree_upper(parse_ll(args[1], "delta"), parse_ll(args[2], "s")), as_json);
    } else if (name == "kmn-expected") {
        need(4, 4, "kmn-expected N M NN S");
        print_report(kmn_expected_upper(parse_ll(args[1], "N"), parse_ll(args[2], "m"),
                                        parse_ll(args[3], "n"), parse_ll(args[4], "s")),
                     as_json);
    } else if (name == "kmn-lower") {
        need(3, 3, "kmn-lower N M S");
        print_report(kmn_lower_bound(parse_ll(args[1], "n"), parse_ll(args[2], "m"),
                                     parse_ll(args[3], "s")),
                     as_json);
    } else if (name == "kmn-constant") {
        need(2, 2, "kmn-constant M S");
        print_report(kmn_upper_constant(parse_ll(args[1], "m"), parse_ll(args[2], "s")), as_json);
    } else if (name == "cycle") {
        need(2, 3, "cycle M S [N]");
        std::optional<long long> n;
        if (args.size() == 4) n = parse_ll(args[3], "n");
        print_report(cycle_bounds(parse_ll(args[1], "m"), parse_ll(args[2], "s"), n), as_json);
    } else if (name == "kmn-mc") {
        need(5, 6, "kmn-mc N M NN S TRIALS [SEED]");
        std::uint64_t mc_seed = args.size() == 7
                                    ? static_cast<std::uint64_t>(parse_ll(args[6], "seed"))
                                    : seed;
        MonteCarloKmnReport rep =
            monte_carlo_kmn(parse_ll(args[1], "N"), parse_ll(args[2], "m"), parse_ll(args[3], "n"),
                            parse_ll(args[4], "s"), parse_ll(args[5], "trials"), mc_seed);
        if (as_json) {
            json j;
            j["name"] = "kmn-mc";
            j["inputs"] = {{"N", rep.N}, {"m", rep.m}, {"n", rep.n},
                           {"s", rep.s}, {"trials", rep.trials}};
            j["seed"] = rep.seed;
            j["copies"] = rep.copies;
            j["exact_expected"] = rat_str(rep.exact_expected);
            j["expected_upper"] = rat_str(rep.expected_upper);
            j["mean_count"] = rep.mean_count;
            j["std_error"] = rep.std_error;
            j["existence_freq"] = rep.existence_freq;
            j["mean_within_3se"] = rep.mean_within_3se;
            j["markov_consistent"] = rep.markov_consistent;
            j["source"] = "Theorem1";
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "kmn-mc\tN=" << rep.N << " m=" << rep.m << " n=" << rep.n << " s=" << rep.s
                      << " trials=" << rep.trials << "\tmean=" << rep.mean_count
                      << " se=" << rep.std_error << " exist_freq=" << rep.existence_freq
                      << "\tsample\tTheorem1\n";
            std::cout << "# copies=" << rep.copies << " exact_expected=" << rat_str(rep.exact_expected)
                      << " expected_upper=" << rat_str(rep.expected_upper)
                      << " (ordered-pair bound; double-counts swapped sides when m=n)\n";
            std::cout << "# mean_within_3se=" << (rep.mean_within_3se ? "yes" : "no")
                      << " markov_consistent=" << (rep.markov_consistent ? "yes" : "no") << "\n";
        }
    } else {
        throw std::runtime_error("unknown bounds name '" + name + "'");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact small-scale laboratory for degree Ramsey questions"};
    app.require_subcommand(1);
    int threads = 1;
    bool deterministic = false;
    app.add_option("--threads", threads, "worker cap (current engine is single-threaded)");
    app.add_flag("--deterministic", deterministic,
                 "force deterministic results (always on in this build)");

    // arrow
    ArrowOptions arrow;
    auto* arrow_cmd = app.add_subcommand("arrow", "decide host -> pattern with s colors");
    arrow_cmd->add_option("--host", arrow.host_file, "host graph file")->required();
    arrow_cmd->add_option("--pattern", arrow.pattern_text, "pattern spec, e.g. S3, P5, K{2,2}")
        ->required();
    arrow_cmd->add_option("--colors", arrow.colors, "number of colors")->required();
    arrow_cmd->add_option("--budget-nodes", arrow.budget_nodes, "search node budget");
    arrow_cmd->add_option("--budget-seconds", arrow.budget_seconds, "search time budget");
    arrow_cmd->add_flag("--oracle", arrow.oracle, "use the exhaustive oracle");
    arrow_cmd->add_option("--cert-out", arrow.cert_out, "write a non-arrowing certificate here");
    arrow_cmd->add_option("--verify-cert", arrow.verify_cert, "verify an existing certificate");

    // color star-free
    std::string sf_host, sf_out;
    int sf_colors = 2, sf_star = 2;
    auto* color_cmd = app.add_subcommand("color", "coloring constructions");
    auto* sf_cmd = color_cmd->add_subcommand("star-free", "coloring with no monochromatic star");
    sf_cmd->add_option("--host", sf_host, "bipartite host graph file")->required();
    sf_cmd->add_option("--colors", sf_colors, "number of colors")->required();
    sf_cmd->add_option("--star", sf_star, "forbidden star size n")->required();
    sf_cmd->add_option("--out", sf_out, "output coloring file (stdout if omitted)");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "extremal constructions");
    int hg_degree = 3, hg_girth = 5;
    std::uint64_t hg_seed = default_seed();
    std::string hg_out;
    auto* hg_cmd = construct_cmd->add_subcommand("high-girth-regular",
                                                 "random regular graph with certified girth");
    hg_cmd->add_option("--degree", hg_degree, "vertex degree")->required();
    hg_cmd->add_option("--girth", hg_girth, "girth lower bound")->required();
    hg_cmd->add_option("--seed", hg_seed, "construction seed");
    hg_cmd->add_option("--out", hg_out, "output graph file");

    std::string dc_in, dc_out;
    auto* dc_cmd = construct_cmd->add_subcommand("double-cover", "tensor product with K_2");
    dc_cmd->add_option("--in", dc_in, "input graph file")->required();
    dc_cmd->add_option("--out", dc_out, "output graph file");

    std::string sg_in, sg_out;
    int sg_degree = 2;
    auto* sg_cmd = construct_cmd->add_subcommand("supergraph",
                                                 "regular bipartite supergraph completion");
    sg_cmd->add_option("--in", sg_in, "input bipartite graph file")->required();
    sg_cmd->add_option("--degree", sg_degree, "target regular degree")->required();
    sg_cmd->add_option("--out", sg_out, "output witness file");

    std::string fz_in, fz_out;
    auto* fz_cmd = construct_cmd->add_subcommand("factorize",
                                                 "1-factorization of a regular bipartite host");
    fz_cmd->add_option("--in", fz_in, "input graph file")->required();
    fz_cmd->add_option("--out", fz_out, "output factor list");

    // embed
    std::string em_host, em_tree;
    int em_root = -1;
    auto* em_cmd = app.add_subcommand("embed", "greedy tree embedding");
    em_cmd->add_option("--host", em_host, "host graph file")->required();
    em_cmd->add_option("--tree", em_tree, "tree graph file")->required();
    em_cmd->add_option("--root-degree", em_root, "minimum host degree for the root image");

    // peel
    std::string peel_in;
    auto* peel_cmd = app.add_subcommand("peel", "dense-core peeling");
    peel_cmd->add_option("--in", peel_in, "input graph file")->required();

    // kst
    std::string kst_in;
    int kst_m = 2, kst_n = 2;
    auto* kst_cmd = app.add_subcommand("kst", "complete bipartite subgraph search");
    kst_cmd->add_option("--in", kst_in, "bipartite graph file")->required();
    kst_cmd->add_option("-m", kst_m, "left side size")->required();
    kst_cmd->add_option("-n", kst_n, "right side size")->required();

    // bounds
    std::vector<std::string> bounds_args;
    bool bounds_json = false;
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound calculators");
    bounds_cmd->add_option("args", bounds_args, "NAME ARGS...")->expected(-1);
    bounds_cmd->add_flag("--json", bounds_json, "emit one JSON object per report");

    // verify-theorem
    std::string vt_name;
    std::uint64_t vt_seed = default_seed();
    long long vt_trials = 10000;
    auto* vt_cmd = app.add_subcommand("verify-theorem", "run a proof pipeline end to end");
    vt_cmd->add_option("name", vt_name, "lemma1 | theorem2 | theorem3 | theorem1-mc")->required();
    vt_cmd->add_option("--seed", vt_seed, "pipeline seed");
    vt_cmd->add_option("--trials", vt_trials, "Monte Carlo trials (theorem1-mc)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*arrow_cmd) return run_arrow(arrow);
        if (*sf_cmd) {
            Graph host = parse_graph(read_file(sf_host));
            EdgeColoring col = star_free_coloring(host, sf_colors, sf_star);
            if (!verify_coloring(host, col, star_spec(sf_star)))
                throw InternalError("star-free coloring failed verification");
            write_output(sf_out, serialize_coloring(col));
            if (!sf_out.empty())
                std::cout << "wrote " << sf_out << " (" << sf_colors << " colors, no monochromatic S"
                          << sf_star << ")\n";
            return 0;
        }
        if (*hg_cmd) {
            Graph g = high_girth_regular(hg_degree, hg_girth, hg_seed);
            write_output(hg_out, serialize_graph(g));
            if (!hg_out.empty())
                std::cout << "wrote " << hg_out << " (" << g.vertex_count << " vertices, degree "
                          << hg_degree << ", girth >= " << hg_girth << ")\n";
            return 0;
        }
        if (*dc_cmd) {
            write_output(dc_out, serialize_graph(bipartite_double_cover(parse_graph(read_file(dc_in)))));
            return 0;
        }
        if (*sg_cmd) {
            SupergraphWitness w = regular_bipartite_supergraph(parse_graph(read_file(sg_in)), sg_degree);
            write_output(sg_out, serialize_supergraph_witness(w));
            return 0;
        }
        if (*fz_cmd) {
            Factorization f = one_factorization(parse_graph(read_file(fz_in)));
            write_output(fz_out, serialize_factorization(f));
            return 0;
        }
        if (*em_cmd) {
            Graph host = parse_graph(read_file(em_host));
            Graph tree = parse_graph(read_file(em_tree));
            std::optional<int> req;
            if (em_root >= 0) req = em_root;
            TreeEmbedding r = embed_tree(host, tree, req);
            if (!r.embedding) {
                std::cout << "FAILURE stuck at tree vertex " << r.stuck_vertex << "\n";
                return 1;
            }
            for (int pv = 0; pv < tree.vertex_count; ++pv)
                std::cout << "m " << pv << " " << r.embedding->map[pv] << "\n";
            return 0;
        }
        if (*peel_cmd) {
            PeelResult r = peel_dense_core(parse_graph(read_file(peel_in)));
            for (int v : r.removed) std::cout << "r " << v << "\n";
            std::cout << "# core: min degree " << r.core_stats.min_degree << ", average "
                      << r.core_stats.average_degree.str() << "\n";
            for (std::size_t i = 0; i < r.core_to_orig.size(); ++i)
                std::cout << "# core vertex " << i << " = original " << r.core_to_orig[i] << "\n";
            std::cout << serialize_graph(r.core);
            return 0;
        }
        if (*kst_cmd) {
            auto cert = kst_find(parse_graph(read_file(kst_in)), kst_m, kst_n);
            if (!cert) {
                std::cout << "none\n";
                return 1;
            }
            std::cout << "left";
            for (int v : cert->left_set) std::cout << " " << v;
            std::cout << "\nright";
            for (int v : cert->right_set) std::cout << " " << v;
            std::cout << "\n";
            return 0;
        }
        if (*bounds_cmd) return run_bounds(bounds_args, bounds_json, default_seed());
        if (*vt_cmd) {
            if (vt_name == "lemma1") return print_pipeline(verify_lemma1(vt_seed));
            if (vt_name == "theorem2") return print_pipeline(verify_theorem2(vt_seed));
            if (vt_name == "theorem3") return print_pipeline(verify_theorem3(vt_seed));
            if (vt_name == "theorem1-mc")
                return print_pipeline(verify_theorem1_mc(vt_seed, vt_trials));
            throw std::runtime_error("unknown pipeline '" + vt_name +
                                     "'; expected lemma1, theorem2, theorem3 or theorem1-mc");
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
