#pragma once

#include <chrono>

#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"
#include "ramsey/patterns.hpp"

namespace ramsey {

struct SearchBudget {
    long long max_nodes = 50'000'000;
    double max_seconds = 600.0;
};

struct ArrowVerdict {
    enum class Outcome { arrows, not_arrows, unknown };
    Outcome outcome = Outcome::unknown;
    long long nodes_explored = 0;           // also the budget spent on unknown
    std::optional<EdgeColoring> certificate; // witness for not_arrows

    bool arrows() const { return outcome == Outcome::arrows; }
    bool not_arrows() const { return outcome == Outcome::not_arrows; }
    bool unknown() const { return outcome == Outcome::unknown; }
};

// true iff the coloring contains no monochromatic copy of the pattern
inline bool verify_coloring(const Graph& h, const EdgeColoring& col, const PatternSpec& pat) {
    return !find_monochromatic(h, col, pat).has_value();
}

namespace detail {

class ArrowSearch {
public:
    ArrowSearch(const Graph& h, const PatternSpec& pat, int s, SearchBudget budget)
        : h_(h), pat_(pat), pattern_graph_(make_pattern_graph(pat)), s_(s), budget_(budget) {}

    ArrowVerdict run() {
        ArrowVerdict verdict;
        if (pattern_graph_.edge_count() == 0) {
            // vacuous pattern: present in every coloring iff the host has
            // enough vertices
            verdict.outcome = pattern_graph_.vertex_count <= h_.vertex_count
                                  ? ArrowVerdict::Outcome::arrows
                                  : ArrowVerdict::Outcome::not_arrows;
            if (verdict.outcome == ArrowVerdict::Outcome::not_arrows)
                verdict.certificate = EdgeColoring{s_, std::vector<int>(h_.edge_count(), 0)};
            return verdict;
        }
        // constrained-first branch order: descending endpoint degree sum
        auto deg = degrees(h_);
        order_.resize(h_.edge_count());
        for (int i = 0; i < h_.edge_count(); ++i) order_[i] = i;
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return deg[h_.edges[a].u] + deg[h_.edges[a].v] >
                   deg[h_.edges[b].u] + deg[h_.edges[b].v];
        });
        assignment_.assign(h_.edge_count(), -1);
        start_ = std::chrono::steady_clock::now();
        switch (walk(0, -1)) {
        case Step::exhausted:
            verdict.outcome = ArrowVerdict::Outcome::arrows;
            break;
        case Step::certificate: {
            verdict.outcome = ArrowVerdict::Outcome::not_arrows;
            EdgeColoring col{s_, assignment_};
            if (!verify_coloring(h_, col, pat_))
                throw InternalError("arrowing certificate failed re-verification");
            verdict.certificate = std::move(col);
            break;
        }
        case Step::out_of_budget:
            verdict.outcome = ArrowVerdict::Outcome::unknown;
            break;
        }
        verdict.nodes_explored = nodes_;
        return verdict;
    }

private:
    enum class Step { exhausted, certificate, out_of_budget };

    // Branch over colors of the edge at `pos` in branch order. A new color
    // index may only be introduced in increasing order, which breaks color
    // symmetry without losing verdicts: each coloring is equivalent to a
    // canonical one under color permutation. Any monochromatic copy in a
    // completed coloring has a last-colored edge, so checking only copies
    // through the freshly colored edge is complete.
    Step walk(int pos, int max_used) {
        if (pos == h_.edge_count()) return Step::certificate;
        int e = order_[pos];
        int limit = std::min(max_used + 1, s_ - 1);
        for (int c = 0; c <= limit; ++c) {
            ++nodes_;
            if (nodes_ > budget_.max_nodes) return Step::out_of_budget;
            if ((nodes_ & 0xFFF) == 0 && elapsed() > budget_.max_seconds)
                return Step::out_of_budget;
            assignment_[e] = c;
            SimpleAdj adj = partial_class_adjacency(c);
            if (!pattern_through_edge(adj, pat_, pattern_graph_, h_.edges[e].u, h_.edges[e].v)) {
                Step r = walk(pos + 1, std::max(max_used, c));
                if (r != Step::exhausted) {
                    if (r == Step::out_of_budget) assignment_[e] = -1;
                    return r;
                }
            }
            assignment_[e] = -1;
        }
        return Step::exhausted;
    }

    SimpleAdj partial_class_adjacency(int c) const {
        SimpleAdj adj(h_.vertex_count);
        for (int i = 0; i < h_.edge_count(); ++i) {
            if (assignment_[i] != c) continue;
            adj[h_.edges[i].u].push_back(h_.edges[i].v);
            adj[h_.edges[i].v].push_back(h_.edges[i].u);
        }
        for (auto& nb : adj) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
        return adj;
    }

    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    const Graph& h_;
    const PatternSpec& pat_;
    Graph pattern_graph_;
    int s_;
    SearchBudget budget_;
    std::vector<int> order_, assignment_;
    long long nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

// Exact decision of "every s-coloring of h contains a monochromatic pattern".
// Backtracking with incremental monochromatic checks and color-symmetry
// breaking; Unknown is the overflow channel, never a silent timeout.
inline ArrowVerdict decide_arrowing(const Graph& h, const PatternSpec& pat, int s,
                                    SearchBudget budget = {}) {
    if (s < 1) throw std::invalid_argument("need at least one color");
    detail::ArrowSearch search(h, pat, s, budget);
    return search.run();
}

// Enumerates every coloring; oracle for the decider. Never Unknown.
inline ArrowVerdict brute_force_arrowing(const Graph& h, const PatternSpec& pat, int s) {
    if (s < 1) throw std::invalid_argument("need at least one color");
    Graph pattern_graph = make_pattern_graph(pat);
    ArrowVerdict verdict;
    if (pattern_graph.edge_count() == 0) {
        verdict.outcome = pattern_graph.vertex_count <= h.vertex_count
                              ? ArrowVerdict::Outcome::arrows
                              : ArrowVerdict::Outcome::not_arrows;
        if (verdict.outcome == ArrowVerdict::Outcome::not_arrows)
            verdict.certificate = EdgeColoring{s, std::vector<int>(h.edge_count(), 0)};
        return verdict;
    }
    double total = 1;
    for (int i = 0; i < h.edge_count(); ++i) total *= s;
    if (total > 1e7) throw std::invalid_argument("instance too large for the brute-force oracle");

    EdgeColoring col{s, std::vector<int>(h.edge_count(), 0)};
    long long count = 0;
    while (true) {
        ++count;
        if (!find_monochromatic(h, col, pat)) {
            verdict.outcome = ArrowVerdict::Outcome::not_arrows;
            verdict.certificate = col;
            verdict.nodes_explored = count;
            return verdict;
        }
        int i = 0;
        while (i < h.edge_count() && col.assignment[i] == s - 1) col.assignment[i++] = 0;
        if (i == h.edge_count()) break;
        ++col.assignment[i];
    }
    verdict.outcome = ArrowVerdict::Outcome::arrows;
    verdict.nodes_explored = count;
    return verdict;
}

struct HostScanResult {
    int best_max_degree = 0;
    std::size_t host_index = 0;
    // the minimum is over the supplied hosts only, hence an upper bound on
    // the true degree Ramsey value
    bool upper_bound_only = true;
};

inline std::optional<HostScanResult> host_upper_bound_scan(const PatternSpec& pat, int s,
                                                           const std::vector<Graph>& hosts,
                                                           SearchBudget budget = {}) {
    if (hosts.empty()) throw std::invalid_argument("host list is empty");
    std::optional<HostScanResult> best;
    for (std::size_t i = 0; i < hosts.size(); ++i) {
        ArrowVerdict v = decide_arrowing(hosts[i], pat, s, budget);
        if (!v.arrows()) continue;
        int delta = max_degree(hosts[i]);
        bool better = !best || delta < best->best_max_degree ||
                      (delta == best->best_max_degree &&
                       hosts[i].vertex_count < hosts[best->host_index].vertex_count);
        if (better) best = HostScanResult{delta, i, true};
    }
    return best;
}

} // namespace ramsey
