#pragma once

#include <functional>
#include <map>

#include "ramsey/bigmath.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/pattern.hpp"

namespace ramsey {

// ---------------------------------------------------------------------------
// subgraph search
// ---------------------------------------------------------------------------

namespace detail {

inline bool adj_has(const SimpleAdj& adj, int u, int v) {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

// Backtracking subgraph isomorphism for simple patterns. Pattern vertices are
// matched in a connectivity-first order; candidates ascend, so the first
// witness found is deterministic. `seeds` pre-assigns pattern vertices.
class SubgraphSearch {
public:
    SubgraphSearch(const SimpleAdj& host, const Graph& pattern)
        : host_(host), pat_adj_(simple_adjacency(pattern)), pn_(pattern.vertex_count) {}

    std::optional<Embedding> run(const std::vector<std::pair<int, int>>& seeds = {}) {
        int hn = static_cast<int>(host_.size());
        if (pn_ > hn) return std::nullopt;
        map_.assign(pn_, -1);
        used_.assign(hn, 0);
        order_.clear();
        std::vector<char> placed(pn_, 0);
        for (auto [pv, hv] : seeds) {
            if (pv < 0 || pv >= pn_ || hv < 0 || hv >= hn) return std::nullopt;
            if (placed[pv] || used_[hv]) return std::nullopt;
            if (!candidate_ok(pv, hv)) return std::nullopt;
            map_[pv] = hv;
            used_[hv] = 1;
            placed[pv] = 1;
            order_.push_back(pv);
        }
        // connectivity-first completion: most placed neighbors, then higher
        // degree, then lower index
        for (int step = static_cast<int>(order_.size()); step < pn_; ++step) {
            int best = -1, best_conn = -1, best_deg = -1;
            for (int pv = 0; pv < pn_; ++pv) {
                if (placed[pv]) continue;
                int conn = 0;
                for (int q : pat_adj_[pv]) conn += placed[q];
                int deg = static_cast<int>(pat_adj_[pv].size());
                if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
                    best = pv;
                    best_conn = conn;
                    best_deg = deg;
                }
            }
            placed[best] = 1;
            order_.push_back(best);
        }
        if (extend(static_cast<int>(seeds.size()))) {
            Embedding emb;
            emb.map = map_;
            return emb;
        }
        return std::nullopt;
    }

private:
    bool candidate_ok(int pv, int w) const {
        if (host_[w].size() < pat_adj_[pv].size()) return false;
        for (int q : pat_adj_[pv])
            if (map_[q] != -1 && !adj_has(host_, w, map_[q])) return false;
        return true;
    }

    bool extend(int pos) {
        if (pos == pn_) return true;
        int pv = order_[pos];
        int anchor = -1;
        for (int q : pat_adj_[pv])
            if (map_[q] != -1) {
                anchor = map_[q];
                break;
            }
        if (anchor != -1) {
            for (int w : host_[anchor]) {
                if (used_[w] || !candidate_ok(pv, w)) continue;
                map_[pv] = w;
                used_[w] = 1;
                if (extend(pos + 1)) return true;
                used_[w] = 0;
                map_[pv] = -1;
            }
        } else {
            for (int w = 0; w < static_cast<int>(host_.size()); ++w) {
                if (used_[w] || !candidate_ok(pv, w)) continue;
                map_[pv] = w;
                used_[w] = 1;
                if (extend(pos + 1)) return true;
                used_[w] = 0;
                map_[pv] = -1;
            }
        }
        return false;
    }

    const SimpleAdj& host_;
    SimpleAdj pat_adj_;
    int pn_;
    std::vector<int> map_, order_;
    std::vector<char> used_;
};

inline std::optional<Embedding> star_in_adj(const SimpleAdj& adj, int n) {
    for (int v = 0; v < static_cast<int>(adj.size()); ++v) {
        if (static_cast<int>(adj[v].size()) < n) continue;
        Embedding emb;
        emb.map.push_back(v);
        for (int i = 0; i < n; ++i) emb.map.push_back(adj[v][i]);
        return emb;
    }
    return std::nullopt;
}

inline bool path_extend(const SimpleAdj& adj, std::vector<int>& path, std::vector<char>& used, int n) {
    if (static_cast<int>(path.size()) == n) return true;
    for (int w : adj[path.back()]) {
        if (used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        if (path_extend(adj, path, used, n)) return true;
        path.pop_back();
        used[w] = 0;
    }
    return false;
}

inline std::optional<Embedding> path_in_adj(const SimpleAdj& adj, int n) {
    int hn = static_cast<int>(adj.size());
    if (n > hn) return std::nullopt;
    std::vector<char> used(hn, 0);
    for (int start = 0; start < hn; ++start) {
        std::vector<int> path{start};
        used[start] = 1;
        if (path_extend(adj, path, used, n)) {
            Embedding emb;
            emb.map = path;
            return emb;
        }
        used[start] = 0;
    }
    return std::nullopt;
}

// simple cycle of length exactly n whose minimum vertex is the path start
inline bool cycle_extend(const SimpleAdj& adj, std::vector<int>& path, std::vector<char>& used, int n) {
    if (static_cast<int>(path.size()) == n)
        return adj_has(adj, path.back(), path.front());
    for (int w : adj[path.back()]) {
        if (w <= path.front() || used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        if (cycle_extend(adj, path, used, n)) return true;
        path.pop_back();
        used[w] = 0;
    }
    return false;
}

inline std::optional<Embedding> cycle_in_adj(const SimpleAdj& adj, int n) {
    int hn = static_cast<int>(adj.size());
    if (n > hn) return std::nullopt;
    std::vector<char> used(hn, 0);
    for (int start = 0; start < hn; ++start) {
        std::vector<int> path{start};
        used[start] = 1;
        if (cycle_extend(adj, path, used, n)) {
            Embedding emb;
            emb.map = path;
            return emb;
        }
        used[start] = 0;
    }
    return std::nullopt;
}

inline std::vector<int> sorted_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// K_{m,n} by common-neighborhood intersection over ascending m-subsets
inline bool kmn_rec(const SimpleAdj& adj, int m, int n, int next, std::vector<int>& left,
                    std::vector<int>& common) {
    if (static_cast<int>(left.size()) == m) {
        std::vector<int> right;
        for (int w : common) {
            if (std::find(left.begin(), left.end(), w) != left.end()) continue;
            right.push_back(w);
            if (static_cast<int>(right.size()) == n) {
                common = std::move(right);
                return true;
            }
        }
        return false;
    }
    for (int v = next; v < static_cast<int>(adj.size()); ++v) {
        if (static_cast<int>(adj[v].size()) < n) continue;
        std::vector<int> nc = left.empty() ? adj[v] : sorted_intersect(common, adj[v]);
        if (static_cast<int>(nc.size()) < n) continue;
        left.push_back(v);
        std::vector<int> saved = std::move(common);
        common = std::move(nc);
        if (kmn_rec(adj, m, n, v + 1, left, common)) return true;
        common = std::move(saved);
        left.pop_back();
    }
    return false;
}

inline std::optional<Embedding> kmn_in_adj(const SimpleAdj& adj, int m, int n) {
    std::vector<int> left, common;
    if (!kmn_rec(adj, m, n, 0, left, common)) return std::nullopt;
    Embedding emb;
    emb.map = left;
    emb.map.insert(emb.map.end(), common.begin(), common.end());
    return emb;
}

} // namespace detail

// Searches one color class (given as deduplicated adjacency) for the pattern.
inline std::optional<Embedding> find_pattern_in_adj(const SimpleAdj& adj, const PatternSpec& pat,
                                                    const Graph& pattern_graph) {
    switch (pat.kind) {
    case PatternKind::star: return detail::star_in_adj(adj, pat.a);
    case PatternKind::path: return detail::path_in_adj(adj, pat.a);
    case PatternKind::cycle: return detail::cycle_in_adj(adj, pat.a);
    case PatternKind::complete_bipartite: return detail::kmn_in_adj(adj, pat.a, pat.b);
    case PatternKind::tree_file:
    case PatternKind::graph_file: {
        detail::SubgraphSearch search(adj, pattern_graph);
        return search.run();
    }
    }
    throw InternalError("unhandled pattern kind");
}

// Copy of the pattern whose image uses the host edge (u,v); used by the
// arrowing decider to check only copies through the last colored edge.
inline bool pattern_through_edge(const SimpleAdj& adj, const PatternSpec& pat,
                                 const Graph& pattern_graph, int u, int v) {
    auto seeded = [&](int pa, int pb) {
        detail::SubgraphSearch s1(adj, pattern_graph);
        if (s1.run({{pa, u}, {pb, v}})) return true;
        detail::SubgraphSearch s2(adj, pattern_graph);
        return s2.run({{pa, v}, {pb, u}}).has_value();
    };
    switch (pat.kind) {
    case PatternKind::star: {
        int n = pat.a;
        return static_cast<int>(adj[u].size()) >= n || static_cast<int>(adj[v].size()) >= n;
    }
    case PatternKind::cycle:
        return seeded(0, 1);
    case PatternKind::complete_bipartite:
        return seeded(0, pat.a);
    case PatternKind::path: {
        for (int i = 0; i + 1 < pat.a; ++i)
            if (seeded(i, i + 1)) return true;
        return false;
    }
    case PatternKind::tree_file:
    case PatternKind::graph_file: {
        for (const Edge& e : pattern_graph.edges)
            if (seeded(e.u, e.v)) return true;
        return false;
    }
    }
    throw InternalError("unhandled pattern kind");
}

inline SimpleAdj class_adjacency(const Graph& h, const EdgeColoring& col, int c) {
    SimpleAdj adj(h.vertex_count);
    for (int i = 0; i < h.edge_count(); ++i) {
        if (col.assignment[i] != c) continue;
        adj[h.edges[i].u].push_back(h.edges[i].v);
        adj[h.edges[i].v].push_back(h.edges[i].u);
    }
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return adj;
}

// Monochromatic copy of the pattern in some color class, lowest color first.
inline std::optional<std::pair<int, Embedding>>
find_monochromatic(const Graph& h, const EdgeColoring& col, const PatternSpec& pat) {
    if (!col.valid_for(h)) throw std::invalid_argument("coloring does not fit host");
    Graph pattern_graph = make_pattern_graph(pat);
    if (pattern_graph.edge_count() == 0) {
        // edgeless patterns embed in any color class as soon as the host has
        // enough vertices
        if (pattern_graph.vertex_count > h.vertex_count) return std::nullopt;
        Embedding emb;
        for (int v = 0; v < pattern_graph.vertex_count; ++v) emb.map.push_back(v);
        return std::make_pair(0, emb);
    }
    for (int c = 0; c < col.color_count; ++c) {
        SimpleAdj adj = class_adjacency(h, col, c);
        if (auto emb = find_pattern_in_adj(adj, pat, pattern_graph))
            return std::make_pair(c, *emb);
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// dense-core peeling
// ---------------------------------------------------------------------------

struct PeelResult {
    Graph core;                    // induced subgraph, vertices relabeled
    std::vector<int> removed;      // deleted vertices (original ids) in order
    DegreeStats core_stats;
    std::vector<int> core_to_orig; // core vertex -> original vertex id
};

// Repeatedly deletes the lowest-index vertex of degree <= |E|/|V| (exact
// integer comparison). The ratio never decreases under this rule, so the
// surviving core has min degree strictly above |E(core)|/|V(core)| and
// average degree at least the input's.
inline PeelResult peel_dense_core(const Graph& g) {
    if (g.edges.empty()) throw std::invalid_argument("peel requires at least one edge");
    AdjList adj = adjacency(g);
    std::vector<long long> deg(g.vertex_count, 0);
    for (const Edge& e : g.edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    long long V = g.vertex_count, E = g.edge_count();
    std::vector<char> alive(g.vertex_count, 1), edge_alive(g.edge_count(), 1);

    // lazy degree buckets feeding an index-ordered candidate set
    long long max_deg = *std::max_element(deg.begin(), deg.end());
    std::vector<std::vector<int>> bucket(max_deg + 1);
    for (int v = 0; v < g.vertex_count; ++v) bucket[deg[v]].push_back(v);
    std::set<int> candidates;
    long long drained = -1;
    auto threshold = [&]() { return V > 0 ? E / V : -1; };
    auto drain = [&]() {
        long long t = threshold();
        while (drained < t && drained < max_deg) {
            ++drained;
            for (int v : bucket[drained])
                if (alive[v] && deg[v] <= t) candidates.insert(v);
        }
    };

    PeelResult result;
    drain();
    while (!candidates.empty()) {
        int v = *candidates.begin();
        candidates.erase(candidates.begin());
        if (!alive[v] || deg[v] * V > E) continue; // stale entry
        alive[v] = 0;
        --V;
        for (auto [w, e] : adj[v]) {
            if (!edge_alive[e]) continue;
            edge_alive[e] = 0;
            --E;
            if (!alive[w]) continue;
            --deg[w];
            bucket[deg[w]].push_back(w);
            if (deg[w] <= threshold()) candidates.insert(w);
        }
        result.removed.push_back(v);
        if (V == 0) break;
        drain();
    }
    if (E == 0 || V == 0) throw InternalError("peeling consumed every edge");

    std::vector<int> new_id(g.vertex_count, -1);
    for (int v = 0; v < g.vertex_count; ++v)
        if (alive[v]) {
            new_id[v] = static_cast<int>(result.core_to_orig.size());
            result.core_to_orig.push_back(v);
        }
    result.core.vertex_count = static_cast<int>(result.core_to_orig.size());
    for (int e = 0; e < g.edge_count(); ++e)
        if (edge_alive[e])
            result.core.edges.push_back({new_id[g.edges[e].u], new_id[g.edges[e].v]});
    result.core_stats = degree_stats(result.core);
    return result;
}

// ---------------------------------------------------------------------------
// greedy tree embedding
// ---------------------------------------------------------------------------

struct TreeEmbedding {
    std::optional<Embedding> embedding;
    int stuck_vertex = -1; // tree vertex that could not be placed
};

// Greedy growth in breadth-first order, no backtracking: root the tree at its
// max-degree vertex, map it to a host vertex of degree >= root_requirement
// (or >= the tree's max degree), then give every tree child the lowest unused
// host neighbor. Succeeds whenever girth(h) > |V(t)| and the host min degree
// covers the non-root degrees; otherwise Failure is a legitimate outcome.
inline TreeEmbedding embed_tree(const Graph& h, const Graph& t,
                                std::optional<int> root_requirement = {}) {
    if (!is_tree(t)) throw std::invalid_argument("pattern is not a tree");
    SimpleAdj tadj = simple_adjacency(t);
    int root = 0;
    for (int v = 1; v < t.vertex_count; ++v)
        if (tadj[v].size() > tadj[root].size()) root = v;
    int need = root_requirement ? *root_requirement : static_cast<int>(tadj[root].size());

    SimpleAdj hadj = simple_adjacency(h);
    int host_root = -1;
    for (int v = 0; v < h.vertex_count; ++v)
        if (static_cast<int>(hadj[v].size()) >= need) {
            host_root = v;
            break;
        }
    TreeEmbedding out;
    if (host_root == -1) {
        out.stuck_vertex = root;
        return out;
    }

    std::vector<int> map(t.vertex_count, -1);
    std::vector<char> used(h.vertex_count, 0);
    map[root] = host_root;
    used[host_root] = 1;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int tv = queue[qi];
        for (int child : tadj[tv]) {
            if (map[child] != -1) continue;
            int assigned = -1;
            for (int w : hadj[map[tv]])
                if (!used[w]) {
                    assigned = w;
                    break;
                }
            if (assigned == -1) {
                out.stuck_vertex = child;
                return out;
            }
            map[child] = assigned;
            used[assigned] = 1;
            queue.push_back(child);
        }
    }
    Embedding emb;
    emb.map = std::move(map);
    if (!embedding_valid(h, t, emb)) throw InternalError("greedy tree embedding produced an invalid map");
    out.embedding = std::move(emb);
    return out;
}

// ---------------------------------------------------------------------------
// Kővári–Sós–Turán style counting
// ---------------------------------------------------------------------------

// exact big-integer test of N*C(p,m) > (n-1)*C(M,m)
inline bool kst_threshold(long long M, long long N, long long p, long long m, long long n) {
    if (!(0 <= m && m <= p && p <= M && n >= 1))
        throw std::invalid_argument("need 0 <= m <= p <= M and n >= 1");
    return BigInt(N) * big_binomial(p, m) > BigInt(n - 1) * big_binomial(M, m);
}

struct KstCertificate {
    std::vector<int> left_set;  // m vertices of side A
    std::vector<int> right_set; // n common neighbors in side B
};

namespace detail {

inline bool subsets_rec(const std::vector<int>& pool, int m, std::size_t start,
                        std::vector<int>& cur, const std::function<bool(const std::vector<int>&)>& fn) {
    if (static_cast<int>(cur.size()) == m) return fn(cur);
    for (std::size_t i = start; i + (m - cur.size()) <= pool.size(); ++i) {
        cur.push_back(pool[i]);
        if (subsets_rec(pool, m, i + 1, cur, fn)) return true;
        cur.pop_back();
    }
    return false;
}

} // namespace detail

// Double-counting search: every B-vertex charges each m-subset of its
// neighborhood; the first subset charged n times is a K_{m,n} with its
// chargers. Only subsets incident to actual neighborhoods are enumerated.
inline std::optional<KstCertificate> kst_find(const Graph& g, int m, int n) {
    if (n < 1 || m < 0) throw std::invalid_argument("need m >= 0 and n >= 1");
    auto bip = check_bipartition(g);
    if (!bip) throw std::invalid_argument("host is not bipartite");
    if (m > static_cast<int>(bip->side_a.size()))
        throw std::invalid_argument("m exceeds side A");
    if (m == 0) {
        if (static_cast<int>(bip->side_b.size()) < n) return std::nullopt;
        KstCertificate cert;
        cert.right_set.assign(bip->side_b.begin(), bip->side_b.begin() + n);
        return cert;
    }
    SimpleAdj adj = simple_adjacency(g);
    std::map<std::vector<int>, std::vector<int>> charged;
    std::optional<KstCertificate> found;
    for (int b : bip->side_b) {
        if (static_cast<int>(adj[b].size()) < m) continue;
        std::vector<int> cur;
        detail::subsets_rec(adj[b], m, 0, cur, [&](const std::vector<int>& subset) {
            auto& hits = charged[subset];
            hits.push_back(b);
            if (static_cast<int>(hits.size()) == n) {
                KstCertificate cert;
                cert.left_set = subset;
                cert.right_set = hits;
                found = std::move(cert);
                return true;
            }
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// locally injective homomorphisms
// ---------------------------------------------------------------------------

namespace detail {

class LocalInjHomSearch {
public:
    LocalInjHomSearch(const Graph& g, const Graph& h)
        : gadj_(simple_adjacency(g)), hadj_(simple_adjacency(h)) {}

    std::optional<std::vector<int>> run() {
        int gn = static_cast<int>(gadj_.size());
        map_.assign(gn, -1);
        order_.clear();
        // BFS order per component from the lowest index
        std::vector<char> seen(gn, 0);
        for (int root = 0; root < gn; ++root) {
            if (seen[root]) continue;
            seen[root] = 1;
            order_.push_back(root);
            for (std::size_t qi = order_.size() - 1; qi < order_.size(); ++qi) {
                for (int w : gadj_[order_[qi]])
                    if (!seen[w]) {
                        seen[w] = 1;
                        order_.push_back(w);
                    }
            }
        }
        if (extend(0)) return map_;
        return std::nullopt;
    }

private:
    bool feasible(int pv, int w) const {
        if (hadj_[w].size() < gadj_[pv].size()) return false;
        for (int q : gadj_[pv]) {
            if (map_[q] == -1) continue;
            if (!adj_has(hadj_, map_[q], w)) return false; // edge preservation
            // injectivity of N(q) around the assigned neighbor q
            for (int x : gadj_[q]) {
                if (x == pv || map_[x] == -1) continue;
                if (map_[x] == w) return false;
            }
        }
        // injectivity of N(pv) among already assigned neighbors
        for (std::size_t i = 0; i < gadj_[pv].size(); ++i)
            for (std::size_t j = i + 1; j < gadj_[pv].size(); ++j) {
                int x = gadj_[pv][i], y = gadj_[pv][j];
                if (map_[x] != -1 && map_[x] == map_[y]) return false;
            }
        return true;
    }

    bool extend(int pos) {
        if (pos == static_cast<int>(order_.size())) return true;
        int pv = order_[pos];
        for (int w = 0; w < static_cast<int>(hadj_.size()); ++w) {
            if (!feasible(pv, w)) continue;
            map_[pv] = w;
            if (extend(pos + 1)) return true;
            map_[pv] = -1;
        }
        return false;
    }

    SimpleAdj gadj_, hadj_;
    std::vector<int> map_, order_;
};

} // namespace detail

// Edge-preserving map g -> h that is injective on every neighborhood, found
// by exhaustive backtracking (exponential in |V(g)|; desk-scale inputs only).
inline std::optional<std::vector<int>> locally_injective_hom(const Graph& g, const Graph& h) {
    if (has_parallel_edges(g) || has_parallel_edges(h))
        throw std::invalid_argument("requires simple graphs");
    if (g.vertex_count == 0) return std::vector<int>{};
    if (h.vertex_count == 0) return std::nullopt;
    detail::LocalInjHomSearch search(g, h);
    return search.run();
}

// ---------------------------------------------------------------------------
// pigeonhole majority class
// ---------------------------------------------------------------------------

// Largest color class (lowest color on ties); its size is >= ceil(|E|/s).
inline std::pair<int, Graph> majority_color_class(const Graph& h, const EdgeColoring& col) {
    if (h.edges.empty()) throw std::invalid_argument("host has no edges");
    if (!col.valid_for(h)) throw std::invalid_argument("coloring does not fit host");
    std::vector<int> count(col.color_count, 0);
    for (int c : col.assignment) ++count[c];
    int best = 0;
    for (int c = 1; c < col.color_count; ++c)
        if (count[c] > count[best]) best = c;
    return {best, color_class(h, col, best)};
}

} // namespace ramsey
