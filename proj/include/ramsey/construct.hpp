#pragma once

#include <array>
#include <cstdint>

#include "ramsey/graph.hpp"
#include "ramsey/matching.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

struct ConstructError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// d disjoint perfect matchings partitioning the edge set of a d-regular
// bipartite multigraph, stored as edge-index sets.
struct Factorization {
    std::vector<std::vector<int>> factors;
};

// d-regular bipartite multigraph containing the original host. Original
// vertex v sits at vertex_image[v]; original edge i is edge_image[i].
struct SupergraphWitness {
    Graph supergraph;
    std::vector<int> vertex_image;
    std::vector<int> edge_image;
};

// Proper edge coloring of a bipartite multigraph with d >= max degree colors.
// Classic Kempe-chain argument: when the free colors at the two endpoints
// differ, the alternating path from one endpoint cannot reach the other (it
// would have to arrive on a color that endpoint lacks), so flipping it frees
// a common color.
inline std::vector<int> bipartite_proper_edge_coloring(const Graph& h, int d) {
    if (!check_bipartition(h)) throw std::invalid_argument("host is not bipartite");
    if (max_degree(h) > d) throw std::invalid_argument("max degree exceeds color count");
    std::vector<std::vector<int>> color_at(h.vertex_count, std::vector<int>(d, -1));
    std::vector<int> color(h.edge_count(), -1);

    auto free_color = [&](int v) {
        for (int c = 0; c < d; ++c)
            if (color_at[v][c] == -1) return c;
        throw InternalError("no free color at vertex");
    };

    for (int e = 0; e < h.edge_count(); ++e) {
        int u = h.edges[e].u, v = h.edges[e].v;
        int a = free_color(u);
        if (color_at[v][a] != -1) {
            int b = free_color(v);
            // flip the maximal (a,b)-alternating path starting at v
            std::vector<int> path;
            int cur = v, want = a;
            while (color_at[cur][want] != -1) {
                int e2 = color_at[cur][want];
                path.push_back(e2);
                cur = h.edges[e2].other(cur);
                want = (want == a) ? b : a;
            }
            for (int e2 : path) {
                int old_c = color[e2];
                for (int x : {h.edges[e2].u, h.edges[e2].v})
                    if (color_at[x][old_c] == e2) color_at[x][old_c] = -1;
            }
            for (int e2 : path) {
                int new_c = (color[e2] == a) ? b : a;
                color[e2] = new_c;
                color_at[h.edges[e2].u][new_c] = e2;
                color_at[h.edges[e2].v][new_c] = e2;
            }
        }
        color[e] = a;
        color_at[u][a] = e;
        color_at[v][a] = e;
    }
    return color;
}

// Completes a bipartite host into a d-regular bipartite multigraph: properly
// edge-color with d colors, pad the smaller side with isolated vertices, and
// extend every color class to a perfect matching. Output vertices are
// relabeled so side A is 0..L-1 and side B is L..2L-1; when the host already
// has that layout and equal sides, images are the identity.
inline SupergraphWitness regular_bipartite_supergraph(const Graph& h, int d) {
    if (d < 1) throw std::invalid_argument("degree must be positive");
    auto bip = check_bipartition(h);
    if (!bip) throw std::invalid_argument("host is not bipartite");
    if (max_degree(h) > d) throw std::invalid_argument("host max degree exceeds target degree");

    int na = static_cast<int>(bip->side_a.size());
    int nb = static_cast<int>(bip->side_b.size());
    int side_size = std::max(na, nb);

    SupergraphWitness w;
    w.vertex_image.assign(h.vertex_count, -1);
    for (int i = 0; i < na; ++i) w.vertex_image[bip->side_a[i]] = i;
    for (int j = 0; j < nb; ++j) w.vertex_image[bip->side_b[j]] = side_size + j;

    Graph s(2 * side_size);
    Bipartition sb;
    for (int v = 0; v < side_size; ++v) sb.side_a.push_back(v);
    for (int v = side_size; v < 2 * side_size; ++v) sb.side_b.push_back(v);
    s.bipartition = std::move(sb);

    w.edge_image.resize(h.edge_count());
    for (int i = 0; i < h.edge_count(); ++i) {
        const Edge& e = h.edges[i];
        s.edges.push_back({w.vertex_image[e.u], w.vertex_image[e.v]});
        w.edge_image[i] = i;
    }

    std::vector<int> color = bipartite_proper_edge_coloring(s, d);
    for (int c = 0; c < d; ++c) {
        std::vector<char> covered(2 * side_size, 0);
        for (int i = 0; i < static_cast<int>(color.size()); ++i)
            if (color[i] == c) {
                covered[s.edges[i].u] = 1;
                covered[s.edges[i].v] = 1;
            }
        std::vector<int> open_a, open_b;
        for (int v = 0; v < side_size; ++v)
            if (!covered[v]) open_a.push_back(v);
        for (int v = side_size; v < 2 * side_size; ++v)
            if (!covered[v]) open_b.push_back(v);
        if (open_a.size() != open_b.size())
            throw InternalError("matching completion imbalance");
        for (std::size_t i = 0; i < open_a.size(); ++i)
            s.edges.push_back({open_a[i], open_b[i]});
    }

    auto deg = degrees(s);
    for (int v = 0; v < s.vertex_count; ++v)
        if (deg[v] != d) throw InternalError("supergraph is not regular");
    w.supergraph = std::move(s);
    return w;
}

// Peels a d-regular bipartite multigraph into d perfect matchings by
// repeatedly extracting a maximum matching; each must be perfect (Hall).
inline Factorization one_factorization(const Graph& h) {
    auto bip = check_bipartition(h);
    if (!bip) throw std::invalid_argument("host is not bipartite");
    int na = static_cast<int>(bip->side_a.size());
    int nb = static_cast<int>(bip->side_b.size());
    if (na != nb) throw std::invalid_argument("sides must have equal size");
    auto deg = degrees(h);
    int d = h.vertex_count == 0 ? 0 : deg[0];
    for (int v = 0; v < h.vertex_count; ++v)
        if (deg[v] != d) throw std::invalid_argument("host is not regular");

    Factorization fac;
    if (d == 0 || na == 0) {
        fac.factors.assign(d, {});
        return fac;
    }

    std::vector<int> left_index(h.vertex_count, -1), right_index(h.vertex_count, -1);
    auto side = side_of(h, *bip);
    for (int i = 0; i < na; ++i) left_index[bip->side_a[i]] = i;
    for (int j = 0; j < nb; ++j) right_index[bip->side_b[j]] = j;

    std::vector<char> remaining(h.edge_count(), 1);
    for (int round = 0; round < d; ++round) {
        std::vector<std::vector<std::pair<int, int>>> adj(na);
        for (int e = 0; e < h.edge_count(); ++e) {
            if (!remaining[e]) continue;
            const Edge& ed = h.edges[e];
            int a = side[ed.u] == 0 ? ed.u : ed.v;
            int b = ed.other(a);
            adj[left_index[a]].push_back({right_index[b], e});
        }
        BipartiteMatcher matcher(na, nb, adj);
        if (matcher.solve() != na)
            throw InternalError("regular bipartite multigraph failed to yield a perfect matching");
        std::vector<int> factor = matcher.matched_edges();
        std::sort(factor.begin(), factor.end());
        for (int e : factor) remaining[e] = 0;
        fac.factors.push_back(std::move(factor));
    }
    return fac;
}

// s-coloring of a bipartite host in which every vertex sees at most n-1 edges
// of each color: complete to an s(n-1)-regular supergraph, split its
// 1-factorization into s bundles of n-1 factors, restrict to the host.
inline EdgeColoring star_free_coloring(const Graph& h, int s, int n) {
    if (s < 1 || n < 1) throw std::invalid_argument("need s >= 1 and n >= 1");
    long long d = static_cast<long long>(s) * (n - 1);
    if (max_degree(h) > d)
        throw std::invalid_argument("max degree exceeds s*(n-1); no such coloring exists");
    EdgeColoring col;
    col.color_count = s;
    if (h.edges.empty()) return col;

    SupergraphWitness w = regular_bipartite_supergraph(h, static_cast<int>(d));
    Factorization fac = one_factorization(w.supergraph);
    std::vector<int> factor_of(w.supergraph.edge_count(), -1);
    for (int fi = 0; fi < static_cast<int>(fac.factors.size()); ++fi)
        for (int e : fac.factors[fi]) factor_of[e] = fi;

    col.assignment.resize(h.edge_count());
    for (int i = 0; i < h.edge_count(); ++i)
        col.assignment[i] = factor_of[w.edge_image[i]] / (n - 1);

    // per-vertex per-color degree must not exceed n-1
    std::vector<int> count(static_cast<std::size_t>(h.vertex_count) * s, 0);
    for (int i = 0; i < h.edge_count(); ++i) {
        const Edge& e = h.edges[i];
        int c = col.assignment[i];
        if (++count[static_cast<std::size_t>(e.u) * s + c] > n - 1 ||
            ++count[static_cast<std::size_t>(e.v) * s + c] > n - 1)
            throw InternalError("star-free coloring invariant violated");
    }
    return col;
}

// Tensor product with K_2: vertices (v,0)=v and (v,1)=n+v, every edge uv
// becomes (u,0)(v,1) and (v,0)(u,1). Bipartite by layers, degrees preserved,
// girth never decreases.
inline Graph bipartite_double_cover(const Graph& g) {
    if (has_parallel_edges(g)) throw std::invalid_argument("double cover requires a simple graph");
    int n = g.vertex_count;
    Graph out(2 * n);
    for (const Edge& e : g.edges) {
        out.add_edge(e.u, n + e.v);
        out.add_edge(e.v, n + e.u);
    }
    Bipartition b;
    for (int v = 0; v < n; ++v) b.side_a.push_back(v);
    for (int v = n; v < 2 * n; ++v) b.side_b.push_back(v);
    out.bipartition = std::move(b);
    return out;
}

inline EdgeColoring random_coloring(const Graph& h, int s, std::uint64_t seed) {
    if (s < 1) throw std::invalid_argument("need at least one color");
    Rng rng(derive_seed(seed, 0x636f6c6fULL));
    EdgeColoring col;
    col.color_count = s;
    col.assignment.resize(h.edge_count());
    for (int i = 0; i < h.edge_count(); ++i)
        col.assignment[i] = s == 1 ? 0 : rng.below_int(s);
    return col;
}

// ---------------------------------------------------------------------------
// high-girth regular graphs
// ---------------------------------------------------------------------------

namespace detail {

// Pairing-model d-regular graph repaired by 2-edge swaps until no cycle
// shorter than the target remains. Every swap is locally vetted so it cannot
// introduce a short cycle, which makes the cycle count strictly decreasing;
// the final clean scan is the girth certificate.
class HighGirthBuilder {
public:
    HighGirthBuilder(int d, int girth_target, std::uint64_t seed)
        : d_(d), target_(std::max(girth_target, 3)), seed_(seed) {}

    Graph build() {
        long long base = initial_size();
        for (int attempt = 0; attempt < 5; ++attempt) {
            long long n = base << attempt;
            if (n > (1 << 20)) break;
            if ((n * d_) % 2 != 0) ++n;
            Rng rng(derive_seed(seed_, 0x68696768ULL + attempt));
            if (try_build(static_cast<int>(n), rng)) return finish();
        }
        throw ConstructError(
            "high-girth construction budget exhausted; raise the size schedule or change the seed");
    }

private:
    long long initial_size() const {
        // vertices within distance target-2; swaps succeed easily once the
        // host is several times larger than this ball
        long long r = target_ - 2;
        long long ball;
        if (d_ == 2) {
            ball = 2 * r + 1;
        } else {
            ball = 1;
            long long layer = d_;
            for (long long i = 0; i < r && ball < (1 << 16); ++i) {
                ball += layer;
                layer *= (d_ - 1);
            }
        }
        ball = std::min(ball, static_cast<long long>(1 << 16));
        long long n = 8 * ball;
        n = std::max<long long>(n, d_ + 2);
        n = std::max<long long>(n, 2LL * target_);
        n = std::max<long long>(n, 16);
        return std::min(n, static_cast<long long>(1 << 17));
    }

    bool try_build(int n, Rng& rng) {
        n_ = n;
        edges_.clear();
        adj_.assign(n, {});
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * d_);
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < d_; ++k) stubs.push_back(v);
        rng.shuffle(stubs);
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2)
            push_edge(stubs[i], stubs[i + 1]);
        stamp_ = 0;
        mark_.assign(n, 0);
        dist_.assign(n, 0);
        tree_edge_.assign(n, -1);

        if (!fix_loops(rng)) return false;

        int half = target_ / 2; // ceil((target-1)/2)
        for (int pass = 0; pass < 64; ++pass) {
            long long found = 0, fixed = 0;
            for (int v = 0; v < n_; ++v) {
                for (int guard = 0; guard < 32; ++guard) {
                    int bad = probe(v, half);
                    if (bad < 0) break;
                    ++found;
                    if (!attempt_swap(bad, rng)) break;
                    ++fixed;
                }
            }
            if (found == 0) return true;
            if (fixed == 0) return false;
        }
        return false;
    }

    void push_edge(int u, int v) {
        int id = static_cast<int>(edges_.size());
        edges_.push_back({u, v});
        adj_[u].push_back({v, id});
        adj_[v].push_back({u, id});
    }

    static void drop_entry(std::vector<std::pair<int, int>>& list, int nb, int id) {
        for (std::size_t i = 0; i < list.size(); ++i)
            if (list[i].second == id && list[i].first == nb) {
                list[i] = list.back();
                list.pop_back();
                return;
            }
        throw InternalError("adjacency entry missing");
    }

    bool fix_loops(Rng& rng) {
        for (int round = 0; round < 64; ++round) {
            bool any = false;
            for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
                if (edges_[e].first != edges_[e].second) continue;
                any = true;
                int u = edges_[e].first;
                bool done = false;
                for (int t = 0; t < 256 && !done; ++t) {
                    int f = static_cast<int>(rng.below(edges_.size()));
                    auto [x, y] = edges_[f];
                    if (f == e || x == y || x == u || y == u) continue;
                    if (adjacent(u, x) || adjacent(u, y)) continue;
                    // loop at u + edge xy -> ux + uy
                    drop_entry(adj_[u], u, e);
                    drop_entry(adj_[u], u, e);
                    drop_entry(adj_[x], y, f);
                    drop_entry(adj_[y], x, f);
                    edges_[e] = {u, x};
                    edges_[f] = {u, y};
                    adj_[u].push_back({x, e});
                    adj_[x].push_back({u, e});
                    adj_[u].push_back({y, f});
                    adj_[y].push_back({u, f});
                    done = true;
                }
                if (!done) return false;
            }
            if (!any) return true;
        }
        return false;
    }

    bool adjacent(int u, int v) const {
        for (auto [w, id] : adj_[u]) {
            (void)id;
            if (w == v) return true;
        }
        return false;
    }

    // BFS from v limited to depth `half`; returns an edge lying on a cycle of
    // length < target (the meeting edge of two BFS branches), or -1.
    int probe(int v, int half) {
        ++stamp_;
        std::vector<int> queue{v};
        mark_[v] = stamp_;
        dist_[v] = 0;
        tree_edge_[v] = -1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (dist_[u] >= half) continue;
            for (auto [w, e] : adj_[u]) {
                if (e == tree_edge_[u]) continue;
                if (mark_[w] != stamp_) {
                    mark_[w] = stamp_;
                    dist_[w] = dist_[u] + 1;
                    tree_edge_[w] = e;
                    queue.push_back(w);
                } else if (dist_[u] + dist_[w] + 1 < target_) {
                    return e;
                }
            }
        }
        return -1;
    }

    // capped distance in the graph minus two banned edges
    int capped_dist(int src, int dst, int cap, int ban1, int ban2) {
        if (src == dst) return 0;
        ++stamp_;
        std::vector<int> queue{src};
        mark_[src] = stamp_;
        dist_[src] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (dist_[u] >= cap) continue;
            for (auto [w, e] : adj_[u]) {
                if (e == ban1 || e == ban2) continue;
                if (mark_[w] == stamp_) continue;
                mark_[w] = stamp_;
                dist_[w] = dist_[u] + 1;
                if (w == dst) return dist_[w];
                queue.push_back(w);
            }
        }
        return cap + 1; // treated as "far"
    }

    bool attempt_swap(int e, Rng& rng) {
        auto [u, v] = edges_[e];
        int cap = target_ - 2;
        for (int t = 0; t < 64; ++t) {
            int f = static_cast<int>(rng.below(edges_.size()));
            if (f == e) continue;
            auto [x, y] = edges_[f];
            if (x == u || x == v || y == u || y == v) continue;
            if (rng.below(2)) std::swap(x, y);
            if (adjacent(u, x) || adjacent(v, y)) continue;
            // new edges ux, vy may not close a cycle shorter than the target,
            // alone (c1, c2) or jointly through both (c3, c4)
            if (capped_dist(u, x, cap, e, f) + 1 < target_) continue;       // c1
            if (capped_dist(v, y, cap, e, f) + 1 < target_) continue;       // c2
            int d_uv = capped_dist(u, v, cap, e, f);
            int d_uy = capped_dist(u, y, cap, e, f);
            int d_xy = capped_dist(x, y, cap, e, f);
            int d_xv = capped_dist(x, v, cap, e, f);
            if (d_xy + d_uv + 2 < target_) continue;                        // c3
            if (d_xv + d_uy + 2 < target_) continue;                        // c4
            drop_entry(adj_[u], v, e);
            drop_entry(adj_[v], u, e);
            drop_entry(adj_[x], y, f);
            drop_entry(adj_[y], x, f);
            edges_[e] = {u, x};
            edges_[f] = {v, y};
            adj_[u].push_back({x, e});
            adj_[x].push_back({u, e});
            adj_[v].push_back({y, f});
            adj_[y].push_back({v, f});
            return true;
        }
        return false;
    }

    Graph finish() {
        Graph g(n_);
        for (auto [u, v] : edges_) g.add_edge(u, v);
        auto deg = degrees(g);
        for (int v = 0; v < n_; ++v)
            if (deg[v] != d_) throw InternalError("pairing model produced a non-regular graph");
        if (has_parallel_edges(g)) throw InternalError("repair left parallel edges");
        return g;
    }

    int d_, target_;
    std::uint64_t seed_;
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<int> mark_, dist_, tree_edge_;
    int stamp_ = 0;
};

} // namespace detail

// Simple d-regular graph with girth >= girth_target, deterministic per seed.
// Randomized with repair; the girth is checked, never assumed.
inline Graph high_girth_regular(int d, int girth_target, std::uint64_t seed) {
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
    detail::HighGirthBuilder builder(d, girth_target, seed);
    return builder.build();
}

// ---------------------------------------------------------------------------
// serialization of construction artifacts
// ---------------------------------------------------------------------------

inline std::string serialize_factorization(const Factorization& fac) {
    std::ostringstream out;
    for (std::size_t fi = 0; fi < fac.factors.size(); ++fi)
        for (int e : fac.factors[fi]) out << "f " << fi << " " << e << "\n";
    return out.str();
}

inline std::string serialize_supergraph_witness(const SupergraphWitness& w) {
    std::ostringstream out;
    out << serialize_graph(w.supergraph);
    for (std::size_t v = 0; v < w.vertex_image.size(); ++v)
        out << "# vertex " << v << " -> " << w.vertex_image[v] << "\n";
    for (std::size_t i = 0; i < w.edge_image.size(); ++i)
        out << "inc " << i << " " << w.edge_image[i] << "\n";
    return out.str();
}

} // namespace ramsey
