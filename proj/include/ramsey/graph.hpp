#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Undirected edge; endpoints kept in the orientation they were given so that
// serialization round-trips byte-exactly. Equality is as an unordered pair.
struct Edge {
    int u = 0, v = 0;

    std::pair<int, int> normalized() const { return {std::min(u, v), std::max(u, v)}; }
    int other(int w) const { return w == u ? v : u; }
    friend bool operator==(const Edge& a, const Edge& b) {
        return a.normalized() == b.normalized();
    }
};

// Two disjoint vertex sets covering all vertices; always kept sorted.
struct Bipartition {
    std::vector<int> side_a, side_b;
    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// Exact fraction on 64-bit values; enough for desk-scale degree averages,
// which keeps combinatorial threshold comparisons free of rounding.
struct Frac {
    long long num = 0;
    long long den = 1;

    Frac() = default;
    Frac(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("fraction with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend bool operator==(const Frac& a, const Frac& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Frac& a, const Frac& b) { return a.num * b.den <= b.num * a.den; }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// Undirected multigraph. Loops are forbidden; parallel edges are allowed in
// hosts. The edge list order is the canonical edge index used by colorings.
struct Graph {
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::optional<Bipartition> bipartition;

    Graph() = default;
    explicit Graph(int n) : vertex_count(n) {}
    Graph(int n, std::initializer_list<std::pair<int, int>> es) : vertex_count(n) {
        for (auto [u, v] : es) add_edge(u, v);
    }

    void add_edge(int u, int v) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge");
        edges.push_back({u, v});
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count == b.vertex_count && a.edges == b.edges &&
               a.bipartition == b.bipartition;
    }
};

struct DegreeStats {
    int min_degree = 0;
    int max_degree = 0;
    Frac average_degree;
};

// Assignment of each host edge to one of color_count classes.
struct EdgeColoring {
    int color_count = 1;
    std::vector<int> assignment;

    bool valid_for(const Graph& h) const {
        if (color_count < 1) return false;
        if (assignment.size() != h.edges.size()) return false;
        for (int c : assignment)
            if (c < 0 || c >= color_count) return false;
        return true;
    }
};

// Injective vertex map pattern -> host.
struct Embedding {
    std::vector<int> map;
};

// (neighbor, edge index) incidence lists, parallel edges kept.
using AdjList = std::vector<std::vector<std::pair<int, int>>>;

inline AdjList adjacency(const Graph& g) {
    AdjList adj(g.vertex_count);
    for (int i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edges[i];
        adj[e.u].push_back({e.v, i});
        adj[e.v].push_back({e.u, i});
    }
    return adj;
}

// sorted, deduplicated neighbor lists (parallel edges collapsed)
using SimpleAdj = std::vector<std::vector<int>>;

inline SimpleAdj simple_adjacency(const Graph& g) {
    SimpleAdj adj(g.vertex_count);
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& nb : adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return adj;
}

inline std::vector<int> degrees(const Graph& g) {
    std::vector<int> deg(g.vertex_count, 0);
    for (const Edge& e : g.edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

inline int max_degree(const Graph& g) {
    auto deg = degrees(g);
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

inline bool has_parallel_edges(const Graph& g) {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : g.edges)
        if (!seen.insert(e.normalized()).second) return true;
    return false;
}

inline bool bipartition_valid(const Graph& g, const Bipartition& b) {
    std::vector<int> side(g.vertex_count, -1);
    for (int v : b.side_a) {
        if (v < 0 || v >= g.vertex_count || side[v] != -1) return false;
        side[v] = 0;
    }
    for (int v : b.side_b) {
        if (v < 0 || v >= g.vertex_count || side[v] != -1) return false;
        side[v] = 1;
    }
    for (int v = 0; v < g.vertex_count; ++v)
        if (side[v] == -1) return false;
    for (const Edge& e : g.edges)
        if (side[e.u] == side[e.v]) return false;
    return true;
}

// side membership array from a bipartition (0 = side A, 1 = side B)
inline std::vector<int> side_of(const Graph& g, const Bipartition& b) {
    std::vector<int> side(g.vertex_count, -1);
    for (int v : b.side_a) side[v] = 0;
    for (int v : b.side_b) side[v] = 1;
    return side;
}

// ---------------------------------------------------------------------------
// file format
//
//   # comment lines anywhere
//   n <vertex_count>          exactly once, first non-comment line
//   bip <k>                   optional: vertices 0..k-1 side A, k..n-1 side B
//   e <u> <v>                 zero or more
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

inline long long parse_int(const std::string& tok, int line_no) {
    std::size_t pos = 0;
    long long value = 0;
    try {
        value = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected integer, got '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError(line_no, "expected integer, got '" + tok + "'");
    return value;
}

} // namespace detail

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool saw_n = false;
    long long n = 0;
    long long bip_split = -1;
    int bip_line = 0;
    Graph g;
    std::vector<int> edge_lines;

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (!saw_n) {
            if (toks[0] != "n" || toks.size() != 2)
                throw ParseError(line_no, "first directive must be 'n <vertex_count>'");
            n = detail::parse_int(toks[1], line_no);
            if (n < 0) throw ParseError(line_no, "negative vertex count");
            g.vertex_count = static_cast<int>(n);
            saw_n = true;
            continue;
        }
        if (toks[0] == "n") throw ParseError(line_no, "duplicate 'n' line");
        if (toks[0] == "bip") {
            if (bip_split >= 0) throw ParseError(line_no, "duplicate 'bip' line");
            if (toks.size() != 2) throw ParseError(line_no, "malformed 'bip' line");
            bip_split = detail::parse_int(toks[1], line_no);
            if (bip_split < 0 || bip_split > n)
                throw ParseError(line_no, "bip split out of range");
            bip_line = line_no;
            continue;
        }
        if (toks[0] == "e") {
            if (toks.size() != 3) throw ParseError(line_no, "malformed 'e' line");
            long long u = detail::parse_int(toks[1], line_no);
            long long v = detail::parse_int(toks[2], line_no);
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError(line_no, "edge endpoint out of range");
            if (u == v) throw ParseError(line_no, "loop edge");
            g.edges.push_back({static_cast<int>(u), static_cast<int>(v)});
            edge_lines.push_back(line_no);
            continue;
        }
        throw ParseError(line_no, "unknown directive '" + toks[0] + "'");
    }
    if (!saw_n) throw ParseError(line_no, "missing 'n' line");

    if (bip_split >= 0) {
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            const Edge& e = g.edges[i];
            bool ua = e.u < bip_split, va = e.v < bip_split;
            if (ua == va)
                throw ParseError(edge_lines[i], "edge does not cross declared bipartition");
        }
        Bipartition b;
        for (int v = 0; v < g.vertex_count; ++v)
            (v < bip_split ? b.side_a : b.side_b).push_back(v);
        g.bipartition = std::move(b);
        (void)bip_line;
    }
    return g;
}

// True when the bipartition is side A = 0..k-1, side B = k..n-1 — the only
// form the file grammar can express.
inline std::optional<int> prefix_split(const Graph& g) {
    if (!g.bipartition) return std::nullopt;
    const auto& b = *g.bipartition;
    int k = static_cast<int>(b.side_a.size());
    for (int i = 0; i < k; ++i)
        if (b.side_a[i] != i) return std::nullopt;
    for (std::size_t j = 0; j < b.side_b.size(); ++j)
        if (b.side_b[j] != k + static_cast<int>(j)) return std::nullopt;
    if (k + static_cast<int>(b.side_b.size()) != g.vertex_count) return std::nullopt;
    return k;
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count << "\n";
    if (g.bipartition) {
        auto k = prefix_split(g);
        if (!k)
            throw std::invalid_argument(
                "bipartition is not an index-prefix split; not representable in the file format");
        out << "bip " << *k << "\n";
    }
    for (const Edge& e : g.edges) out << "e " << e.u << " " << e.v << "\n";
    return out.str();
}

// Coloring file: `s <color_count>` then one `c <edge_index> <color>` per edge.
inline EdgeColoring parse_coloring(const std::string& text, int edge_count) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    EdgeColoring col;
    bool saw_s = false;
    std::vector<char> seen(edge_count, 0);
    col.assignment.assign(edge_count, -1);

    while (std::getline(in, line)) {
        ++line_no;
        auto toks = detail::tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (!saw_s) {
            if (toks[0] != "s" || toks.size() != 2)
                throw ParseError(line_no, "first directive must be 's <color_count>'");
            long long s = detail::parse_int(toks[1], line_no);
            if (s < 1) throw ParseError(line_no, "color count must be positive");
            col.color_count = static_cast<int>(s);
            saw_s = true;
            continue;
        }
        if (toks[0] != "c" || toks.size() != 3) throw ParseError(line_no, "malformed 'c' line");
        long long idx = detail::parse_int(toks[1], line_no);
        long long c = detail::parse_int(toks[2], line_no);
        if (idx < 0 || idx >= edge_count) throw ParseError(line_no, "edge index out of range");
        if (seen[idx]) throw ParseError(line_no, "duplicate edge index");
        if (c < 0 || c >= col.color_count) throw ParseError(line_no, "color out of range");
        seen[idx] = 1;
        col.assignment[idx] = static_cast<int>(c);
        continue;
    }
    if (!saw_s) throw ParseError(line_no, "missing 's' line");
    for (int i = 0; i < edge_count; ++i)
        if (!seen[i])
            throw ParseError(line_no, "edge " + std::to_string(i) + " has no color line");
    return col;
}

inline std::string serialize_coloring(const EdgeColoring& col) {
    std::ostringstream out;
    out << "s " << col.color_count << "\n";
    for (std::size_t i = 0; i < col.assignment.size(); ++i)
        out << "c " << i << " " << col.assignment[i] << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// structural queries
// ---------------------------------------------------------------------------

// Length of a shortest cycle, or nullopt for forests. Parallel edges count as
// a 2-cycle. BFS from every vertex, O(V*E); hosts here are desk-scale.
inline std::optional<int> girth(const Graph& g) {
    {
        std::set<std::pair<int, int>> seen;
        for (const Edge& e : g.edges)
            if (!seen.insert(e.normalized()).second) return 2;
    }
    SimpleAdj adj = simple_adjacency(g);
    int n = g.vertex_count;
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] >= best) break;
            for (int w : adj[u]) {
                if (w == parent[u]) continue;
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

// True iff the graph has no cycle shorter than `target`. Truncated BFS from
// every vertex (depth target/2), so it stays usable on hosts far too large
// for the exact girth computation.
inline bool girth_at_least(const Graph& g, int target) {
    if (target <= 2) return true;
    AdjList adj = adjacency(g);
    int n = g.vertex_count;
    int half = target / 2; // ceil((target-1)/2)
    std::vector<int> dist(n, -1), tree_edge(n, -1), mark(n, -1);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        queue.clear();
        queue.push_back(root);
        mark[root] = root;
        dist[root] = 0;
        tree_edge[root] = -1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (dist[u] >= half) continue;
            for (auto [w, e] : adj[u]) {
                if (e == tree_edge[u]) continue;
                if (mark[w] != root) {
                    mark[w] = root;
                    dist[w] = dist[u] + 1;
                    tree_edge[w] = e;
                    queue.push_back(w);
                } else if (dist[u] + dist[w] + 1 < target) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline DegreeStats degree_stats(const Graph& g) {
    if (g.vertex_count < 1) throw std::invalid_argument("degree_stats on empty vertex set");
    auto deg = degrees(g);
    DegreeStats st;
    st.min_degree = *std::min_element(deg.begin(), deg.end());
    st.max_degree = *std::max_element(deg.begin(), deg.end());
    st.average_degree = Frac(2LL * g.edge_count(), g.vertex_count);
    return st;
}

// Spanning subgraph holding exactly the edges of one color class, original
// edge order preserved, vertex ids unchanged.
inline Graph color_class(const Graph& h, const EdgeColoring& col, int c) {
    if (!col.valid_for(h)) throw std::invalid_argument("coloring does not fit host");
    if (c < 0 || c >= col.color_count) throw std::out_of_range("color index out of range");
    Graph out(h.vertex_count);
    out.bipartition = h.bipartition;
    for (int i = 0; i < h.edge_count(); ++i)
        if (col.assignment[i] == c) out.edges.push_back(h.edges[i]);
    return out;
}

// A proper 2-coloring of the vertices if one exists. A declared bipartition is
// validated and returned as-is; otherwise sides are computed per component,
// with the component's lowest-index vertex on side A.
inline std::optional<Bipartition> check_bipartition(const Graph& g) {
    if (g.bipartition && bipartition_valid(g, *g.bipartition)) return *g.bipartition;
    SimpleAdj adj = simple_adjacency(g);
    std::vector<int> side(g.vertex_count, -1);
    for (int root = 0; root < g.vertex_count; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[u]) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    q.push(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (int v = 0; v < g.vertex_count; ++v) (side[v] == 0 ? b.side_a : b.side_b).push_back(v);
    return b;
}

// Checks injectivity and that every pattern edge lands on a host edge, with
// multiplicity respected when the pattern itself has parallel edges.
inline bool embedding_valid(const Graph& host, const Graph& pattern, const Embedding& emb) {
    if (emb.map.size() != static_cast<std::size_t>(pattern.vertex_count)) return false;
    std::set<int> used;
    for (int w : emb.map) {
        if (w < 0 || w >= host.vertex_count) return false;
        if (!used.insert(w).second) return false;
    }
    std::map<std::pair<int, int>, int> host_mult;
    for (const Edge& e : host.edges) ++host_mult[e.normalized()];
    std::map<std::pair<int, int>, int> need;
    for (const Edge& e : pattern.edges) {
        int a = emb.map[e.u], b = emb.map[e.v];
        ++need[Edge{a, b}.normalized()];
    }
    for (auto& [pair, m] : need) {
        auto it = host_mult.find(pair);
        if (it == host_mult.end() || it->second < m) return false;
    }
    return true;
}

} // namespace ramsey
