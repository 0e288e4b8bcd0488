#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>

#include "ramsey/graph.hpp"

namespace ramsey {

struct PatternError : std::runtime_error {
    int column;
    PatternError(int col, const std::string& msg)
        : std::runtime_error("column " + std::to_string(col) + ": " + msg), column(col) {}
};

enum class PatternKind { star, path, cycle, complete_bipartite, tree_file, graph_file };

// Parsed description of the target graph G.
//
// Grammar (whitespace-free):
//   S<n>        star K_{1,n}
//   P<n>        path on n vertices
//   C<n>        cycle on n vertices, n >= 3
//   K{<m>,<n>}  complete bipartite
//   T@<path>    explicit tree from a graph file
//   G@<path>    explicit simple graph from a graph file
struct PatternSpec {
    PatternKind kind = PatternKind::star;
    int a = 1, b = 1;
    std::string file;
    Graph loaded; // materialized pattern for file kinds
    std::string text;

    friend bool operator==(const PatternSpec&, const PatternSpec&) = default;
};

inline bool is_tree(const Graph& g) {
    if (g.vertex_count == 0) return false;
    if (g.edge_count() != g.vertex_count - 1) return false;
    // connected check
    SimpleAdj adj = simple_adjacency(g);
    std::vector<char> seen(g.vertex_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.vertex_count && !has_parallel_edges(g);
}

namespace detail {

inline int parse_pattern_int(const std::string& text, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw PatternError(static_cast<int>(start + 1), "expected integer");
    if (pos - start > 7) throw PatternError(static_cast<int>(start + 1), "integer too large");
    return std::stoi(text.substr(start, pos - start));
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace detail

inline PatternSpec parse_pattern(const std::string& text) {
    if (text.empty()) throw PatternError(1, "empty pattern");
    PatternSpec spec;
    spec.text = text;
    char head = text[0];
    std::size_t pos = 1;
    switch (head) {
    case 'S':
    case 'P':
    case 'C': {
        int n = detail::parse_pattern_int(text, pos);
        if (pos != text.size())
            throw PatternError(static_cast<int>(pos + 1), "trailing characters");
        if (head == 'C' && n < 3) throw PatternError(2, "cycle needs at least 3 vertices");
        if (n < 1) throw PatternError(2, "size must be positive");
        spec.kind = head == 'S'   ? PatternKind::star
                    : head == 'P' ? PatternKind::path
                                  : PatternKind::cycle;
        spec.a = n;
        return spec;
    }
    case 'K': {
        if (pos >= text.size() || text[pos] != '{')
            throw PatternError(static_cast<int>(pos + 1), "expected '{'");
        ++pos;
        int m = detail::parse_pattern_int(text, pos);
        if (pos >= text.size() || text[pos] != ',')
            throw PatternError(static_cast<int>(pos + 1), "expected ','");
        ++pos;
        int n = detail::parse_pattern_int(text, pos);
        if (pos >= text.size() || text[pos] != '}')
            throw PatternError(static_cast<int>(pos + 1), "expected '}'");
        ++pos;
        if (pos != text.size())
            throw PatternError(static_cast<int>(pos + 1), "trailing characters");
        if (m < 1 || n < 1) throw PatternError(2, "sides must be positive");
        spec.kind = PatternKind::complete_bipartite;
        spec.a = m;
        spec.b = n;
        return spec;
    }
    case 'T':
    case 'G': {
        if (pos >= text.size() || text[pos] != '@')
            throw PatternError(static_cast<int>(pos + 1), "expected '@'");
        spec.file = text.substr(pos + 1);
        if (spec.file.empty())
            throw PatternError(static_cast<int>(pos + 2), "missing file path");
        spec.kind = head == 'T' ? PatternKind::tree_file : PatternKind::graph_file;
        spec.loaded = parse_graph(detail::read_file(spec.file));
        if (has_parallel_edges(spec.loaded))
            throw std::runtime_error("pattern '" + text + "' must be a simple graph");
        if (spec.kind == PatternKind::tree_file && !is_tree(spec.loaded))
            throw std::runtime_error("pattern file '" + spec.file + "' is not a tree");
        return spec;
    }
    default:
        throw PatternError(1, std::string("unknown pattern kind '") + head + "'");
    }
}

inline Graph make_star(int n) {
    Graph g(n + 1);
    for (int i = 1; i <= n; ++i) g.add_edge(0, i);
    return g;
}

inline Graph make_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph make_complete_bipartite(int m, int n) {
    Graph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    Bipartition b;
    for (int i = 0; i < m; ++i) b.side_a.push_back(i);
    for (int j = 0; j < n; ++j) b.side_b.push_back(m + j);
    g.bipartition = std::move(b);
    return g;
}

inline Graph make_pattern_graph(const PatternSpec& spec) {
    switch (spec.kind) {
    case PatternKind::star: return make_star(spec.a);
    case PatternKind::path: return make_path(spec.a);
    case PatternKind::cycle: return make_cycle(spec.a);
    case PatternKind::complete_bipartite: return make_complete_bipartite(spec.a, spec.b);
    case PatternKind::tree_file:
    case PatternKind::graph_file: return spec.loaded;
    }
    throw InternalError("unhandled pattern kind");
}

// convenience for tests and pipelines
inline PatternSpec star_spec(int n) {
    PatternSpec s;
    s.kind = PatternKind::star;
    s.a = n;
    s.text = "S" + std::to_string(n);
    return s;
}

inline PatternSpec path_spec(int n) {
    PatternSpec s;
    s.kind = PatternKind::path;
    s.a = n;
    s.text = "P" + std::to_string(n);
    return s;
}

inline PatternSpec cycle_spec(int n) {
    PatternSpec s;
    s.kind = PatternKind::cycle;
    s.a = n;
    s.text = "C" + std::to_string(n);
    return s;
}

inline PatternSpec kmn_spec(int m, int n) {
    PatternSpec s;
    s.kind = PatternKind::complete_bipartite;
    s.a = m;
    s.b = n;
    s.text = "K{" + std::to_string(m) + "," + std::to_string(n) + "}";
    return s;
}

inline PatternSpec graph_pattern_spec(const Graph& g, bool tree = false) {
    PatternSpec s;
    s.kind = tree ? PatternKind::tree_file : PatternKind::graph_file;
    s.loaded = g;
    s.text = tree ? "T@<inline>" : "G@<inline>";
    if (tree && !is_tree(g)) throw std::invalid_argument("pattern graph is not a tree");
    return s;
}

} // namespace ramsey
