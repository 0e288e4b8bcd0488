#pragma once

#include <queue>
#include <vector>

namespace ramsey {

// Hopcroft-Karp maximum matching on a bipartite multigraph. Vertices are
// compact left/right indices; adjacency carries edge ids so parallel edges
// stay distinguishable and factors can be reported as edge-index sets.
class BipartiteMatcher {
public:
    // adj[l] = list of (right vertex, edge id)
    BipartiteMatcher(int n_left, int n_right, const std::vector<std::vector<std::pair<int, int>>>& adj)
        : n_left_(n_left), n_right_(n_right), adj_(adj) {}

    int solve() {
        match_left_.assign(n_left_, -1);
        match_right_.assign(n_right_, -1);
        edge_left_.assign(n_left_, -1);
        int matched = 0;
        while (bfs()) {
            for (int l = 0; l < n_left_; ++l)
                if (match_left_[l] == -1 && dfs(l)) ++matched;
        }
        return matched;
    }

    // edge id matched to each left vertex, -1 if exposed
    const std::vector<int>& matched_edges() const { return edge_left_; }

private:
    static constexpr int kInf = 1 << 30;

    bool bfs() {
        dist_.assign(n_left_, kInf);
        std::queue<int> q;
        for (int l = 0; l < n_left_; ++l)
            if (match_left_[l] == -1) {
                dist_[l] = 0;
                q.push(l);
            }
        bool reachable = false;
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (auto [r, e] : adj_[l]) {
                (void)e;
                int l2 = match_right_[r];
                if (l2 == -1) {
                    reachable = true;
                } else if (dist_[l2] == kInf) {
                    dist_[l2] = dist_[l] + 1;
                    q.push(l2);
                }
            }
        }
        return reachable;
    }

    bool dfs(int l) {
        for (auto [r, e] : adj_[l]) {
            int l2 = match_right_[r];
            if (l2 == -1 || (dist_[l2] == dist_[l] + 1 && dfs(l2))) {
                match_left_[l] = r;
                match_right_[r] = l;
                edge_left_[l] = e;
                return true;
            }
        }
        dist_[l] = kInf;
        return false;
    }

    int n_left_, n_right_;
    const std::vector<std::vector<std::pair<int, int>>>& adj_;
    std::vector<int> match_left_, match_right_, edge_left_, dist_;
};

} // namespace ramsey
