#include "totmatch/chordal.hpp"

#include <algorithm>
#include <deque>

namespace totmatch {

namespace {

std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
    std::vector<std::vector<bool>> adj(g.vertex_count, std::vector<bool>(g.vertex_count, false));
    for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = true;
    return adj;
}

// Shortest path from s to t avoiding `blocked`, or empty if none.
std::vector<int> bfs_path(const std::vector<std::vector<bool>>& adj, int s, int t,
                          const std::vector<bool>& blocked) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> parent(n, -2);
    std::deque<int> queue{s};
    parent[s] = -1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == t) break;
        for (int v = 0; v < n; ++v) {
            if (adj[u][v] && parent[v] == -2 && !blocked[v]) {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    if (parent[t] == -2) return {};
    std::vector<int> path;
    for (int u = t; u != -1; u = parent[u]) path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
}

// A failed elimination check yields x adjacent to both u and w, u and w
// non-adjacent. Any chordless cycle through x must consist of x plus a
// shortest u-w path avoiding the rest of N[x].
std::vector<int> hole_through(const std::vector<std::vector<bool>>& adj, int x, int u, int w) {
    const int n = static_cast<int>(adj.size());
    std::vector<bool> blocked(n, false);
    blocked[x] = true;
    for (int v = 0; v < n; ++v)
        if (adj[x][v] && v != u && v != w) blocked[v] = true;
    blocked[u] = blocked[w] = false;
    auto path = bfs_path(adj, u, w, blocked);
    if (path.empty()) return {};
    path.push_back(x);
    return path;
}

} // namespace

bool verify_hole(const Graph& g, const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    if (k < 4) return false;
    std::vector<bool> seen(g.vertex_count, false);
    for (int v : cycle) {
        if (v < 0 || v >= g.vertex_count || seen[v]) return false;
        seen[v] = true;
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
        }
    return true;
}

ChordalityResult is_chordal(const Graph& g) {
    const int n = g.vertex_count;
    auto adj = adjacency_matrix(g);

    // Maximum-cardinality search, producing order[n-1], ..., order[0].
    std::vector<int> weight(n, 0), position(n, -1), order(n, -1);
    for (int i = n - 1; i >= 0; --i) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (position[v] == -1 && (best == -1 || weight[v] > weight[best])) best = v;
        order[i] = best;
        position[best] = i;
        for (int v = 0; v < n; ++v)
            if (position[v] == -1 && adj[best][v]) ++weight[v];
    }

    // order is a perfect elimination ordering iff g is chordal: for each
    // vertex x, its later neighbors must form a clique, which reduces to
    // checking them against the earliest of them.
    for (int i = 0; i < n; ++i) {
        int x = order[i];
        int pivot = -1;
        for (int j = i + 1; j < n; ++j)
            if (adj[x][order[j]]) { pivot = order[j]; break; }
        if (pivot == -1) continue;
        for (int j = position[pivot] + 1; j < n; ++j) {
            int w = order[j];
            if (adj[x][w] && !adj[pivot][w]) {
                auto hole = hole_through(adj, x, pivot, w);
                if (hole.empty()) {
                    // The failing triple can be disconnected in the reduced
                    // graph; some triple of a hole never is.
                    for (int a = 0; a < n && hole.empty(); ++a)
                        for (int u = 0; u < n && hole.empty(); ++u) {
                            if (!adj[a][u]) continue;
                            for (int b = u + 1; b < n && hole.empty(); ++b)
                                if (adj[a][b] && !adj[u][b]) hole = hole_through(adj, a, u, b);
                        }
                }
                return {false, {}, hole};
            }
        }
    }
    return {true, order, {}};
}

std::vector<int> find_hole_of_length(const Graph& g, int length) {
    std::vector<int> subset;
    std::vector<int> best;
    // Graphs here are small; enumerate vertex subsets of the given size and
    // test each cyclic arrangement.
    std::vector<int> perm;
    auto try_subset = [&](auto&& self, std::vector<int>& chosen, int start) -> bool {
        if (static_cast<int>(chosen.size()) == length) {
            std::vector<int> arrangement(chosen.begin() + 1, chosen.end());
            std::sort(arrangement.begin(), arrangement.end());
            do {
                std::vector<int> cycle{chosen[0]};
                cycle.insert(cycle.end(), arrangement.begin(), arrangement.end());
                if (verify_hole(g, cycle)) {
                    best = cycle;
                    return true;
                }
            } while (std::next_permutation(arrangement.begin(), arrangement.end()));
            return false;
        }
        for (int v = start; v < g.vertex_count; ++v) {
            chosen.push_back(v);
            if (self(self, chosen, v + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    std::vector<int> chosen;
    try_subset(try_subset, chosen, 0);
    return best;
}

} // namespace totmatch
