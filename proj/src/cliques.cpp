#include "totmatch/cliques.hpp"

#include <algorithm>

namespace totmatch {

namespace {

void bron_kerbosch(const std::vector<unsigned long long>& adj, unsigned long long r,
                   unsigned long long p, unsigned long long x,
                   std::vector<unsigned long long>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    unsigned long long px = p | x;
    // Pivot on the vertex covering most of p.
    int pivot = -1, best = -1;
    for (unsigned long long s = px; s; s &= s - 1) {
        int u = __builtin_ctzll(s);
        int covered = __builtin_popcountll(p & adj[u]);
        if (covered > best) {
            best = covered;
            pivot = u;
        }
    }
    unsigned long long candidates = p & ~adj[pivot];
    for (unsigned long long s = candidates; s; s &= s - 1) {
        int v = __builtin_ctzll(s);
        unsigned long long bit = 1ULL << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= ~bit;
        x |= bit;
    }
}

std::vector<int> unpack(unsigned long long mask) {
    std::vector<int> out;
    for (unsigned long long s = mask; s; s &= s - 1) out.push_back(__builtin_ctzll(s));
    return out;
}

} // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    const int n = g.vertex_count;
    if (n > 64) throw std::invalid_argument("clique enumeration limited to 64 vertices");
    std::vector<unsigned long long> adj(n, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
    }
    std::vector<unsigned long long> raw;
    unsigned long long all = n == 64 ? ~0ULL : (1ULL << n) - 1;
    bron_kerbosch(adj, 0, all, 0, raw);
    std::vector<std::vector<int>> out;
    out.reserve(raw.size());
    for (auto mask : raw) out.push_back(unpack(mask));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> reduced_total_graph_cliques(int r, int s, Side removed) {
    if (r < 1 || s < 1) throw std::invalid_argument("biclique side size must be positive");
    Graph g = make_complete_bipartite(r, s);
    auto elems = elements(g);
    auto kept_vertex = [&](int v) {
        bool in_a = v < r;
        return removed == Side::A ? !in_a : in_a;
    };
    std::vector<std::vector<int>> out;
    for (int v = 0; v < g.vertex_count; ++v) {
        std::vector<int> clique;
        if (kept_vertex(v)) clique.push_back(element_index(g, Element::vertex(v)));
        for (auto [a, b] : g.edges)
            if (a == v || b == v) clique.push_back(element_index(g, Element::edge(a, b)));
        std::sort(clique.begin(), clique.end());
        out.push_back(std::move(clique));
    }
    return out;
}

std::pair<Graph, std::vector<int>> reduced_total_graph(int r, int s, Side removed) {
    Graph g = make_complete_bipartite(r, s);
    Graph tg = total_graph(g);
    std::vector<int> survivors;
    for (int i = 0; i < tg.vertex_count; ++i) {
        bool vertex_element = i < g.vertex_count;
        bool in_a = vertex_element && i < r;
        bool drop = vertex_element && ((removed == Side::A) ? in_a : !in_a);
        if (!drop) survivors.push_back(i);
    }
    std::vector<int> new_index(tg.vertex_count, -1);
    for (std::size_t i = 0; i < survivors.size(); ++i) new_index[survivors[i]] = static_cast<int>(i);
    std::vector<VertexPair> edges;
    for (auto [u, v] : tg.edges)
        if (new_index[u] != -1 && new_index[v] != -1)
            edges.emplace_back(new_index[u], new_index[v]);
    return {make_graph(static_cast<int>(survivors.size()), std::move(edges)), survivors};
}

} // namespace totmatch
