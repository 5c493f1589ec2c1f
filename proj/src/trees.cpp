#include "totmatch/trees.hpp"

#include <algorithm>
#include <map>

namespace totmatch {

namespace {

Graph tree_from_pruefer(const std::vector<int>& seq, int n) {
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];
    std::vector<VertexPair> edges;
    std::vector<bool> used(n, false);
    for (int v : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1 && !used[leaf]) {
                edges.emplace_back(leaf, v);
                used[leaf] = true;
                --degree[v];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1 && !used[v]) (a == -1 ? a : b) = v;
    edges.emplace_back(a, b);
    return make_graph(n, std::move(edges));
}

std::string rooted_form(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> children;
    for (int u : adj[v])
        if (u != parent) children.push_back(rooted_form(adj, u, v));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children) out += c;
    out += ")";
    return out;
}

} // namespace

std::string tree_canonical_form(const Graph& g) {
    if (!is_tree(g)) throw std::invalid_argument("not a tree");
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::string best;
    for (int root = 0; root < g.vertex_count; ++root) {
        std::string form = rooted_form(adj, root, -1);
        if (best.empty() || form < best) best = form;
    }
    return best;
}

std::vector<Graph> all_trees(int vertex_count) {
    if (vertex_count < 1) throw std::invalid_argument("tree needs at least one vertex");
    if (vertex_count == 1) return {make_graph(1, {})};
    if (vertex_count == 2) return {make_path(2)};
    std::map<std::string, Graph> classes;
    std::vector<int> seq(vertex_count - 2, 0);
    while (true) {
        Graph t = tree_from_pruefer(seq, vertex_count);
        std::string key = tree_canonical_form(t);
        classes.emplace(key, std::move(t));
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == vertex_count - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [key, tree] : classes) out.push_back(std::move(tree));
    return out;
}

Graph tree_from_spec(const std::string& spec) {
    auto parse_count = [&](std::size_t prefix_len) {
        std::size_t pos = 0;
        int k = std::stoi(spec.substr(prefix_len), &pos);
        if (prefix_len + pos != spec.size() || k < 1)
            throw std::invalid_argument("bad tree spec '" + spec + "'");
        return k;
    };
    try {
        if (spec.rfind("path", 0) == 0) return make_path(parse_count(4));
        if (spec.rfind("star", 0) == 0) return make_star(parse_count(4));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("bad tree spec '" + spec + "' (expected pathN or starN)");
}

} // namespace totmatch
