#include "totmatch/graph.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace totmatch {

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), VertexPair{u, v});
}

Graph make_graph(int vertex_count, std::vector<VertexPair> edges,
                 std::optional<Bipartition> bipartition) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (u < 0 || v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    if (bipartition) {
        std::vector<int> side(vertex_count, -1);
        for (int a : bipartition->side_a) {
            if (a < 0 || a >= vertex_count || side[a] != -1)
                throw std::invalid_argument("bad bipartition");
            side[a] = 0;
        }
        for (int b : bipartition->side_b) {
            if (b < 0 || b >= vertex_count || side[b] != -1)
                throw std::invalid_argument("bad bipartition");
            side[b] = 1;
        }
        for (int v = 0; v < vertex_count; ++v)
            if (side[v] == -1) throw std::invalid_argument("bipartition does not cover all vertices");
        for (auto [u, v] : edges)
            if (side[u] == side[v])
                throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                            "} violates bipartition");
        std::sort(bipartition->side_a.begin(), bipartition->side_a.end());
        std::sort(bipartition->side_b.begin(), bipartition->side_b.end());
    }
    return Graph{vertex_count, std::move(edges), std::move(bipartition)};
}

Graph make_complete_bipartite(int r, int s) {
    if (r < 1 || s < 1) throw std::invalid_argument("biclique side size must be positive");
    std::vector<VertexPair> edges;
    edges.reserve(static_cast<std::size_t>(r) * s);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) edges.emplace_back(i, r + j);
    Bipartition bip;
    for (int i = 0; i < r; ++i) bip.side_a.push_back(i);
    for (int j = 0; j < s; ++j) bip.side_b.push_back(r + j);
    return make_graph(r + s, std::move(edges), std::move(bip));
}

Graph make_path(int vertex_count) {
    std::vector<VertexPair> edges;
    for (int i = 0; i + 1 < vertex_count; ++i) edges.emplace_back(i, i + 1);
    return make_graph(vertex_count, std::move(edges));
}

Graph make_star(int leaf_count) {
    std::vector<VertexPair> edges;
    for (int i = 1; i <= leaf_count; ++i) edges.emplace_back(0, i);
    return make_graph(leaf_count + 1, std::move(edges));
}

Graph make_complete(int vertex_count) {
    std::vector<VertexPair> edges;
    for (int u = 0; u < vertex_count; ++u)
        for (int v = u + 1; v < vertex_count; ++v) edges.emplace_back(u, v);
    return make_graph(vertex_count, std::move(edges));
}

bool is_complete_bipartite(const Graph& g) {
    if (!g.bipartition) return false;
    auto r = g.bipartition->side_a.size();
    auto s = g.bipartition->side_b.size();
    return g.edges.size() == r * s;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count == 0) return true;
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> seen(g.vertex_count, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
    }
    return count == g.vertex_count;
}

bool is_tree(const Graph& g) {
    return g.vertex_count >= 1 && g.edge_count() == g.vertex_count - 1 && is_connected(g);
}

std::vector<Element> elements(const Graph& g) {
    std::vector<Element> out;
    out.reserve(g.vertex_count + g.edges.size());
    for (int v = 0; v < g.vertex_count; ++v) out.push_back(Element::vertex(v));
    for (auto [u, v] : g.edges) out.push_back(Element::edge(u, v));
    return out;
}

std::string element_id(const Element& d) {
    if (d.is_vertex()) return "v" + std::to_string(d.u + 1);
    return "e" + std::to_string(d.u + 1) + "-" + std::to_string(d.v + 1);
}

Element parse_element_id(const std::string& id) {
    try {
        if (id.size() >= 2 && id[0] == 'v') {
            std::size_t pos = 0;
            int i = std::stoi(id.substr(1), &pos);
            if (pos + 1 == id.size() && i >= 1) return Element::vertex(i - 1);
        } else if (id.size() >= 4 && id[0] == 'e') {
            auto dash = id.find('-');
            if (dash != std::string::npos && dash > 1) {
                int u = std::stoi(id.substr(1, dash - 1));
                int v = std::stoi(id.substr(dash + 1));
                if (u >= 1 && v >= 1 && u != v) return Element::edge(u - 1, v - 1);
            }
        }
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("bad element id '" + id + "'");
}

int element_index(const Graph& g, const Element& d) {
    if (d.is_vertex()) {
        if (d.u < 0 || d.u >= g.vertex_count)
            throw std::invalid_argument("element " + element_id(d) + " not in graph");
        return d.u;
    }
    auto it = std::lower_bound(g.edges.begin(), g.edges.end(), VertexPair{d.u, d.v});
    if (it == g.edges.end() || *it != VertexPair{d.u, d.v})
        throw std::invalid_argument("element " + element_id(d) + " not in graph");
    return g.vertex_count + static_cast<int>(it - g.edges.begin());
}

bool adjacent(const Graph& g, const Element& d1, const Element& d2) {
    element_index(g, d1);
    element_index(g, d2);
    if (d1 == d2) throw std::invalid_argument("adjacency of an element with itself");
    if (d1.is_vertex() && d2.is_vertex()) return g.has_edge(d1.u, d2.u);
    if (d1.is_edge() && d2.is_edge())
        return d1.u == d2.u || d1.u == d2.v || d1.v == d2.u || d1.v == d2.v;
    const Element& vert = d1.is_vertex() ? d1 : d2;
    const Element& edge = d1.is_vertex() ? d2 : d1;
    return vert.u == edge.u || vert.u == edge.v;
}

Graph total_graph(const Graph& g) {
    auto elems = elements(g);
    std::vector<VertexPair> edges;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (adjacent(g, elems[i], elems[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return make_graph(static_cast<int>(elems.size()), std::move(edges));
}

std::vector<unsigned long long> element_adjacency_masks(const Graph& g) {
    auto elems = elements(g);
    if (elems.size() > 64) throw std::invalid_argument("graph has more than 64 elements");
    std::vector<unsigned long long> masks(elems.size(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (adjacent(g, elems[i], elems[j])) {
                masks[i] |= 1ULL << j;
                masks[j] |= 1ULL << i;
            }
    return masks;
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;
    int declared_a = -1;
    std::vector<VertexPair> edges;
    std::vector<int> edge_lines;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n != -1) throw ParseError(line_no, "duplicate problem line");
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "tm" || n < 0 || m < 0)
                throw ParseError(line_no, "malformed header, expected 'p tm <n> <m>'");
        } else if (tag == "b") {
            if (n == -1) throw ParseError(line_no, "'b' line before header");
            if (declared_a != -1) throw ParseError(line_no, "duplicate 'b' line");
            if (!(ls >> declared_a) || declared_a < 0 || declared_a > n)
                throw ParseError(line_no, "malformed 'b' line");
        } else if (tag == "e") {
            if (n == -1) throw ParseError(line_no, "'e' line before header");
            int u, v;
            if (!(ls >> u >> v)) throw ParseError(line_no, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line_no, "vertex out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
            edges.emplace_back(u - 1, v - 1);
            edge_lines.push_back(line_no);
        } else {
            throw ParseError(line_no, "unknown line tag '" + tag + "'");
        }
    }
    if (n == -1) throw ParseError(line_no, "missing header 'p tm <n> <m>'");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
    // Report duplicates and bipartition violations with the offending line.
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u > v) std::swap(u, v);
        for (std::size_t j = 0; j < i; ++j) {
            auto [x, y] = edges[j];
            if (x > y) std::swap(x, y);
            if (x == u && y == v) throw ParseError(edge_lines[i], "duplicate edge");
        }
        if (declared_a != -1) {
            bool ua = u < declared_a, va = v < declared_a;
            if (ua == va) throw ParseError(edge_lines[i], "edge violates bipartition");
        }
    }
    std::optional<Bipartition> bip;
    if (declared_a != -1) {
        Bipartition b;
        for (int i = 0; i < declared_a; ++i) b.side_a.push_back(i);
        for (int i = declared_a; i < n; ++i) b.side_b.push_back(i);
        bip = std::move(b);
    }
    return make_graph(n, std::move(edges), std::move(bip));
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p tm " << g.vertex_count << " " << g.edge_count() << "\n";
    if (g.bipartition) {
        // Only prefix bipartitions are expressible in the file format.
        const auto& a = g.bipartition->side_a;
        bool prefix = true;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != static_cast<int>(i)) prefix = false;
        if (!prefix) throw std::invalid_argument("bipartition side A is not a vertex prefix");
        out << "b " << a.size() << "\n";
    }
    for (auto [u, v] : g.edges) out << "e " << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

} // namespace totmatch
