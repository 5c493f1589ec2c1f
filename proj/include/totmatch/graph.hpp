#ifndef TOTMATCH_GRAPH_HPP
#define TOTMATCH_GRAPH_HPP

#include "totmatch/errors.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace totmatch {

using VertexPair = std::pair<int, int>;

struct Bipartition {
    std::vector<int> side_a;
    std::vector<int> side_b;
};

// Simple undirected loopless graph with 0-based vertices. Edges are stored
// with u < v, sorted lexicographically. Instances are values; nothing here
// mutates after construction.
struct Graph {
    int vertex_count = 0;
    std::vector<VertexPair> edges;
    std::optional<Bipartition> bipartition;

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
};

// Validates, sorts and deduplicates; throws std::invalid_argument on loops,
// duplicate edges, out-of-range endpoints, or an edge violating the
// bipartition.
Graph make_graph(int vertex_count, std::vector<VertexPair> edges,
                 std::optional<Bipartition> bipartition = std::nullopt);

// K_{r,s} with side A on vertices 0..r-1.
Graph make_complete_bipartite(int r, int s);

Graph make_path(int vertex_count);
Graph make_star(int leaf_count);
Graph make_complete(int vertex_count);

bool is_complete_bipartite(const Graph& g);
bool is_tree(const Graph& g);
bool is_connected(const Graph& g);

// An element is a vertex or an edge. Canonical order: vertices by index,
// then edges lexicographically; this fixes the coordinate system used by
// every vector in the project.
struct Element {
    enum class Kind { Vertex, Edge };
    Kind kind;
    int u = -1;
    int v = -1;

    static Element vertex(int i) { return {Kind::Vertex, i, -1}; }
    static Element edge(int u, int v) {
        if (u > v) std::swap(u, v);
        return {Kind::Edge, u, v};
    }
    bool is_vertex() const { return kind == Kind::Vertex; }
    bool is_edge() const { return kind == Kind::Edge; }
    bool operator==(const Element& o) const = default;
};

std::vector<Element> elements(const Graph& g);

// 1-based ids: "v3", "e1-4".
std::string element_id(const Element& d);
Element parse_element_id(const std::string& id);

// Index of an element in the canonical order; throws if it does not belong
// to the graph.
int element_index(const Graph& g, const Element& d);

// True iff the two elements touch: adjacent vertices, incident edges, or an
// edge and one of its endpoints. Both elements must belong to g and differ.
bool adjacent(const Graph& g, const Element& d1, const Element& d2);

// Graph on the n+m elements of g, indexed in canonical order, with an edge
// wherever two elements are adjacent.
Graph total_graph(const Graph& g);

// Element adjacency packed as one bitmask per element; requires n+m <= 64.
std::vector<unsigned long long> element_adjacency_masks(const Graph& g);

// --- graph file format -----------------------------------------------------
//
//   c <comment>
//   p tm <n> <m>
//   b <k>            optional: vertices 1..k form side A
//   e <u> <v>        1-based endpoints, m lines
//
Graph parse_graph(const std::string& text);
std::string write_graph(const Graph& g);

} // namespace totmatch

#endif
