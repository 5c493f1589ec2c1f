#ifndef TOTMATCH_TREES_HPP
#define TOTMATCH_TREES_HPP

#include "totmatch/graph.hpp"

namespace totmatch {

// One representative per isomorphism class of trees on `vertex_count`
// vertices, generated from Prüfer sequences and deduplicated by a canonical
// form. Deterministic order.
std::vector<Graph> all_trees(int vertex_count);

// Canonical string of an unrooted tree (minimum over all roots of the
// rooted canonical encoding); equal strings iff isomorphic trees.
std::string tree_canonical_form(const Graph& g);

// Named shapes for the command line: "path5", "star4".
Graph tree_from_spec(const std::string& spec);

} // namespace totmatch

#endif
