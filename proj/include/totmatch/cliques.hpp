#ifndef TOTMATCH_CLIQUES_HPP
#define TOTMATCH_CLIQUES_HPP

#include "totmatch/graph.hpp"

namespace totmatch {

// All inclusion-maximal cliques (Bron-Kerbosch with pivoting). Each clique is
// a sorted vertex set; the list is sorted lexicographically.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

// Cliques of the total graph of K_{r,s} with one side's vertex elements
// removed, produced structurally: {v} plus its incident edges for each kept
// vertex v, and the incident edges of each removed vertex. Exactly r+s sets
// of element indices (canonical order of K_{r,s}).
enum class Side { A, B };
std::vector<std::vector<int>> reduced_total_graph_cliques(int r, int s, Side removed);

// The total graph of K_{r,s} minus one side's vertex elements, on the same
// element indexing as K_{r,s} restricted to the surviving elements. Returns
// the graph together with the surviving element indices in canonical order.
std::pair<Graph, std::vector<int>> reduced_total_graph(int r, int s, Side removed);

} // namespace totmatch

#endif
