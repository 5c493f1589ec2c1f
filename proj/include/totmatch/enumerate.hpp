#ifndef TOTMATCH_ENUMERATE_HPP
#define TOTMATCH_ENUMERATE_HPP

#include "totmatch/errors.hpp"
#include "totmatch/graph.hpp"
#include "totmatch/rational.hpp"

namespace totmatch {

inline constexpr int kDefaultElementLimit = 24;

// A total matching as sorted canonical element indices.
using TotalMatching = std::vector<int>;

enum class EnumerationMode { All, Maximal, Maximum };

// Depth-first enumeration over elements in canonical order with adjacency
// pruning. Mode All includes the empty set; Maximal keeps inclusion-maximal
// sets; Maximum keeps those of size nu_t. Output is in lexicographic order.
// Throws LimitError when the graph has more than `element_limit` elements.
std::vector<TotalMatching> enumerate_total_matchings(const Graph& g, EnumerationMode mode,
                                                     int element_limit = kDefaultElementLimit);

bool is_total_matching(const Graph& g, const TotalMatching& t);

// 0/1 characteristic vector in element coordinates.
QVec characteristic_vector(const Graph& g, const TotalMatching& t);

// Size of a maximum total matching. Uses the polynomial solver when g is a
// complete bipartite graph, otherwise exhaustive enumeration under the limit.
int nu_t(const Graph& g, int element_limit = kDefaultElementLimit);

struct WeightedMatching {
    Rational value;
    TotalMatching witness;
};

// Exhaustive optimum of sum of w over a total matching; ties broken by the
// lexicographically smallest element set.
WeightedMatching max_weight_total_matching_bruteforce(const Graph& g, const QVec& weights,
                                                      int element_limit = kDefaultElementLimit);

// --- weight / point file format ----------------------------------------------
//
//   c <comment>
//   <element-id> <rational>     one line per element, e.g. "v2 1/3"
//
QVec parse_element_vector(const Graph& g, const std::string& text);
std::string write_element_vector(const Graph& g, const QVec& values);

} // namespace totmatch

#endif
