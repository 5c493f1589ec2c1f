#ifndef TOTMATCH_SOLVER_HPP
#define TOTMATCH_SOLVER_HPP

#include "totmatch/enumerate.hpp"
#include "totmatch/inequality.hpp"

#include <optional>

namespace totmatch {

// Exact optimum of a max-weight total matching on K_{r,s}. Weights are
// indexed by the canonical elements of make_complete_bipartite(r, s) and may
// be negative. For each side in turn the side-free problem reduces to a
// max-weight assignment (each kept vertex picks its own vertex, one incident
// edge, or nothing; each removed vertex is covered by at most one edge); the
// better side wins.
std::pair<Rational, TotalMatching> solve_kbipartite(int r, int s, const QVec& weights);

// Same solver on any complete bipartite graph, weights in g's element order.
std::pair<Rational, TotalMatching> solve_complete_bipartite(const Graph& g, const QVec& weights);

// Min-cost assignment of every row to a distinct column (rows <= columns),
// by shortest augmenting paths with potentials. Returns row -> column.
std::vector<int> hungarian_min(const QMat& cost);

struct SeparationResult {
    bool violated = false;
    std::optional<LinearInequality> inequality; // most violated row when violated
    Rational violation;                         // > 0 iff violated
};

// Brute-force search over all side subsets of size r for a violated balanced
// biclique row; the problem is NP-complete, so nothing cleverer is attempted.
// Throws LimitError when the number of candidate pairs exceeds `pair_limit`.
SeparationResult separate_balanced(const Graph& g, const QVec& point, int r,
                                   long long pair_limit = 1000000);

// Exact separation over the complete catalog of K_{r,s}.
SeparationResult separate_catalog(int r, int s, const QVec& point);

} // namespace totmatch

#endif
