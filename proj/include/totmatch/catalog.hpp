#ifndef TOTMATCH_CATALOG_HPP
#define TOTMATCH_CATALOG_HPP

#include "totmatch/dd.hpp"
#include "totmatch/enumerate.hpp"
#include "totmatch/inequality.hpp"

namespace totmatch {

// Vertex selection (A, B, A1, B1) indexing a lifted biclique row: (A, B)
// must induce a biclique with |B| > |A| >= 2, and the block subsets satisfy
// |A| > |A1| > |B1| >= 0 with |A1| = 1 whenever B1 is empty.
struct BicliqueSelector {
    std::vector<int> side_a;
    std::vector<int> side_b;
    std::vector<int> a1;
    std::vector<int> b1;
};

// Node rows x_v + sum_{e at v} y_e <= 1, edge rows x_v + x_w + y_e <= 1,
// and nonnegativity, in that order; n + m + (n+m) rows.
std::vector<LinearInequality> relaxation_inequalities(const Graph& g);

// Sum of all vertex and edge variables of an induced balanced biclique,
// bounded by its side size r >= 2.
LinearInequality balanced_biclique_inequality(const Graph& g, const std::vector<int>& side_a,
                                              const std::vector<int>& side_b);

// Coefficient beta = (s + |A1| - r - |B1|) / (|A1| - |B1|) on the block
// A1, B1, A1 x B1, coefficient 1 elsewhere on the biclique, right-hand side
// |A1| (beta - 1) + |A|.
LinearInequality nonbalanced_lifted_inequality(const Graph& g, const BicliqueSelector& sel);
Rational lifted_beta(int r, int s, int a1, int b1);

// The all-ones row with right-hand side s; valid but dominated, kept for
// domination tests.
LinearInequality plain_nonbalanced_inequality(const Graph& g, const std::vector<int>& side_a,
                                              const std::vector<int>& side_b);

// Node, edge and nonnegativity rows of a tree.
HPolytope tree_description(const Graph& g);

// Relaxation rows plus every balanced biclique row (equal-size side subsets,
// k >= 2) and every admissible lifted row (side subsets of different sizes,
// both >= 2, all (A1, B1) selections), deduplicated in normalized form.
HPolytope complete_bipartite_description(int r, int s);

struct ValidityResult {
    bool valid = false;
    TotalMatching counterexample; // a violating total matching when invalid
};

// True iff every total matching's characteristic vector satisfies the row.
ValidityResult is_valid(const Graph& g, const LinearInequality& ineq,
                        int element_limit = kDefaultElementLimit);

struct FacetResult {
    bool facet = false;
    int tight_rank = 0;
    QMat certificate; // a maximal affinely independent set of tight points
};

// Facet test by tight-point affine rank: the polytope is full-dimensional,
// so a valid row is a facet iff its tight characteristic vectors have affine
// rank n + m. Throws std::invalid_argument when the row is not valid.
FacetResult is_facet(const Graph& g, const LinearInequality& ineq,
                     int element_limit = kDefaultElementLimit);

struct DescriptionReport {
    bool complete = false;   // every hull facet appears among the rows
    bool sound = false;      // every row is valid
    bool irredundant = false; // every row appears among the hull facets
    int hull_facets = 0;
    std::vector<LinearInequality> missing; // hull facets absent from the rows
    std::vector<LinearInequality> extra;   // rows absent from the hull facets
    std::vector<LinearInequality> invalid; // rows with a violating matching
    bool all() const { return complete && sound && irredundant; }
};

DescriptionReport verify_description(const Graph& g, const HPolytope& h,
                                     int element_limit = kDefaultElementLimit,
                                     int dimension_limit = kDefaultDimensionLimit);

} // namespace totmatch

#endif
