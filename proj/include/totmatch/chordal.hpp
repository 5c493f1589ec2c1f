#ifndef TOTMATCH_CHORDAL_HPP
#define TOTMATCH_CHORDAL_HPP

#include "totmatch/graph.hpp"

namespace totmatch {

struct ChordalityResult {
    bool chordal = false;
    // Perfect elimination ordering when chordal.
    std::vector<int> elimination_order;
    // A chordless cycle of length >= 4 otherwise, listed in cycle order.
    std::vector<int> hole;
};

// Maximum-cardinality search plus verification of the resulting ordering;
// on failure a chordless cycle is extracted as a certificate.
ChordalityResult is_chordal(const Graph& g);

// True iff `cycle` is a chordless cycle of g with at least 4 vertices.
bool verify_hole(const Graph& g, const std::vector<int>& cycle);

// Shortest chordless cycle of length >= 4 with exactly `length` vertices, if
// any; used to exhibit specific holes. Empty when none exists.
std::vector<int> find_hole_of_length(const Graph& g, int length);

} // namespace totmatch

#endif
