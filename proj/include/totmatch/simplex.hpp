#ifndef TOTMATCH_SIMPLEX_HPP
#define TOTMATCH_SIMPLEX_HPP

#include "totmatch/inequality.hpp"

namespace totmatch {

enum class LpStatus { Optimal, Unbounded, Infeasible };
enum class Sense { Max, Min };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    QVec point; // a basic optimal solution when status is Optimal
};

// Exact two-phase simplex with Bland's anti-cycling rule. Variables with an
// explicit "-x_j <= 0" row are treated as sign-restricted columns, so on
// systems with full nonnegativity the witness is a vertex of p.
LpResult lp_solve(const HPolytope& p, const QVec& objective, Sense sense);

// True iff max of ineq's left-hand side over p stays within its right-hand
// side (both directions for an equality row). Throws when p is infeasible.
bool is_implied(const LinearInequality& ineq, const HPolytope& p);

// Removes every row implied by the remaining ones; keeps row identity of the
// survivors. Deterministic: rows are examined in canonical sorted order.
HPolytope irredundant_rows(const HPolytope& p);

} // namespace totmatch

#endif
