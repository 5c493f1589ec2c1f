#ifndef TOTMATCH_BALAS_HPP
#define TOTMATCH_BALAS_HPP

#include "totmatch/dd.hpp"
#include "totmatch/inequality.hpp"
#include "totmatch/simplex.hpp"

#include <optional>

namespace totmatch {

// Lifted coordinates (x over V, y over E, l1, y1 over E), length n + 2m + 1.
using ExtendedVector = QVec;
// Multiplier coordinates (u1 over V, u2 over V, u1 over E, u2 over E, ul1,
// ul2), length 2(n + m + 1), all entries nonnegative.
using ConeRay = QVec;

Space lifted_space(int r, int s);
Space cone_space(int r, int s);

// P_A: total matchings avoiding side B (node rows on A, star rows on B,
// nonnegativity, x = 0 equalities on B); P_B symmetric. Both live in the
// full element space.
std::pair<HPolytope, HPolytope> build_PA_PB(int r, int s);

// The two-disjunct union formulation with lambda_2 and x^1 eliminated. Rows
// appear in a fixed order and carry their dual multiplier id as note; the
// -x_v <= 0 rows are unlabeled since they bound projected variables.
HPolytope build_Q(int r, int s);

// A feasible point of Q over z, when z lies in the total matching polytope.
std::optional<ExtendedVector> lift_point(const QVec& z, int r, int s);

struct QSolution {
    Rational value;
    QVec projected; // (x, y) part of an optimal point of Q
};

// Exact maximum over Q of an (x, y) objective extended by zeros.
QSolution solve_over_Q(int r, int s, const QVec& objective);

// Multipliers annihilating the lifted columns: one equality per edge,
//   u1_v + u1_w - u1_e = u2_v + u2_w - u2_e,
// the balance equality sum u1 + ul1 = sum u2 + ul2, and u >= 0.
HPolytope projection_cone(int r, int s);

// The same cone computed directly from build_Q's labeled rows; used to
// cross-check projection_cone.
HPolytope projection_cone_from_rows(const HPolytope& q, int r, int s);

struct ProjectedRow {
    LinearInequality strengthened; // edge coeffs min_j(u^j_v + u^j_w), rhs max_j sum u^j
    LinearInequality raw;          // edge coeffs u2_v + u2_w - u2_e, rhs sum u2 + ul2
};

// Maps a cone member to its induced inequality over (x, y). The strengthened
// form dominates the raw form coefficient-wise on the nonnegative orthant.
ProjectedRow ray_to_inequality(const ConeRay& u, int r, int s);

// Enumerates extreme rays of the projection cone, maps them through
// ray_to_inequality, adds nonnegativity, and filters implied rows.
HPolytope project_Q(int r, int s, int dimension_limit = kDefaultDimensionLimit);

} // namespace totmatch

#endif
