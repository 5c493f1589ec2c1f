#ifndef TOTMATCH_DD_HPP
#define TOTMATCH_DD_HPP

#include "totmatch/inequality.hpp"

namespace totmatch {

inline constexpr int kDefaultDimensionLimit = 15;

// { x : eq.x = 0, ineq.x >= 0 } as a lineality basis plus extreme rays of the
// pointed part. Rays are normalized to coprime integers and sorted; the
// lineality basis is in reduced echelon form.
struct ConeDescription {
    QMat lineality;
    QMat rays;
};

ConeDescription dd_cone(const QMat& equalities, const QMat& inequalities);

// Irredundant facet description of conv(vertices). Emits affine-hull
// equalities first when the hull is not full-dimensional. Throws LimitError
// when the ambient dimension exceeds `dimension_limit`.
HPolytope dd_hull(const VPolytope& v, int dimension_limit = kDefaultDimensionLimit);

// Extreme rays of a cone given by rows with zero right-hand sides. The limit
// applies to the cone's dimension after equality reduction.
QMat dd_rays(const HPolytope& cone, int dimension_limit = kDefaultDimensionLimit);

// V-representation of { x : rows }, by double description on the
// homogenization. Vertices and rays are sorted.
VPolytope enumerate_vertices(const HPolytope& p, int dimension_limit = kDefaultDimensionLimit);

} // namespace totmatch

#endif
